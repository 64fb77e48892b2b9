# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Plot-ready series. Nothing is rendered, each series is a CSV table whose
first column after refrigerant is the abscissa:

    latent-heat  h_fg at T_evap against refrigerant mass flow
    capacity     mass flow and volumetric refrigerating capacity
    condenser    condenser exergy efficiency against discharge temperature
    normalized   COP/TEWI and exergy efficiency/destruction relative to a baseline
    validation   model Q and COP against T_sink with the measured band limits
"""
from hpck.environment.normalize import REPORT_FIELDS, TRACKED_METRICS, metrics_from_records, normalize_vs_baseline
from hpck.properties.refrigerants import RefrigerantId
from hpck.scenario.reference import REFERENCE
from hpck.storage import storage
from hpck.storage.csv_file import write_rows

VALIDATION_QUANTITIES = ('Q_cond_kW', 'Q_evap_kW', 'COP_cycle', 'COP_system')


class MissingSeriesData(storage.ReportIoError):
    pass


def _columns(records, columns):
    try:
        return [{c: record[c] for c in columns} for record in records]
    except KeyError as e:
        raise MissingSeriesData('Results have no {} column for this plot series'.format(e))


def latent_heat_series(records, baseline=None):
    columns = ['refrigerant', 'h_fg_evap_kJkg', 'm_ref_gs']
    return _columns(records, columns), columns


def capacity_series(records, baseline=None):
    columns = ['refrigerant', 'm_ref_gs', 'VRC_kJm3']
    return _columns(records, columns), columns


def condenser_series(records, baseline=None):
    columns = ['refrigerant', 'T4_C', 'eta_cond_ex_pct']
    return _columns(records, columns), columns


def normalized_series(records, baseline=None):
    baseline = RefrigerantId.parse(baseline or RefrigerantId.R134A)
    _columns(records, ['refrigerant'] + list(REPORT_FIELDS.values()))
    comparison = normalize_vs_baseline(metrics_from_records(records), baseline)
    columns = ['refrigerant'] + ['{}_ratio'.format(name) for name in TRACKED_METRICS]
    rows = []
    seen = set()
    for record in records:
        rid = RefrigerantId.parse(record['refrigerant'])
        if rid in seen:
            continue
        seen.add(rid)
        row = {'refrigerant': rid.value}
        for name in TRACKED_METRICS:
            row['{}_ratio'.format(name)] = comparison.ratios[rid][name]
        rows.append(row)
    return rows, columns


def validation_series(records, baseline=None):
    columns = ['refrigerant', 'T_sink_C'] + list(VALIDATION_QUANTITIES)
    rows = _columns(records, columns)
    for name in VALIDATION_QUANTITIES:
        low, high = REFERENCE.measured_ranges[name]
        columns += ['measured_{}_low'.format(name), 'measured_{}_high'.format(name)]
        for row in rows:
            row['measured_{}_low'.format(name)] = low
            row['measured_{}_high'.format(name)] = high
    return rows, columns


SERIES = {
    'latent-heat': latent_heat_series,
    'capacity': capacity_series,
    'condenser': condenser_series,
    'normalized': normalized_series,
    'validation': validation_series,
}


class PlotData(storage.Storage):
    FORMAT = 'plot-data'
    DEFAULTCONF = {
        'ENABLED': True,
        'float_format': '.10g',
    }

    def setup(self):
        if self.series not in SERIES:
            raise storage.UnknownFormat('Plot series must be one of {}, got {!r}'.format(
                ', '.join(sorted(SERIES)), self.series))
        return super(PlotData, self).setup()

    def store(self, records, columns):
        rows, columns = SERIES[self.series](records, self.baseline)
        write_rows(self.file_handle, rows, columns, self.config['float_format'])
