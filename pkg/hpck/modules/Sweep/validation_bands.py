# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from hpck.scenario.validate import CheckResult

TYPE = 'Sweep'
NAME = 'validation_bands'
DEFAULTCONF = {
    'ENABLED': True,
    # The test rig runs on R134a
    'refrigerant': 'R134a',
    'margins': {'Q_cond_kW': 0.15, 'Q_evap_kW': 0.12, 'COP_cycle': 0.10, 'COP_system': 0.10},
}


def _sweep(context, conf):
    rows = [r for r in context.sweep if r['refrigerant'] == conf['refrigerant']]
    return sorted(rows, key=lambda r: float(r['T_sink_C']))


def check(context, conf=DEFAULTCONF):
    return len(_sweep(context, conf)) > 0


def scan(context, conf=DEFAULTCONF):
    '''Model results over the sink temperature sweep against the published model bands'''
    rows = _sweep(context, conf)
    results = []
    for column, (lo, hi) in context.refs.validation_bands.items():
        margin = conf['margins'][column]
        values = [float(r[column]) for r in rows]
        inside = all(lo - margin <= v <= hi + margin for v in values)
        results.append(CheckResult('{} {} band'.format(conf['refrigerant'], column), (lo, hi),
                                   (min(values), max(values)), margin, inside))
        if len(values) > 1:
            decreasing = all(a > b for a, b in zip(values, values[1:]))
            results.append(CheckResult('{} {} decreases with T_sink'.format(conf['refrigerant'], column),
                                       'strictly decreasing', ', '.join('{:.4f}'.format(v) for v in values),
                                       None, decreasing))

    metadata = {}
    metadata['Name'] = NAME
    metadata['Type'] = TYPE
    metadata['Points'] = len(rows)
    return (results, metadata)
