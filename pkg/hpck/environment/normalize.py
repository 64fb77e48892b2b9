# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from dataclasses import dataclass
from typing import Dict

from hpck.common.errors import InputError
from hpck.properties.refrigerants import RefrigerantId

TRACKED_METRICS = ('COP_cycle', 'TEWI_total', 'eta_cycle_ex', 'E_dest_cycle')

# Report columns feeding each tracked metric
REPORT_FIELDS = {
    'COP_cycle': 'COP_cycle',
    'TEWI_total': 'TEWI_total_kg',
    'eta_cycle_ex': 'eta_cycle_ex_pct',
    'E_dest_cycle': 'Edest_cycle_W',
}


class ZeroBaseline(InputError):
    pass


class MissingBaseline(InputError):
    pass


@dataclass(frozen=True)
class NormalizedComparison:
    baseline: RefrigerantId
    ratios: Dict[RefrigerantId, Dict[str, float]]

    def ratio(self, refrigerant, metric):
        return self.ratios[RefrigerantId.parse(refrigerant)][metric]


def normalize_vs_baseline(metrics, baseline=RefrigerantId.R134A):
    """
    Divides every refrigerant's metrics by the baseline refrigerant's.

    metrics - {refrigerant: {metric: value}} with the TRACKED_METRICS keys
    baseline - Refrigerant whose values become 1
    """
    baseline = RefrigerantId.parse(baseline)
    metrics = {RefrigerantId.parse(k): v for k, v in metrics.items()}
    if baseline not in metrics:
        raise MissingBaseline('Baseline {} is not among the compared refrigerants'.format(baseline))
    base = metrics[baseline]
    for name in TRACKED_METRICS:
        if name not in base:
            raise MissingBaseline('Baseline {} has no {} value'.format(baseline, name))
        if base[name] == 0:
            raise ZeroBaseline('Baseline {} has {} = 0'.format(baseline, name))
    ratios = {}
    for rid, values in metrics.items():
        if rid == baseline:
            ratios[rid] = {name: 1.0 for name in TRACKED_METRICS}
        else:
            ratios[rid] = {name: values[name] / base[name] for name in TRACKED_METRICS}
    return NormalizedComparison(baseline, ratios)


def metrics_from_records(records):
    """Tracked metrics per refrigerant from report records; the first record of each refrigerant wins."""
    out = {}
    for record in records:
        rid = RefrigerantId.parse(record['refrigerant'])
        if rid in out:
            continue
        out[rid] = {name: record[column] for name, column in REPORT_FIELDS.items()}
    return out
