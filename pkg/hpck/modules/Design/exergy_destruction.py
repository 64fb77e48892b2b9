# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from hpck.properties.refrigerants import RefrigerantId
from hpck.scenario.validate import CheckResult

TYPE = 'Design'
NAME = 'exergy_destruction'
DEFAULTCONF = {
    'ENABLED': True,
    'total_tolerance_pct': 8.0,
    'share_tolerance_pp': 3.0,
}

COLUMNS = {
    'compressor': 'Edest_comp_W',
    'TEV': 'Edest_tev_W',
    'evaporator': 'Edest_evap_W',
    'condenser': 'Edest_cond_W',
}


def _tev_share(record):
    return float(record['Edest_tev_W']) / float(record['Edest_cycle_W']) * 100.0


def check(context, conf=DEFAULTCONF):
    return bool(context.design)


def scan(context, conf=DEFAULTCONF):
    '''Component ranking of exergy destruction, cycle totals and the valve share'''
    refs = context.refs
    rows = context.design_by_refrigerant()
    present = [rid for rid in refs.cop_order if rid.value in rows]
    results = []

    for rid in present:
        record = rows[rid.value]
        values = [float(record[COLUMNS[c]]) for c in refs.destruction_order]
        passed = all(a > b for a, b in zip(values, values[1:]))
        results.append(CheckResult('{} destruction ordering'.format(rid.value), ' > '.join(refs.destruction_order),
                                   ', '.join('{:.1f}'.format(v) for v in values), 'strict', passed))

    if len(present) == len(refs.cop_order):
        tol = conf['total_tolerance_pct']
        totals = {rid: float(rows[rid.value]['Edest_cycle_W']) for rid in present}
        lowest = min(totals, key=totals.get)
        highest = max(totals, key=totals.get)
        for label, rid, expected in (('minimum', lowest, refs.screening['Edest_cycle_min_W']),
                                     ('maximum', highest, refs.screening['Edest_cycle_max_W'])):
            wanted = RefrigerantId.R152A if label == 'minimum' else RefrigerantId.R1234YF
            passed = rid is wanted and abs(totals[rid] - expected) <= expected * tol / 100.0
            results.append(CheckResult('Edest_cycle {}'.format(label), '{} {}'.format(wanted.value, expected),
                                       '{} {:.1f}'.format(rid.value, totals[rid]), '{}%'.format(tol), passed))

        share_tol = conf['share_tolerance_pp']
        first, last = refs.cop_order[0], refs.cop_order[-1]
        for rid, expected in ((first, refs.tev_share_pct[0]), (last, refs.tev_share_pct[1])):
            share = _tev_share(rows[rid.value])
            results.append(CheckResult('{} TEV share of destruction (%)'.format(rid.value), expected, share,
                                       '{} pp'.format(share_tol), abs(share - expected) <= share_tol))

    metadata = {}
    metadata['Name'] = NAME
    metadata['Type'] = TYPE
    return (results, metadata)
