# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from hpck.scenario.validate import CheckResult

TYPE = 'Design'
NAME = 'second_law'
DEFAULTCONF = {
    'ENABLED': True,
    'carnot_tolerance': 0.0005,
    'efficiency_tolerance_pp': 1.5,
}


def check(context, conf=DEFAULTCONF):
    return bool(context.design)


def scan(context, conf=DEFAULTCONF):
    '''Reverse-Carnot COP, second-law, cycle and system exergy efficiencies'''
    tol = conf['efficiency_tolerance_pp']
    refs = context.refs
    rows = context.design_by_refrigerant()
    results = []

    carnot = float(context.design[0]['COP_carnot'])
    results.append(CheckResult('COP_carnot', refs.COP_carnot, carnot, conf['carnot_tolerance'],
                               abs(carnot - refs.COP_carnot) <= conf['carnot_tolerance']))

    for rid in refs.cop_order:
        record = rows.get(rid.value)
        if record is None:
            continue
        ref = refs.design_results[rid]
        for column in ('eta_2nd_pct', 'eta_cycle_ex_pct', 'eta_system_ex_pct'):
            expected = getattr(ref, column)
            computed = float(record[column])
            results.append(CheckResult('{} {}'.format(rid.value, column), expected, computed,
                                       '{} pp'.format(tol), abs(computed - expected) <= tol))
        # eta_2nd is COP_cycle / COP_carnot by construction
        ratio = float(record['COP_cycle']) / float(record['COP_carnot']) * 100.0
        results.append(CheckResult('{} eta_2nd = COP_cycle / COP_carnot'.format(rid.value), ratio,
                                   float(record['eta_2nd_pct']), 1e-9,
                                   abs(ratio - float(record['eta_2nd_pct'])) <= 1e-9 * max(1.0, ratio)))

    metadata = {}
    metadata['Name'] = NAME
    metadata['Type'] = TYPE
    return (results, metadata)
