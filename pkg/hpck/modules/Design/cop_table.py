# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from hpck.scenario.validate import CheckResult

TYPE = 'Design'
NAME = 'cop_table'
DEFAULTCONF = {
    'ENABLED': True,
    'cop_tolerance_pct': 5.0,
}


def check(context, conf=DEFAULTCONF):
    return bool(context.design)


def scan(context, conf=DEFAULTCONF):
    '''Design-point COPs against the published table and their ranking'''
    tol = conf['cop_tolerance_pct']
    rows = context.design_by_refrigerant()
    results = []
    present = []
    for rid in context.refs.cop_order:
        record = rows.get(rid.value)
        if record is None:
            continue
        present.append(rid)
        ref = context.refs.design_results[rid]
        for column in ('COP_cycle', 'COP_system'):
            expected = getattr(ref, column)
            computed = float(record[column])
            passed = abs(computed - expected) <= expected * tol / 100.0
            results.append(CheckResult('{} {}'.format(rid.value, column), expected, computed,
                                       '{}%'.format(tol), passed))

    if len(present) > 1:
        cops = [float(rows[rid.value]['COP_cycle']) for rid in present]
        passed = all(a > b for a, b in zip(cops, cops[1:]))
        results.append(CheckResult('COP_cycle ordering', ' > '.join(r.value for r in present),
                                   ', '.join('{:.4f}'.format(c) for c in cops), 'strict', passed))

    metadata = {}
    metadata['Name'] = NAME
    metadata['Type'] = TYPE
    metadata['Refrigerants'] = [r.value for r in present]
    return (results, metadata)
