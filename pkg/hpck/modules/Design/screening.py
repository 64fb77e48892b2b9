# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from hpck.scenario.validate import CheckResult

TYPE = 'Design'
NAME = 'screening'
DEFAULTCONF = {
    'ENABLED': True,
    'tolerance_pct': 5.0,
}

TARGETS = (
    ('R152a', 'm_ref_gs'),
    ('R152a', 'VRC_kJm3'),
    ('R450A', 'm_ref_gs'),
    ('R1234ze(E)', 'm_ref_gs'),
)


def check(context, conf=DEFAULTCONF):
    rows = context.design_by_refrigerant()
    return any(name in rows for name, _ in TARGETS)


def scan(context, conf=DEFAULTCONF):
    '''Refrigerant mass flow and volumetric capacity at the design point'''
    tol = conf['tolerance_pct']
    rows = context.design_by_refrigerant()
    results = []
    for name, column in TARGETS:
        if name not in rows:
            continue
        expected = context.refs.screening['{}_{}'.format(name, column)]
        computed = float(rows[name][column])
        results.append(CheckResult('{} {}'.format(name, column), expected, computed, '{}%'.format(tol),
                                   abs(computed - expected) <= expected * tol / 100.0))

    records = [r for r in rows.values() if 'h_fg_evap_kJkg' in r]
    if len(records) > 1:
        pairs = sorted((float(r['h_fg_evap_kJkg']), float(r['m_ref_gs']), r['refrigerant']) for r in records)
        decreasing = all(a[1] > b[1] for a, b in zip(pairs, pairs[1:]))
        results.append(CheckResult('m_ref decreases with latent heat', 'strictly decreasing',
                                   ', '.join('{}:{:.1f}'.format(p[2], p[1]) for p in pairs), None, decreasing))

    metadata = {}
    metadata['Name'] = NAME
    metadata['Type'] = TYPE
    return (results, metadata)
