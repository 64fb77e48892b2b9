# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from hpck.environment.tewi import TewiInputs, tewi
from hpck.properties.refrigerants import RefrigerantId
from hpck.scenario.validate import CheckResult

TYPE = 'Environment'
NAME = 'tewi_ranking'
DEFAULTCONF = {
    'ENABLED': True,
    # Absolute indirect emissions depend on undisclosed parameters
    'indirect_cross_check': False,
    'indirect_tolerance_pct': 5.0,
}


def check(context, conf=DEFAULTCONF):
    return True


def scan(context, conf=DEFAULTCONF):
    '''Warming impact arithmetic and the refrigerant ranking it produces'''
    results = []
    no_gwp = tewi(TewiInputs(gwp=0.0, charge_m=2.0, leak_rate_L=5.0, life_n=15.0, recovery_alpha=70.0,
                             annual_energy_E=2000.0, emission_factor_beta=0.8))
    results.append(CheckResult('TEWI direct with GWP 0', 0.0, no_gwp.direct, 0.0, no_gwp.direct == 0.0))
    results.append(CheckResult('TEWI total with GWP 0', 2000.0 * 0.8 * 15.0, no_gwp.total, 1e-9,
                               abs(no_gwp.total - 24000.0) <= 1e-9))
    hand = tewi(TewiInputs(gwp=1430.0, charge_m=2.0, leak_rate_L=5.0, life_n=15.0, recovery_alpha=70.0))
    results.append(CheckResult('TEWI direct hand case', 3003.0, hand.direct, 1e-9, abs(hand.direct - 3003.0) <= 1e-9))

    rows = context.design_by_refrigerant()
    refs = context.refs
    if all(rid.value in rows for rid in refs.cop_order):
        total = {name: float(r['TEWI_total_kg']) for name, r in rows.items()}
        direct = {name: float(r['TEWI_direct_kg']) for name, r in rows.items()}
        lowest = min(total, key=total.get)
        largest = max(direct, key=direct.get)
        results.append(CheckResult('lowest TEWI total', RefrigerantId.R152A.value, lowest, None,
                                   lowest == RefrigerantId.R152A.value))
        results.append(CheckResult('largest TEWI direct', RefrigerantId.R134A.value, largest, None,
                                   largest == RefrigerantId.R134A.value))
        if conf['indirect_cross_check']:
            tol = conf['indirect_tolerance_pct']
            for rid, tonnes in refs.tewi_indirect_t.items():
                computed = float(rows[rid.value]['TEWI_indirect_kg']) / 1000.0
                results.append(CheckResult('{} TEWI indirect (t)'.format(rid.value), tonnes, computed,
                                           '{}%'.format(tol), abs(computed - tonnes) <= tonnes * tol / 100.0))

    metadata = {}
    metadata['Name'] = NAME
    metadata['Type'] = TYPE
    return (results, metadata)
