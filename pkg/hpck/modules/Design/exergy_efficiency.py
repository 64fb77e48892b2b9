# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
import numpy as np

from hpck.properties.refrigerants import RefrigerantId
from hpck.scenario.validate import CheckResult

TYPE = 'Design'
NAME = 'exergy_efficiency'
DEFAULTCONF = {
    'ENABLED': True,
    'component_tolerance_pp': 2.0,
    # Evaporator efficiency is a small difference of large flow exergies
    'column_tolerance_pp': {'eta_evap_ex_pct': 7.5},
    # Condenser efficiencies closer than this count as equal
    'tie_pp': 0.2,
}

COLUMNS = ('eta_evap_ex_pct', 'eta_comp_ex_pct', 'eta_cond_ex_pct', 'eta_tev_ex_pct')


def check(context, conf=DEFAULTCONF):
    return bool(context.design)


def _extreme_check(name, rid, bound, cond, extreme, tol, tie):
    """rid must hold the extreme value, up to tie, and sit within tol of bound."""
    value = cond[rid]
    holds = abs(value - cond[extreme]) <= tie and abs(value - bound) <= tol
    return CheckResult(name, '{} {}'.format(rid.value, bound), '{} {:.4g}'.format(extreme.value, cond[extreme]),
                       '{} pp, ties {} pp'.format(tol, tie), holds)


def _trend_check(pairs, tie):
    """Non-increasing within tie at every step, and falling overall."""
    T4 = np.array([t for t, _ in pairs])
    eta = np.array([e for _, e in pairs])
    steps_hold = bool(np.all(np.diff(eta) <= tie))
    slope = np.polyfit(T4, eta, 1)[0] if np.ptp(T4) > 0 else 0.0
    falling = eta[-1] < eta[0] and slope < 0
    return CheckResult('eta_cond_ex decreases with T4', 'decreasing, ties {} pp'.format(tie),
                       ', '.join('{:.2f}:{:.2f}'.format(t, e) for t, e in pairs), 'slope {:.4g}'.format(slope),
                       steps_hold and bool(falling))


def scan(context, conf=DEFAULTCONF):
    '''Component exergy efficiencies and the condenser trend'''
    tol = conf['component_tolerance_pp']
    column_tol = conf.get('column_tolerance_pp') or {}
    tie = conf['tie_pp']
    refs = context.refs
    rows = context.design_by_refrigerant()
    results = []
    present = [rid for rid in refs.cop_order if rid.value in rows]

    for rid in present:
        record = rows[rid.value]
        ref = refs.design_results[rid]
        for column in COLUMNS:
            expected = getattr(ref, column)
            computed = float(record[column])
            allowed = column_tol.get(column, tol)
            results.append(CheckResult('{} {}'.format(rid.value, column), expected, computed,
                                       '{} pp'.format(allowed), abs(computed - expected) <= allowed))

    if len(present) == len(refs.cop_order):
        cond = {rid: float(rows[rid.value]['eta_cond_ex_pct']) for rid in present}
        lo, hi = refs.component_ranges['eta_cond_ex_pct']
        results.append(_extreme_check('eta_cond_ex minimum', RefrigerantId.R152A, lo, cond,
                                      min(cond, key=cond.get), tol, tie))
        results.append(_extreme_check('eta_cond_ex maximum', RefrigerantId.R1234YF, hi, cond,
                                      max(cond, key=cond.get), tol, tie))

        if all('T4_C' in rows[rid.value] for rid in present):
            pairs = sorted((float(rows[rid.value]['T4_C']), cond[rid]) for rid in present)
            results.append(_trend_check(pairs, tie))

    metadata = {}
    metadata['Name'] = NAME
    metadata['Type'] = TYPE
    return (results, metadata)
