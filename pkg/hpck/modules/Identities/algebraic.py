# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
import logging

from hpck.common.errors import HpckError
from hpck.cycle.conditions import FixedCapacity, MeasuredPower, design_point_conditions, with_mode
from hpck.cycle.solver import simulate
from hpck.exergy.analyzer import COMPONENTS, analyze_exergy
from hpck.scenario.validate import CheckResult

logger = logging.getLogger(__name__)

TYPE = 'Identities'
NAME = 'algebraic'
DEFAULTCONF = {
    'ENABLED': True,
    'rel_tolerance': 1e-6,
    # Reference state shift applied to every h and s of a fluid
    'shift_h': 25.0,
    'shift_s': 0.1,
    # Compressor power for the mode round trip, kW
    'W_elec_comp': 1.5,
}


def _rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-12)


def _same(a, b, tol):
    return _rel(a, b) <= tol or abs(a - b) <= 1e-9


def _identities(rid, ps, conf):
    tol = conf['rel_tolerance']
    label = rid.value
    results = []
    cond = design_point_conditions()
    sol = simulate(cond, ps)
    pts = sol.points

    balance = sol.Q_evap + sol.W_comp
    results.append(CheckResult('{} Q_cond = Q_evap + W_comp'.format(label), sol.Q_cond, balance, tol,
                               _same(sol.Q_cond, balance, tol)))
    w_elec = sol.m_ref * (pts.state4s.h - pts.state3.h) / (sol.eta_comp * sol.eta_drive)
    results.append(CheckResult('{} W_elec_comp = m (h4s - h3) / (eta_comp eta_drive)'.format(label),
                               sol.W_elec_comp, w_elec, tol, _same(sol.W_elec_comp, w_elec, tol)))

    report = analyze_exergy(sol, cond, ps)
    total, supplied = report.balance
    results.append(CheckResult('{} exergy balance'.format(label), total, supplied, tol, _same(total, supplied, tol)))
    share = sum(report.relative.values())
    results.append(CheckResult('{} relative destructions sum'.format(label), 1.0, share, tol, _same(1.0, share, tol)))

    shifted = ps.shifted(conf['shift_h'], conf['shift_s'])
    moved = analyze_exergy(simulate(cond, shifted), cond, shifted)
    worst = 0.0
    for c in COMPONENTS:
        worst = max(worst, _rel(report.destruction[c], moved.destruction[c]),
                    _rel(report.relative[c], moved.relative[c]))
    for key in report.efficiencies:
        worst = max(worst, _rel(report.efficiencies[key], moved.efficiencies[key]))
    results.append(CheckResult('{} reference state shift invariance'.format(label), 0.0, worst, tol, worst <= tol))

    measured = simulate(with_mode(cond, MeasuredPower(conf['W_elec_comp'])), ps)
    fixed = simulate(with_mode(cond, FixedCapacity(measured.Q_cond)), ps)
    results.append(CheckResult('{} mode round trip m_ref'.format(label), measured.m_ref, fixed.m_ref, tol,
                               _same(measured.m_ref, fixed.m_ref, tol)))
    results.append(CheckResult('{} mode round trip W_elec_comp'.format(label), measured.W_elec_comp,
                               fixed.W_elec_comp, tol, _same(measured.W_elec_comp, fixed.W_elec_comp, tol)))
    return results


def check(context, conf=DEFAULTCONF):
    return bool(context.property_sets)


def scan(context, conf=DEFAULTCONF):
    '''Energy and exergy identities of the design-point cycle for each loaded fluid'''
    results = []
    for rid, ps in sorted(context.property_sets.items(), key=lambda item: item[0].value):
        try:
            results.extend(_identities(rid, ps, conf))
        except HpckError as e:
            logger.error('%s: identities could not be evaluated: %s', rid, e)
            results.append(CheckResult('{} identities'.format(rid.value), 'solvable design point', str(e), None,
                                       False))

    metadata = {}
    metadata['Name'] = NAME
    metadata['Type'] = TYPE
    return (results, metadata)
