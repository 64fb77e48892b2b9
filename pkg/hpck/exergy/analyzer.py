# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Exergy accounting of the cycle against a dead state (T0, P0).

Refrigerant streams use the tabulated h and s, the heat-transfer fluid is an
incompressible liquid with constant c_p. Rates are in W, specific exergies in
kJ/kg. Components are adiabatic, so the heat-leak exergy term is zero.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Tuple

from hpck.common.errors import InputError
from hpck.cycle.solver import KELVIN, DegenerateCarnot
from hpck.properties.property_set import REFERENCE_CONVENTION, dead_state

logger = logging.getLogger(__name__)

COMPONENTS = ('evaporator', 'compressor', 'condenser', 'TEV')
# Round-off allowance before a negative destruction is treated as an error, W
NEGATIVE_TOLERANCE = -0.5


class ConventionMismatch(InputError):
    pass


class NegativeDestruction(InputError):
    pass


class ZeroTotal(InputError):
    pass


class ZeroDenominator(InputError):
    pass


class HtfOutOfRange(InputError):
    pass


@dataclass(frozen=True)
class DeadState:
    T0: float = 20.0
    P0: float = 101.325
    refrigerant_h0: float = 0.0
    refrigerant_s0: float = 0.0
    refrigerant: object = None
    convention: str = REFERENCE_CONVENTION
    htf_cp: float = 4.186

    @property
    def T0_K(self):
        return self.T0 + KELVIN


@dataclass(frozen=True)
class FlowExergy:
    point_id: object
    specific: float  # kJ/kg
    rate: float  # W


@dataclass(frozen=True)
class ExergyReport:
    flows: Dict[int, FlowExergy]
    destruction: Dict[str, float]
    cycle_destruction: float
    relative: Dict[str, float]
    efficiencies: Dict[str, float]
    dead: DeadState
    E_Q: float = 0.0
    balance: Tuple[float, float] = field(default=(0.0, 0.0))

    def rate(self, point_id):
        return self.flows[point_id].rate


def make_dead_state(props, T0=20.0, P0=101.325, htf_cp=4.186):
    state = dead_state(props, T0, P0)
    return DeadState(T0, P0, state.h, state.s, props.refrigerant, props.reference_convention, htf_cp)


def refrigerant_flow_exergy(state, m_dot, dead, point_id=None):
    """e = (h - h0) - T0 (s - s0); rate = m_dot * e."""
    if state.refrigerant != dead.refrigerant or state.convention != dead.convention:
        raise ConventionMismatch('State of {} ({}) measured against dead state of {} ({})'.format(
            state.refrigerant, state.convention, dead.refrigerant, dead.convention))
    specific = (state.h - dead.refrigerant_h0) - dead.T0_K * (state.s - dead.refrigerant_s0)
    return FlowExergy(point_id, specific, m_dot * specific * 1000.0)


def water_flow_exergy(T, m_dot, dead, point_id=None):
    if not (0.0 < T < 100.0):
        raise HtfOutOfRange('HTF temperature {} C outside 0 .. 100 C'.format(T))
    cp = dead.htf_cp
    specific = cp * (T - dead.T0) - dead.T0_K * cp * math.log((T + KELVIN) / dead.T0_K)
    return FlowExergy(point_id, specific, m_dot * specific * 1000.0)


def flow_exergies(points, sol, dead):
    """Flow exergies of points 1..8 keyed by point number."""
    T2 = points.T2 if points.T2 is not None else sol.T2
    T8 = points.T8 if points.T8 is not None else sol.T8
    m = sol.m_ref
    return {
        1: water_flow_exergy(points.T1, sol.m_htf1, dead, 1),
        2: water_flow_exergy(T2, sol.m_htf1, dead, 2),
        3: refrigerant_flow_exergy(points.state3, m, dead, 3),
        4: refrigerant_flow_exergy(points.state4, m, dead, 4),
        5: refrigerant_flow_exergy(points.state5, m, dead, 5),
        6: refrigerant_flow_exergy(points.state6, m, dead, 6),
        7: water_flow_exergy(points.T7, sol.m_htf2, dead, 7),
        8: water_flow_exergy(T8, sol.m_htf2, dead, 8),
    }


def _rates(points, sol, dead, flows=None):
    flows = flows or flow_exergies(points, sol, dead)
    return {k: v.rate for k, v in flows.items()}


def _check_destructions(dest):
    for name, value in dest.items():
        if value < NEGATIVE_TOLERANCE:
            raise NegativeDestruction('{} exergy destruction is {:.3f} W'.format(name, value))


def component_destructions(points, sol, dead, flows=None):
    """Exergy destruction of each component, W."""
    E = _rates(points, sol, dead, flows)
    W = sol.W_elec_comp * 1000.0
    dest = {
        'evaporator': (E[1] + E[6]) - (E[2] + E[3]),
        'compressor': E[3] + W - E[4],
        'condenser': (E[4] + E[7]) - (E[5] + E[8]),
        'TEV': E[5] - E[6],
    }
    _check_destructions(dest)
    return dest


def cycle_destruction_and_relative(dest):
    """Returns (total, {component: share of total})."""
    _check_destructions(dest)
    total = sum(dest[c] for c in COMPONENTS)
    if total == 0:
        raise ZeroTotal('Cycle exergy destruction is zero')
    return total, {c: dest[c] / total for c in COMPONENTS}


def _ratio(num, den, name):
    if den == 0:
        raise ZeroDenominator('{} efficiency has a zero denominator'.format(name))
    return num / den


def component_exergy_efficiencies(points, sol, dead, flows=None):
    E = _rates(points, sol, dead, flows)
    W = sol.W_elec_comp * 1000.0
    return {
        'evaporator': _ratio(E[1] - E[2], E[3] - E[6], 'evaporator'),
        'compressor': _ratio(E[4] - E[3], W, 'compressor'),
        'condenser': _ratio(E[8] - E[7], E[4] - E[5], 'condenser'),
        'TEV': _ratio(E[6], E[5], 'TEV'),
    }


def system_exergy_efficiencies(points, sol, dead, cond, flows=None):
    E = _rates(points, sol, dead, flows)
    if cond.T_sink == cond.T_source:
        raise DegenerateCarnot('T_sink equals T_source, second-law efficiency undefined')
    COP_carnot = (cond.T_sink + KELVIN) / (cond.T_sink - cond.T_source)
    COP_cycle = sol.Q_cond / sol.W_elec_comp
    return {
        'cycle': _ratio(E[8] - E[7], sol.W_elec_comp * 1000.0, 'cycle'),
        'system': _ratio(E[8] - E[7], sol.W_elec_total * 1000.0, 'system'),
        'second_law': COP_cycle / COP_carnot,
    }


def analyze_exergy(sol, cond, props):
    """Full exergy report of a solved cycle."""
    dead = make_dead_state(props, cond.T0, cond.P0, cond.htf_cp)
    points = sol.points
    flows = flow_exergies(points, sol, dead)
    dest = component_destructions(points, sol, dead, flows)
    total, relative = cycle_destruction_and_relative(dest)
    efficiencies = component_exergy_efficiencies(points, sol, dead, flows)
    efficiencies.update(system_exergy_efficiencies(points, sol, dead, cond, flows))
    E = {k: v.rate for k, v in flows.items()}
    # Supplied minus recovered exergy; equals the total destruction
    balance = (total, sol.W_elec_comp * 1000.0 + (E[1] - E[2]) - (E[8] - E[7]))
    logger.debug('%s: cycle exergy destruction %.2f W', props.refrigerant, total)
    return ExergyReport(flows, dest, total, relative, efficiencies, dead, 0.0, balance)
