# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Single-stage vapor-compression cycle.

Refrigerant points: 3 evaporator outlet (suction), 4s/4 compressor discharge
(isentropic/real), 5 condenser outlet, 6 evaporator inlet after the
expansion valve. HTF points: 1/2 ground loop in/out of the evaporator, 7/8
tank loop in/out of the condenser. No pressure drops or heat losses.
"""
import logging
from dataclasses import dataclass, replace
from typing import Optional

from hpck.common.errors import InputError
from hpck.cycle.compressor import (compressor_isentropic_efficiency, compressor_overall_efficiency,
                                   electromechanical_efficiency)
from hpck.cycle.conditions import FixedCapacity, MeasuredPower, OperatingConditions
from hpck.properties.property_set import (ThermoState, latent_heat, saturated_state, saturation_pressure,
                                          state_at_enthalpy, state_at_entropy, subcooled_state,
                                          superheated_state, two_phase_state)

logger = logging.getLogger(__name__)

KELVIN = 273.15


class InvalidCycle(InputError):
    pass


class DegenerateCarnot(InputError):
    pass


@dataclass(frozen=True)
class CycleStatePoints:
    state3: ThermoState
    state4s: ThermoState
    state4: ThermoState
    state5: ThermoState
    state6: ThermoState
    T1: float
    T7: float
    T_evap: float
    T_cond: float
    P_evap: float
    P_cond: float
    eta_isen: float
    latent_heat_evap: float
    T2: Optional[float] = None
    T8: Optional[float] = None

    @property
    def refrigerant(self):
        return self.state3.refrigerant


@dataclass(frozen=True)
class CycleSolution:
    points: CycleStatePoints
    m_ref: float  # kg/s
    Q_evap: float  # kW
    Q_cond: float
    W_comp: float
    W_elec_comp: float
    W_elec_total: float
    eta_isen: float
    eta_comp: float
    eta_prime_comp: float
    VRC: float  # kJ/m3
    m_htf1: float  # kg/s
    m_htf2: float
    eta_drive: float = 1.0
    COP_cycle: Optional[float] = None
    COP_system: Optional[float] = None
    COP_carnot: Optional[float] = None

    @property
    def refrigerant(self):
        return self.points.refrigerant

    @property
    def T2(self):
        return self.points.T2

    @property
    def T8(self):
        return self.points.T8


def solve_state_points(cond, props, eta_isen=None):
    """
    Resolves the refrigerant state points for a set of operating conditions.

    cond - OperatingConditions
    props - PropertySet of the working fluid
    eta_isen - Forces the isentropic efficiency instead of the correlation
    """
    T_evap, T_cond = cond.T_evap, cond.T_cond
    if not T_cond > T_evap:
        raise InvalidCycle('T_cond ({:.3f} C) must be above T_evap ({:.3f} C)'.format(T_cond, T_evap))
    if eta_isen is None:
        eta_isen = compressor_isentropic_efficiency(T_evap, T_cond)
    elif not (0.0 < eta_isen <= 1.0):
        raise InvalidCycle('Forced isentropic efficiency {} outside (0, 1]'.format(eta_isen))

    P_evap = saturation_pressure(props, T_evap)
    P_cond = saturation_pressure(props, T_cond)

    state3 = superheated_state(props, P_evap, T_evap + cond.T_SH)
    state4s = state_at_entropy(props, P_cond, state3.s)
    if state4s.h <= state3.h:
        raise InvalidCycle('{}: isentropic compression gives h4s = {:.4f} <= h3 = {:.4f}'.format(
            props.refrigerant, state4s.h, state3.h))
    if eta_isen == 1.0:
        state4 = state4s
    else:
        h4 = state3.h + (state4s.h - state3.h) / eta_isen
        state4 = state_at_enthalpy(props, P_cond, h4)

    if cond.T_SC == 0:
        state5 = saturated_state(props, T_cond, 'liquid')
    else:
        state5 = subcooled_state(props, T_cond - cond.T_SC, P_cond)
    state6 = two_phase_state(props, P_evap, state5.h)

    logger.debug('%s: T_evap %.3f C, T_cond %.3f C, T4 %.3f C', props.refrigerant, T_evap, T_cond, state4.T)
    return CycleStatePoints(
        state3=state3, state4s=state4s, state4=state4, state5=state5, state6=state6,
        T1=cond.T_source, T7=cond.T_sink, T_evap=T_evap, T_cond=T_cond, P_evap=P_evap, P_cond=P_cond,
        eta_isen=eta_isen, latent_heat_evap=latent_heat(props, T_evap),
    )


def _carnot(cond):
    if cond.T_sink == cond.T_source:
        raise DegenerateCarnot('T_sink equals T_source ({} C), Carnot COP undefined'.format(cond.T_sink))
    return (cond.T_sink + KELVIN) / ((cond.T_sink + KELVIN) - (cond.T_source + KELVIN))


def performance_coefficients(sol, cond):
    """Returns (COP_cycle, COP_system, COP_carnot)."""
    if not sol.W_elec_comp > 0:
        raise InvalidCycle('W_elec_comp must be > 0, got {}'.format(sol.W_elec_comp))
    return sol.Q_cond / sol.W_elec_comp, sol.Q_cond / sol.W_elec_total, _carnot(cond)


def htf_outlet_temperatures(sol, cond):
    """Returns (T2, T8): ground loop and tank loop HTF temperatures leaving the exchangers."""
    m1, m2 = cond.m_pump1, cond.m_pump2
    if not (m1 > 0 and m2 > 0):
        raise InvalidCycle('HTF mass flows must be > 0')
    T2 = cond.T_source - sol.Q_evap / (cond.htf_cp * m1)
    T8 = cond.T_sink + sol.Q_cond / (cond.htf_cp * m2)
    return T2, T8


def solve_cycle(points, cond):
    """
    Energy balance of the cycle for either mode: a fixed condenser capacity
    sets the refrigerant flow, a measured compressor power sets the
    compressor work. The electrical input is the compressor work over
    eta_prime_comp * eta_drive.
    """
    h3, h4, h5, h6 = points.state3.h, points.state4.h, points.state5.h, points.state6.h
    dh_comp = h4 - h3
    dh_cond = h4 - h5
    dh_evap = h3 - h6
    for name, value in (('h4 - h3', dh_comp), ('h4 - h5', dh_cond), ('h3 - h6', dh_evap)):
        if not value > 0:
            raise InvalidCycle('{}: {} = {:.6f} must be > 0'.format(points.refrigerant, name, value))

    eta_comp = compressor_overall_efficiency(points.T_evap, points.T_cond)
    eta_prime = electromechanical_efficiency(eta_comp, points.eta_isen)
    # Shaft work to electrical input
    eta_elec = eta_prime * cond.drive_efficiency

    if isinstance(cond.mode, FixedCapacity):
        Q_cond = cond.mode.Q_cond
        m_ref = Q_cond / dh_cond
        W_comp = m_ref * dh_comp
        W_elec_comp = W_comp / eta_elec
    elif isinstance(cond.mode, MeasuredPower):
        W_elec_comp = cond.mode.W_elec_comp
        W_comp = eta_elec * W_elec_comp
        m_ref = W_comp / dh_comp
        Q_cond = m_ref * dh_cond
    else:
        raise InvalidCycle('Unknown solve mode {!r}'.format(cond.mode))

    sol = CycleSolution(
        points=points,
        m_ref=m_ref,
        Q_evap=m_ref * dh_evap,
        Q_cond=Q_cond,
        W_comp=W_comp,
        W_elec_comp=W_elec_comp,
        W_elec_total=W_elec_comp + cond.pump_power,
        eta_isen=points.eta_isen,
        eta_comp=eta_comp,
        eta_prime_comp=eta_prime,
        VRC=points.state3.rho * dh_evap,
        m_htf1=cond.m_pump1,
        m_htf2=cond.m_pump2,
        eta_drive=cond.drive_efficiency,
    )
    COP_cycle, COP_system, COP_carnot = performance_coefficients(sol, cond)
    T2, T8 = htf_outlet_temperatures(sol, cond)
    return replace(sol, points=replace(points, T2=T2, T8=T8),
                   COP_cycle=COP_cycle, COP_system=COP_system, COP_carnot=COP_carnot)


def simulate(cond, props, eta_isen=None):
    if not isinstance(cond, OperatingConditions):
        raise InvalidCycle('simulate needs OperatingConditions, got {!r}'.format(type(cond).__name__))
    return solve_cycle(solve_state_points(cond, props, eta_isen), cond)
