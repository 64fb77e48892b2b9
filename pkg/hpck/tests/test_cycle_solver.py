import pytest

from hpck.cycle import conditions as cc
from hpck.cycle.compressor import OutOfEnvelope
from hpck.cycle import solver
from hpck.properties.property_set import Phase
from hpck.properties.refrigerants import ALL_REFRIGERANTS


@pytest.fixture
def design():
    return cc.design_point_conditions()


def test_state_points(r134a, design):
    points = solver.solve_state_points(design, r134a)
    assert points.T_evap == pytest.approx(3.0)
    assert points.T_cond == pytest.approx(54.0)
    assert points.state3.T == pytest.approx(11.0, abs=0.05)
    assert points.state4s.s == pytest.approx(points.state3.s, abs=1e-8)
    assert points.state4.h > points.state4s.h
    assert points.state5.phase is Phase.SUBCOOLED_LIQUID
    assert points.state5.T == pytest.approx(52.0)
    assert points.state6.h == points.state5.h
    assert 0.0 < points.state6.quality < 1.0
    assert points.eta_isen == pytest.approx(0.85161, abs=1e-5)


def test_isentropic_compression_when_forced(r134a, design):
    points = solver.solve_state_points(design, r134a, eta_isen=1.0)
    assert points.state4 == points.state4s
    with pytest.raises(solver.InvalidCycle):
        solver.solve_state_points(design, r134a, eta_isen=1.5)


def test_no_subcooling_gives_saturated_liquid(r134a):
    cond = cc.design_point_conditions(overrides={'T_SC': 0.0})
    points = solver.solve_state_points(cond, r134a)
    assert points.state5.quality == 0.0


def test_fixed_capacity_energy_balance(r134a, design):
    sol = solver.simulate(design, r134a)
    assert sol.Q_cond == 5.0
    assert sol.Q_cond == pytest.approx(sol.Q_evap + sol.W_comp, rel=1e-12)
    ideal = sol.m_ref * (sol.points.state4s.h - sol.points.state3.h)
    assert sol.eta_drive == 0.95
    assert sol.W_elec_comp == pytest.approx(ideal / (sol.eta_comp * sol.eta_drive), rel=1e-9)
    assert sol.W_elec_total == pytest.approx(sol.W_elec_comp + 0.1)
    assert sol.COP_system < sol.COP_cycle < sol.COP_carnot


def test_carnot_and_htf_temperatures(r134a, design):
    sol = solver.simulate(design, r134a)
    assert sol.COP_carnot == pytest.approx(8.734, abs=5e-4)
    assert sol.T8 == pytest.approx(57.93, abs=0.01)
    assert sol.T2 == pytest.approx(13.0 - sol.Q_evap / (4.186 * design.m_pump1))
    assert sol.T2 < design.T_source


def test_volumetric_capacity(r134a, design):
    sol = solver.simulate(design, r134a)
    points = sol.points
    assert sol.VRC == pytest.approx(points.state3.rho * (points.state3.h - points.state6.h))


def test_measured_power_round_trip(r134a, design):
    measured = solver.simulate(cc.with_mode(design, cc.MeasuredPower(1.4)), r134a)
    fixed = solver.simulate(cc.with_mode(design, cc.FixedCapacity(measured.Q_cond)), r134a)
    assert fixed.m_ref == pytest.approx(measured.m_ref, rel=1e-9)
    assert fixed.W_elec_comp == pytest.approx(1.4, rel=1e-9)


def test_regression_point_uses_measured_power(r134a):
    cond = cc.operating_conditions_from_regressions(45.0)
    sol = solver.simulate(cond, r134a)
    assert sol.W_elec_comp == cond.mode.W_elec_comp
    assert sol.W_comp == pytest.approx(sol.eta_prime_comp * sol.eta_drive * sol.W_elec_comp)
    assert sol.Q_cond == pytest.approx(sol.Q_evap + sol.W_comp, rel=1e-12)


def test_every_toy_refrigerant_solves(toy_sets, design):
    for rid in ALL_REFRIGERANTS:
        sol = solver.simulate(design, toy_sets[rid])
        assert sol.refrigerant is rid
        assert sol.m_ref > 0


def test_outside_compressor_envelope(r134a):
    cond = cc.design_point_conditions(overrides={'T_source': 20.0, 'T_EAP': 0.0, 'T_SH': 0.0})
    with pytest.raises(OutOfEnvelope):
        solver.simulate(cond, r134a)


def test_simulate_needs_conditions(r134a):
    with pytest.raises(solver.InvalidCycle):
        solver.simulate({'T_sink': 50.0}, r134a)


def test_drive_efficiency_only_scales_electrical_input(r134a, design):
    bare = solver.simulate(cc.design_point_conditions(overrides={'drive_efficiency': 1.0}), r134a)
    sol = solver.simulate(design, r134a)
    assert sol.points == bare.points
    assert sol.m_ref == bare.m_ref
    assert sol.Q_evap == bare.Q_evap
    assert sol.W_comp == bare.W_comp
    assert bare.W_elec_comp == pytest.approx(bare.W_comp / bare.eta_prime_comp, rel=1e-12)
    assert sol.W_elec_comp == pytest.approx(bare.W_elec_comp / 0.95, rel=1e-12)
    assert sol.COP_cycle == pytest.approx(0.95 * bare.COP_cycle, rel=1e-12)


def test_drive_efficiency_in_measured_power_mode(r134a):
    cond = cc.operating_conditions_from_regressions(50.0)
    bare = solver.simulate(cc.operating_conditions_from_regressions(50.0, {'drive_efficiency': 1.0}), r134a)
    sol = solver.simulate(cond, r134a)
    assert sol.W_elec_comp == bare.W_elec_comp
    assert sol.Q_cond == pytest.approx(0.95 * bare.Q_cond, rel=1e-12)
    assert sol.eta_prime_comp == pytest.approx(0.6701, abs=1e-4)


@pytest.mark.parametrize('value', [0.0, -0.5, 1.2])
def test_drive_efficiency_bounds(value):
    with pytest.raises(cc.InvalidOverride):
        cc.design_point_conditions(overrides={'drive_efficiency': value})
