from dataclasses import replace

import pytest

from hpck.cycle import conditions as cc
from hpck.cycle.solver import simulate
from hpck.exergy import analyzer
from hpck.properties.refrigerants import RefrigerantId


@pytest.fixture
def design():
    return cc.design_point_conditions()


@pytest.fixture
def solved(r134a, design):
    sol = simulate(design, r134a)
    return sol, analyzer.analyze_exergy(sol, design, r134a)


def test_water_flow_exergy():
    dead = analyzer.DeadState()
    assert analyzer.water_flow_exergy(50.0, 1.0, dead).specific == pytest.approx(6.02, abs=0.01)
    assert analyzer.water_flow_exergy(20.0, 1.0, dead).specific == 0.0
    flow = analyzer.water_flow_exergy(50.0, 0.15, dead, point_id=8)
    assert flow.point_id == 8
    assert flow.rate == pytest.approx(0.15 * flow.specific * 1000.0)


@pytest.mark.parametrize('T', [0.0, -5.0, 100.0, 120.0])
def test_water_out_of_range(T):
    with pytest.raises(analyzer.HtfOutOfRange):
        analyzer.water_flow_exergy(T, 1.0, analyzer.DeadState())


def test_dead_state_has_zero_exergy(r134a):
    dead = analyzer.make_dead_state(r134a)
    state = analyzer.dead_state(r134a)
    assert analyzer.refrigerant_flow_exergy(state, 1.0, dead).specific == pytest.approx(0.0, abs=1e-12)


def test_convention_mismatch(r134a, toy_sets):
    dead = analyzer.make_dead_state(r134a)
    other = analyzer.dead_state(toy_sets[RefrigerantId.R152A])
    with pytest.raises(analyzer.ConventionMismatch):
        analyzer.refrigerant_flow_exergy(other, 1.0, dead)
    shifted = analyzer.dead_state(r134a.shifted(10.0, 0.05))
    with pytest.raises(analyzer.ConventionMismatch):
        analyzer.refrigerant_flow_exergy(shifted, 1.0, dead)


def test_balance(solved):
    sol, report = solved
    total, supplied_minus_recovered = report.balance
    assert total == report.cycle_destruction
    assert supplied_minus_recovered == pytest.approx(total, rel=1e-9)
    assert report.E_Q == 0.0


def test_destructions_and_shares(solved):
    _, report = solved
    assert set(report.destruction) == set(analyzer.COMPONENTS)
    assert all(v > 0 for v in report.destruction.values())
    assert sum(report.relative.values()) == pytest.approx(1.0, abs=1e-12)
    assert report.cycle_destruction == pytest.approx(sum(report.destruction.values()))


def test_efficiencies(solved, design):
    sol, report = solved
    eff = report.efficiencies
    for name in ('evaporator', 'compressor', 'condenser'):
        assert 0.0 < eff[name] < 1.0
    assert eff['system'] < eff['cycle']
    assert eff['second_law'] == pytest.approx(sol.COP_cycle / sol.COP_carnot, rel=1e-12)


def test_reference_state_shift_invariance(r134a, design, solved):
    _, report = solved
    moved = r134a.shifted(25.0, 0.1)
    sol = simulate(design, moved)
    other = analyzer.analyze_exergy(sol, design, moved)
    for name in analyzer.COMPONENTS:
        assert other.destruction[name] == pytest.approx(report.destruction[name], rel=1e-6)
        assert other.relative[name] == pytest.approx(report.relative[name], rel=1e-6)
    for name, value in report.efficiencies.items():
        assert other.efficiencies[name] == pytest.approx(value, rel=1e-6)


def test_negative_destruction():
    with pytest.raises(analyzer.NegativeDestruction):
        analyzer.cycle_destruction_and_relative({'evaporator': 10.0, 'compressor': -3.0, 'condenser': 1.0,
                                                 'TEV': 1.0})
    total, _ = analyzer.cycle_destruction_and_relative({'evaporator': 10.0, 'compressor': -0.2, 'condenser': 1.0,
                                                        'TEV': 1.0})
    assert total == pytest.approx(11.8)


def test_zero_total():
    with pytest.raises(analyzer.ZeroTotal):
        analyzer.cycle_destruction_and_relative(dict.fromkeys(analyzer.COMPONENTS, 0.0))


def test_htf_outlet_out_of_range(r134a, design):
    sol = simulate(design, r134a)
    broken = replace(sol, points=replace(sol.points, T8=101.0))
    with pytest.raises(analyzer.HtfOutOfRange):
        analyzer.analyze_exergy(broken, design, r134a)
