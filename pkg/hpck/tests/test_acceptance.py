"""End-to-end checks against the published results, on the shipped or CoolProp-generated tables."""
import io

import numpy as np
import pytest

from hpck import cli
from hpck.properties.refrigerants import ALL_REFRIGERANTS, RefrigerantId as R
from hpck.scenario.reference import REFERENCE
from hpck.scenario.runner import run_scenario
from hpck.scenario.scenario import scenario_from_dict
from hpck.scenario.validate import validate_against_reference
from hpck.storage.storage import emit_report


@pytest.fixture(scope='module')
def design(oracle_sets):
    scenario = scenario_from_dict({'refrigerants': [r.value for r in ALL_REFRIGERANTS], 'mode': 'design_point'})
    return run_scenario(scenario, None, property_sets=oracle_sets)


@pytest.fixture(scope='module')
def sweep(oracle_sets):
    scenario = scenario_from_dict({'refrigerants': ['R134a'], 'mode': 'regression_sweep'})
    return run_scenario(scenario, None, property_sets=oracle_sets)


def test_design_point_cop_ranking(design):
    assert not design.failures
    cops = [row.solution.COP_cycle for row in design]
    assert [row.refrigerant for row in design] == list(ALL_REFRIGERANTS)
    assert cops == sorted(cops, reverse=True)


@pytest.fixture(scope='module')
def design_records(design):
    return {record['refrigerant']: record for record in design.metrics()}


@pytest.mark.parametrize('rid', ALL_REFRIGERANTS, ids=str)
def test_design_point_cop_within_five_percent(design_records, rid):
    record, ref = design_records[rid.value], REFERENCE.design_results[rid]
    assert record['COP_cycle'] == pytest.approx(ref.COP_cycle, rel=0.05)
    assert record['COP_system'] == pytest.approx(ref.COP_system, rel=0.05)


@pytest.mark.parametrize('rid', ALL_REFRIGERANTS, ids=str)
def test_second_law_efficiencies_within_tolerance(design_records, rid):
    record, ref = design_records[rid.value], REFERENCE.design_results[rid]
    for column in ('eta_2nd_pct', 'eta_cycle_ex_pct', 'eta_system_ex_pct'):
        assert abs(record[column] - getattr(ref, column)) <= 1.5, column
    for column in ('eta_comp_ex_pct', 'eta_cond_ex_pct', 'eta_tev_ex_pct'):
        assert abs(record[column] - getattr(ref, column)) <= 2.0, column


def test_cycle_destruction_extremes(design_records):
    dest = {rid: design_records[rid.value]['Edest_cycle_W'] for rid in ALL_REFRIGERANTS}
    assert min(dest, key=dest.get) is R.R152A
    assert max(dest, key=dest.get) is R.R1234YF
    assert dest[R.R152A] == pytest.approx(REFERENCE.screening['Edest_cycle_min_W'], rel=0.08)
    assert dest[R.R1234YF] == pytest.approx(REFERENCE.screening['Edest_cycle_max_W'], rel=0.08)


def test_condenser_efficiency_falls_with_discharge_temperature(design_records):
    tie = 0.2
    pairs = sorted((r['T4_C'], r['eta_cond_ex_pct']) for r in design_records.values())
    eta = np.array([e for _, e in pairs])
    assert np.all(np.diff(eta) <= tie), pairs
    assert np.polyfit([t for t, _ in pairs], eta, 1)[0] < 0
    cond = {rid: design_records[rid.value]['eta_cond_ex_pct'] for rid in ALL_REFRIGERANTS}
    assert cond[R.R152A] <= min(cond.values()) + tie
    assert cond[R.R1234YF] >= max(cond.values()) - tie


def test_sweep_inside_validation_bands(sweep):
    records = sorted(sweep.metrics(), key=lambda r: r['T_sink_C'])
    assert records[0]['T_sink_C'] == 40.0 and records[-1]['T_sink_C'] == 50.0
    margins = {'Q_cond_kW': 0.15, 'Q_evap_kW': 0.12, 'COP_cycle': 0.10, 'COP_system': 0.10}
    for column, (lo, hi) in REFERENCE.validation_bands.items():
        values = [r[column] for r in records]
        assert all(lo - margins[column] <= v <= hi + margins[column] for v in values), (column, values)
        assert all(a > b for a, b in zip(values, values[1:])), (column, values)


def test_design_point_carnot(design):
    for row in design:
        assert row.solution.COP_carnot == pytest.approx(8.734, abs=5e-4)


def test_compressor_dominates_destruction(design):
    for row in design:
        dest = row.exergy.destruction
        assert dest['compressor'] == max(dest.values())
        assert dest['condenser'] == min(dest.values())


def test_r152a_lowest_tewi(design):
    totals = {row.refrigerant: row.tewi.total for row in design}
    assert min(totals, key=totals.get) is R.R152A


def test_reference_checks_pass(design, sweep, oracle_sets):
    report = validate_against_reference([design, sweep], property_sets=oracle_sets)
    assert report.passed, ['{} expected {} computed {}'.format(c.name, c.expected, c.computed)
                           for c in report.failures()]


def test_report_is_reproducible(design, oracle_sets):
    first, second = io.StringIO(), io.StringIO()
    emit_report(design, stream=first)
    again = run_scenario(design.scenario, None, workers=1, property_sets=oracle_sets)
    emit_report(again, stream=second)
    assert first.getvalue() == second.getvalue()


def test_cli_validate(oracle_data_dir, tmpdir, capsys):
    argv = ['--config', str(tmpdir.join('config.ini')), '--prop-data', oracle_data_dir, 'validate']
    assert cli.main(argv) == 0
    assert 'all checks passed' in capsys.readouterr().err
