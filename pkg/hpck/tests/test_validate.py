import pytest

from hpck.properties.refrigerants import RefrigerantId as R
from hpck.scenario import validate
from hpck.scenario.reference import REFERENCE

MODULE_NAMES = ['algebraic', 'cop_table', 'exergy_destruction', 'exergy_efficiency', 'property_suite', 'screening',
                'second_law', 'tewi_ranking', 'validation_bands']

ONLY_COP_TABLE = {name: {'ENABLED': False} for name in MODULE_NAMES if name != 'cop_table'}


def _design_record(rid, **values):
    ref = REFERENCE.design_results[rid]
    record = {'refrigerant': rid.value, 'mode': 'design_point', 'COP_cycle': ref.COP_cycle,
              'COP_system': ref.COP_system}
    record.update(values)
    return record


def _by_name(report):
    return {c.name: c for c in report.checks}


def test_check_modules():
    modules = validate.get_check_modules()
    assert sorted(name for name, _ in modules) == MODULE_NAMES
    for _, mod in modules:
        assert mod.DEFAULTCONF['ENABLED'] is True
        assert callable(mod.check) and callable(mod.scan)
    defaults = validate.module_defaults()
    assert defaults['cop_table']['cop_tolerance_pct'] == 5.0


def test_cop_table_passes_on_reference_values():
    records = [_design_record(R.R152A), _design_record(R.R134A)]
    report = validate.validate_against_reference(records, tolerances=ONLY_COP_TABLE)
    assert report.passed
    assert report.summary == {'total': 5, 'passed': 5, 'failed': 0}
    assert report.metadata['cop_table']['Refrigerants'] == ['R152a', 'R134a']


def test_cop_ordering_violation():
    records = [_design_record(R.R152A, COP_cycle=2.97), _design_record(R.R134A, COP_cycle=3.09)]
    report = validate.validate_against_reference(records, tolerances=ONLY_COP_TABLE)
    assert not report.passed
    checks = _by_name(report)
    assert checks['R152a COP_cycle'].passed
    assert not checks['COP_cycle ordering'].passed
    assert [c.name for c in report.failures()] == ['COP_cycle ordering']


def test_records_without_mode_are_classified():
    design = {'refrigerant': 'R134a', 'T_sink_C': 50.0, 'T_source_C': 13.0, 'Q_cond_kW': 5.0}
    sweep = {'refrigerant': 'R134a', 'T_sink_C': 45.0, 'T_source_C': 13.1, 'Q_cond_kW': 4.1}
    assert validate._split_records([design, sweep]) == ([design], [sweep])


def test_module_error_becomes_failed_check():
    tolerances = dict(ONLY_COP_TABLE)
    del tolerances['second_law']
    report = validate.validate_against_reference([_design_record(R.R134A)], tolerances=tolerances)
    errors = [c for c in report.checks if c.name == 'second_law: module error']
    assert len(errors) == 1
    assert not errors[0].passed


def test_incomplete_results():
    everything_off = {name: {'ENABLED': False} for name in MODULE_NAMES}
    with pytest.raises(validate.IncompleteResults):
        validate.validate_against_reference([], tolerances=everything_off)


def test_tewi_hand_cases_apply_without_results():
    tolerances = {name: {'ENABLED': False} for name in MODULE_NAMES if name != 'tewi_ranking'}
    report = validate.validate_against_reference([], tolerances=tolerances)
    assert report.passed
    assert 'TEWI direct hand case' in _by_name(report)


def test_identities_hold_on_toy_tables(r134a):
    tolerances = {name: {'ENABLED': False} for name in MODULE_NAMES if name != 'algebraic'}
    report = validate.validate_against_reference([], tolerances=tolerances, property_sets={R.R134A: r134a})
    assert report.checks
    assert report.passed, [c for c in report.failures()]


def test_property_suite_on_toy_tables(toy_sets):
    tolerances = {name: {'ENABLED': False} for name in MODULE_NAMES if name != 'property_suite'}
    sets = {R.R134A: toy_sets[R.R134A], R.R1234YF: toy_sets[R.R1234YF]}
    report = validate.validate_against_reference([], tolerances=tolerances, property_sets=sets)
    assert report.summary['total'] == 10
    assert report.passed, [c for c in report.failures()]


def test_check_result_record():
    record = validate.CheckResult('x', (1.0, 2.0), 1.23456789, None, True).as_record()
    assert record == {'name': 'x', 'expected': '[1, 2]', 'computed': '1.23457', 'tolerance': '', 'passed': True}
    assert list(record) == validate.CHECK_COLUMNS


ONLY_EXERGY_EFFICIENCY = {name: {'ENABLED': False} for name in MODULE_NAMES if name != 'exergy_efficiency'}
EFFICIENCY_COLUMNS = ('eta_evap_ex_pct', 'eta_comp_ex_pct', 'eta_cond_ex_pct', 'eta_tev_ex_pct')


def _efficiency_records(cond=None, T4=None):
    """Published component efficiencies with T4 falling as eta_cond rises, then the overrides."""
    records = []
    for rid, ref in REFERENCE.design_results.items():
        values = {column: getattr(ref, column) for column in EFFICIENCY_COLUMNS}
        values['eta_cond_ex_pct'] = (cond or {}).get(rid, ref.eta_cond_ex_pct)
        values['T4_C'] = (T4 or {}).get(rid, 160.0 - ref.eta_cond_ex_pct)
        records.append(_design_record(rid, **values))
    return records


def _efficiency_report(records, **conf):
    tolerances = dict(ONLY_EXERGY_EFFICIENCY)
    if conf:
        tolerances['exergy_efficiency'] = conf
    return _by_name(validate.validate_against_reference(records, tolerances=tolerances))


def test_condenser_trend_on_published_values():
    checks = _efficiency_report(_efficiency_records())
    assert all(c.passed for c in checks.values())
    assert checks['eta_cond_ex decreases with T4'].passed
    assert checks['eta_cond_ex minimum'].passed
    assert checks['eta_cond_ex maximum'].passed


def test_condenser_near_ties_pass():
    # R1234ze(E) edges past R1234yf at a slightly higher T4
    records = _efficiency_records(cond={R.R1234ZE_E: 99.35}, T4={R.R1234ZE_E: 60.8})
    checks = _efficiency_report(records)
    assert checks['eta_cond_ex maximum'].passed
    assert checks['eta_cond_ex decreases with T4'].passed
    assert not _efficiency_report(records, tie_pp=0.0)['eta_cond_ex decreases with T4'].passed


def test_condenser_trend_reversal_fails():
    checks = _efficiency_report(_efficiency_records(T4={R.R152A: 50.0}))
    assert not checks['eta_cond_ex decreases with T4'].passed
    assert checks['eta_cond_ex minimum'].passed


def test_condenser_minimum_held_by_other_refrigerant_fails():
    checks = _efficiency_report(_efficiency_records(cond={R.R134A: 94.5}))
    assert not checks['eta_cond_ex minimum'].passed
    assert checks['eta_cond_ex minimum'].computed == 'R134a 94.5'


def test_evaporator_column_tolerance():
    records = _efficiency_records()
    records[1]['eta_evap_ex_pct'] = 57.0
    assert records[1]['refrigerant'] == 'R134a'
    checks = _efficiency_report(records)
    assert checks['R134a eta_evap_ex_pct'].passed
    assert checks['R134a eta_evap_ex_pct'].tolerance == '7.5 pp'
    assert not _efficiency_report(records, column_tolerance_pp={})['R134a eta_evap_ex_pct'].passed
