import io
import json

import pytest

from hpck.properties.refrigerants import ALL_REFRIGERANTS
from hpck.scenario.runner import REPORT_COLUMNS, run_scenario
from hpck.scenario.scenario import scenario_from_dict
from hpck.storage import storage
from hpck.storage.plot_data import MissingSeriesData


@pytest.fixture(scope='module')
def design_series(toy_sets):
    scenario = scenario_from_dict({'refrigerants': [r.value for r in ALL_REFRIGERANTS], 'mode': 'design_point'})
    return run_scenario(scenario, None, property_sets=toy_sets)


def _emit(results, **kwargs):
    out = io.StringIO()
    storage.emit_report(results, stream=out, **kwargs)
    return out.getvalue()


def test_format_number():
    assert storage.format_number(1.0 / 3.0) == '0.3333333333'
    assert storage.format_number(True) == 'true'
    assert storage.format_number(None) == ''
    assert storage.format_number('R134a') == 'R134a'
    assert storage.format_number(2.5, '.3f') == '2.500'


def test_csv_report(design_series):
    text = _emit(design_series)
    lines = text.split('\n')
    assert lines[-1] == ''
    assert len(lines) == 8
    assert lines[0] == ','.join(REPORT_COLUMNS)
    assert [line.split(',')[0] for line in lines[1:-1]] == [r.value for r in ALL_REFRIGERANTS]
    assert '\r' not in text


def test_csv_is_reproducible(design_series, toy_sets):
    scenario = design_series.scenario
    again = run_scenario(scenario, None, workers=1, property_sets=toy_sets)
    assert _emit(again) == _emit(design_series)


def test_csv_column_subset(design_series):
    text = _emit(design_series, columns=['refrigerant', 'COP_cycle'])
    assert text.split('\n')[0] == 'refrigerant,COP_cycle'


def test_json_report(design_series):
    rows = json.loads(_emit(design_series, format='json'))
    assert len(rows) == 6
    assert all(list(row) == REPORT_COLUMNS for row in rows)
    assert rows[0]['refrigerant'] == 'R152a'
    assert rows[0]['Q_cond_kW'] == 5.0


def test_plot_data_condenser(design_series):
    lines = _emit(design_series, format='plot-data', series='condenser').split('\n')
    assert lines[0] == 'refrigerant,T4_C,eta_cond_ex_pct'
    assert len(lines) == 8


def test_plot_data_normalized(design_series):
    lines = _emit(design_series, format='plot-data', series='normalized', baseline='R134a').split('\n')
    assert lines[0] == 'refrigerant,COP_cycle_ratio,TEWI_total_ratio,eta_cycle_ex_ratio,E_dest_cycle_ratio'
    assert lines[2] == 'R134a,1,1,1,1'


def test_plot_data_validation(design_series):
    header = _emit(design_series, format='plot-data', series='validation').split('\n')[0].split(',')
    assert header[:6] == ['refrigerant', 'T_sink_C', 'Q_cond_kW', 'Q_evap_kW', 'COP_cycle', 'COP_system']
    assert 'measured_COP_cycle_low' in header


def test_plot_data_needs_columns():
    with pytest.raises(MissingSeriesData):
        _emit([{'refrigerant': 'R134a'}], format='plot-data', series='capacity')


def test_unknown_format_and_series(design_series):
    with pytest.raises(storage.UnknownFormat):
        _emit(design_series, format='xml')
    with pytest.raises(storage.UnknownFormat):
        _emit(design_series, format='plot-data', series='histogram')


def test_disabled_format(design_series):
    with pytest.raises(storage.UnknownFormat):
        _emit(design_series, format='json', config={'JsonFile': {'ENABLED': False}})


def test_write_to_file(tmpdir, design_series):
    path = tmpdir.join('out', 'report.csv')
    storage.emit_report(design_series, path=str(path))
    assert path.read().startswith('refrigerant,')


def test_unwritable_path(tmpdir, design_series):
    blocker = tmpdir.join('file')
    blocker.write('')
    with pytest.raises(storage.ReportIoError):
        storage.emit_report(design_series, path=str(blocker.join('report.csv')))


def test_storage_defaults():
    defaults = storage.storage_defaults()
    assert sorted(defaults) == ['CsvFile', 'JsonFile', 'PlotData']
    assert defaults['JsonFile']['indent'] == 2
