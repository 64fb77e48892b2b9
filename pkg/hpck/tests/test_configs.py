import os

from hpck import cli, config
from hpck.common import utils


def test_configuration_path_prefers_argument(tmp_path):
    path = str(tmp_path / 'my.ini')
    assert config.determine_configuration_path(path) == path


def test_configuration_path_local_file(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / 'config.ini').write_text('[main]\n')
    assert config.determine_configuration_path(None) == os.path.join(str(tmp_path), 'config.ini')


def test_prop_data_precedence(tmp_path, monkeypatch):
    monkeypatch.setattr(config, 'SHIPPED_PROP_DATA', str(tmp_path / 'none'))
    monkeypatch.setenv(config.PROP_DATA_ENV, '/from/env')
    assert config.determine_prop_data_dir('/from/flag', {'prop-data': '/from/config'}) == '/from/flag'
    assert config.determine_prop_data_dir(None, {'prop-data': '/from/config'}) == '/from/env'
    monkeypatch.delenv(config.PROP_DATA_ENV)
    assert config.determine_prop_data_dir(None, {'prop-data': '/from/config'}) == '/from/config'
    assert config.determine_prop_data_dir(None, {'prop-data': None}) == os.path.join(config.LOCAL_STORAGE, 'prop-data')


def test_prop_data_falls_back_to_shipped_tables(tmp_path, monkeypatch):
    monkeypatch.delenv(config.PROP_DATA_ENV, raising=False)
    shipped = tmp_path / 'data'
    shipped.mkdir()
    monkeypatch.setattr(config, 'SHIPPED_PROP_DATA', str(shipped))
    monkeypatch.setattr(config, 'LOCAL_STORAGE', str(tmp_path / 'home'))
    local = os.path.join(str(tmp_path / 'home'), 'prop-data')
    assert config.determine_prop_data_dir() == local
    (shipped / 'oracle.json').write_text('{}\n')
    assert config.determine_prop_data_dir() == str(shipped)
    os.makedirs(local)
    assert config.determine_prop_data_dir() == local


def test_init_writes_every_section(tmp_path):
    path = str(tmp_path / 'config.ini')
    assert cli.main(['init', '--config', path]) == 0
    conf = utils.read_config(path)
    for section in ('main', 'tewi', 'CsvFile', 'JsonFile', 'PlotData', 'cop_table', 'validation_bands',
                    'algebraic', 'property_suite', 'tewi_ranking'):
        assert section in conf
    assert conf['main']['workers'] == 4
    assert conf['main']['drive_efficiency'] == 0.95
    assert conf['exergy_efficiency']['tie_pp'] == 0.2
    assert conf['tewi']['emission_factor_beta'] == 0.8
    assert conf['property_suite']['boiling_point_overrides'] == {'R152a': 0.8}


def test_init_keeps_existing_sections(tmp_path):
    path = str(tmp_path / 'config.ini')
    utils.write_config(path, {'main': {'workers': 2}})
    assert cli.main(['init', '--config', path]) == 0
    conf = utils.read_config(path)
    assert conf['main'] == {'workers': 2}
    assert 'tewi' in conf


def test_tewi_defaults_come_from_config(tmp_path, capsys):
    path = str(tmp_path / 'config.ini')
    utils.write_config(path, {'main': {'workers': 1}, 'tewi': {'charge_m': 1.0}})
    code = cli.main(['tewi', '--config', path, '--refrigerant', 'R134a', '--format', 'json'])
    assert code == 0
    out = capsys.readouterr().out
    # 1430 * 1 kg * (0.05 * 15 + 0.3)
    assert '"TEWI_direct_kg": 1501.5' in out
