from types import SimpleNamespace

import pytest

from hpck.environment import metadata, normalize
from hpck.environment.tewi import InvalidTewiInputs, TewiInputs, tewi, tewi_inputs_for
from hpck.properties.refrigerants import ALL_REFRIGERANTS, RefrigerantId as R


def test_tewi_direct_only():
    result = tewi(TewiInputs(gwp=1430))
    assert result.direct == pytest.approx(3003.0)
    assert result.indirect == 0.0
    assert result.total == result.direct


def test_tewi_zero_gwp():
    result = tewi(TewiInputs(gwp=0, annual_energy_E=2000.0))
    assert result.direct == 0.0
    assert result.indirect == pytest.approx(24000.0)
    assert result.total == pytest.approx(24000.0)


def test_tewi_full_recovery_no_leaks():
    result = tewi(TewiInputs(gwp=573, leak_rate_L=0.0, recovery_alpha=100.0, annual_energy_E=100.0))
    assert result.direct == 0.0
    assert result.total == result.indirect


@pytest.mark.parametrize('kwargs', [
    {'gwp': -1},
    {'gwp': 1, 'leak_rate_L': 101.0},
    {'gwp': 1, 'recovery_alpha': -5.0},
    {'gwp': 1, 'charge_m': -0.1},
    {'gwp': 1, 'annual_energy_E': -1.0},
])
def test_tewi_invalid_inputs(kwargs):
    with pytest.raises(InvalidTewiInputs):
        TewiInputs(**kwargs)


def test_tewi_inputs_for_solution():
    sol = SimpleNamespace(W_elec_total=1.8)
    inputs = tewi_inputs_for(R.R134A, sol)
    assert inputs.gwp == 1430
    assert inputs.annual_energy_E == pytest.approx(2700.0)
    inputs = tewi_inputs_for('R152a', sol, {'operating_hours': 1000, 'charge_m': '1.5'})
    assert inputs.gwp == 124
    assert inputs.charge_m == 1.5
    assert inputs.annual_energy_E == pytest.approx(1800.0)


@pytest.mark.parametrize('params', [{'hours': 1}, {'life_n': 'long'}, {'operating_hours': -1}])
def test_tewi_inputs_for_bad_params(params):
    with pytest.raises(InvalidTewiInputs):
        tewi_inputs_for(R.R134A, SimpleNamespace(W_elec_total=1.0), params)


def test_embedded_metadata():
    for rid in ALL_REFRIGERANTS:
        meta = metadata.refrigerant_metadata(rid)
        assert meta.id is rid
        assert meta.critical_pressure_kpa > 3000.0
    assert metadata.refrigerant_metadata('R1234yf').flammable
    assert not metadata.refrigerant_metadata(R.R134A).flammable
    with pytest.raises(metadata.UnknownRefrigerant):
        metadata.refrigerant_metadata('R22')


def test_flammability_limits_ordered():
    with pytest.raises(metadata.MetadataError):
        metadata.RefrigerantMeta(R.R152A, 124, 66.05, -24.7, 4.5, 113.15, ufl=3.0, lfl=16.9)


def test_metadata_csv(tmpdir):
    path = tmpdir.join('refrigerants.csv')
    path.write(
        ','.join(metadata.METADATA_COLUMNS) + '\n'
        'R134a,1300,102.03,-26.1,4.06,101.1,-,-,-\n'
        'R152a,124,66.05,-24.7,4.50,113.15,16.9,3.9,455\n'
    )
    rows = metadata.load_metadata_csv(str(path))
    assert rows[R.R134A].gwp_100yr == 1300
    assert rows[R.R134A].lfl is None
    assert rows[R.R152A].ufl == 16.9

    metadata.use_metadata_csv(str(path))
    assert metadata.refrigerant_metadata(R.R134A).gwp_100yr == 1300
    assert metadata.refrigerant_metadata(R.R513A).gwp_100yr == 573
    metadata.reset_metadata()
    assert metadata.refrigerant_metadata(R.R134A).gwp_100yr == 1430


def test_metadata_csv_errors(tmpdir):
    with pytest.raises(metadata.MetadataError):
        metadata.load_metadata_csv(str(tmpdir.join('missing.csv')))
    path = tmpdir.join('short.csv')
    path.write('refrigerant,gwp_100yr\nR134a,1430\n')
    with pytest.raises(metadata.MetadataError):
        metadata.load_metadata_csv(str(path))


def _metrics(cop, tewi_total, eta, dest):
    return {'COP_cycle': cop, 'TEWI_total': tewi_total, 'eta_cycle_ex': eta, 'E_dest_cycle': dest}


def test_normalize_vs_baseline():
    comparison = normalize.normalize_vs_baseline({
        'R134a': _metrics(2.97, 30000.0, 30.9, 1050.0),
        'R152a': _metrics(3.09, 27000.0, 32.1, 990.0),
    })
    assert comparison.baseline is R.R134A
    assert all(v == 1.0 for v in comparison.ratios[R.R134A].values())
    assert comparison.ratio('R152a', 'COP_cycle') == pytest.approx(3.09 / 2.97)
    assert comparison.ratio(R.R152A, 'TEWI_total') == pytest.approx(0.9)


def test_normalize_errors():
    with pytest.raises(normalize.MissingBaseline):
        normalize.normalize_vs_baseline({'R152a': _metrics(3.0, 1.0, 1.0, 1.0)})
    with pytest.raises(normalize.ZeroBaseline):
        normalize.normalize_vs_baseline({'R134a': _metrics(3.0, 0.0, 1.0, 1.0)})


def test_metrics_from_records():
    records = [
        {'refrigerant': 'R134a', 'COP_cycle': 3.0, 'TEWI_total_kg': 10.0, 'eta_cycle_ex_pct': 30.0,
         'Edest_cycle_W': 1000.0},
        {'refrigerant': 'R134a', 'COP_cycle': 2.0, 'TEWI_total_kg': 11.0, 'eta_cycle_ex_pct': 29.0,
         'Edest_cycle_W': 1100.0},
    ]
    metrics = normalize.metrics_from_records(records)
    assert metrics == {R.R134A: _metrics(3.0, 10.0, 30.0, 1000.0)}
