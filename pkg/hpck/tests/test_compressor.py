import pytest

from hpck.cycle import compressor


def test_isentropic_efficiency_design_point():
    assert compressor.compressor_isentropic_efficiency(3.0, 54.0) == pytest.approx(0.85161, abs=1e-5)


def test_isentropic_efficiency_at_zero_evaporating_temperature():
    assert compressor.compressor_isentropic_efficiency(0.0, 50.0) == pytest.approx(273.15 / 323.15)


def test_isentropic_efficiency_non_physical():
    with pytest.raises(compressor.NonPhysical):
        compressor.compressor_isentropic_efficiency(50.0, 40.0)


def test_overall_efficiency():
    assert compressor.compressor_overall_efficiency(3.0, 54.0) == pytest.approx(0.5995, abs=1e-4)
    assert compressor.compressor_overall_efficiency(0.0, 50.0) == pytest.approx(0.58979, abs=1e-5)


def test_overall_efficiency_envelope():
    with pytest.raises(compressor.OutOfEnvelope):
        compressor.compressor_overall_efficiency(20.0, 54.0)
    with pytest.raises(compressor.OutOfEnvelope):
        compressor.compressor_overall_efficiency(3.0, 75.0)


def test_custom_coefficients():
    flat = compressor.CompressorPolyCoefficients(0, 0, 0, 0, 0, 0, 0, 0, 0, 60.0)
    assert compressor.compressor_overall_efficiency(-10.0, 40.0, flat) == pytest.approx(0.6)
    broken = compressor.CompressorPolyCoefficients(0, 0, 0, 0, 0, 0, 0, 0, 0, 150.0)
    with pytest.raises(compressor.NonPhysical):
        compressor.compressor_overall_efficiency(-10.0, 40.0, broken)


def test_electromechanical_efficiency():
    assert compressor.electromechanical_efficiency(0.5995, 0.8516) == pytest.approx(0.70397, abs=1e-5)
