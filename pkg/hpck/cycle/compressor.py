# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from dataclasses import astuple, dataclass

from hpck.common.errors import InputError

# Rated operating envelope of the scroll compressor, C
T_EVAP_RANGE = (-45.0, 15.0)
T_COND_RANGE = (20.0, 70.0)


class NonPhysical(InputError):
    pass


class OutOfEnvelope(InputError):
    pass


@dataclass(frozen=True)
class CompressorPolyCoefficients:
    """Cubic fit of the overall compressor efficiency in percent, temperatures in C."""
    c1: float = -2.4341
    c2: float = 1.367
    c3: float = -0.062
    c4: float = 0.103
    c5: float = -0.0173
    c6: float = -3.88e-5
    c7: float = 7.89e-4
    c8: float = -7.51e-4
    c9: float = 1.85e-6
    c10: float = 33.6476


COEFFICIENTS = CompressorPolyCoefficients()


def compressor_isentropic_efficiency(T_evap, T_cond):
    """
    Kelvin temperature ratio plus 0.0025 per degree C of evaporating
    temperature.
    """
    if not (T_cond > T_evap > -273.15):
        raise NonPhysical('Need T_cond > T_evap > -273.15, got T_evap={} T_cond={}'.format(T_evap, T_cond))
    eta = (T_evap + 273.15) / (T_cond + 273.15) + 0.0025 * T_evap
    if not (0.0 < eta <= 1.0):
        raise NonPhysical('Isentropic efficiency {:.4f} outside (0, 1]'.format(eta))
    return eta


def compressor_overall_efficiency(T_evap, T_cond, coefficients=COEFFICIENTS):
    if not (T_EVAP_RANGE[0] <= T_evap <= T_EVAP_RANGE[1]):
        raise OutOfEnvelope('T_evap = {} C outside compressor envelope {} .. {} C'.format(T_evap, *T_EVAP_RANGE))
    if not (T_COND_RANGE[0] <= T_cond <= T_COND_RANGE[1]):
        raise OutOfEnvelope('T_cond = {} C outside compressor envelope {} .. {} C'.format(T_cond, *T_COND_RANGE))
    c1, c2, c3, c4, c5, c6, c7, c8, c9, c10 = astuple(coefficients)
    te, tc = T_evap, T_cond
    percent = (c1 * te + c2 * tc + c3 * te ** 2 + c4 * te * tc + c5 * tc ** 2
               + c6 * te ** 3 + c7 * te ** 2 * tc + c8 * te * tc ** 2
               + c9 * tc ** 3 + c10)
    eta = percent / 100.0
    if not (0.0 < eta < 1.0):
        raise NonPhysical('Overall compressor efficiency {:.4f} outside (0, 1)'.format(eta))
    return eta


def electromechanical_efficiency(eta_comp, eta_isen):
    """eta' = eta_comp / eta_isen: motor, transmission and mechanical losses."""
    return eta_comp / eta_isen
