# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Total equivalent warming impact.

direct   = GWP * m * (L/100 * n + (1 - alpha/100))
indirect = E * beta * n

The charge, leak rate, lifetime, recovery and operating hours below are
scenario defaults, the emission factor is that of coal-fired generation.
"""
from dataclasses import dataclass

from hpck.common.errors import InputError
from hpck.environment.metadata import refrigerant_metadata

DEFAULTCONF = {
    'charge_m': 2.0,
    'leak_rate_L': 5.0,
    'life_n': 15.0,
    'recovery_alpha': 70.0,
    'operating_hours': 1500.0,
    'emission_factor_beta': 0.8,
}

TEWI_PARAMETERS = tuple(DEFAULTCONF)


class InvalidTewiInputs(InputError):
    pass


@dataclass(frozen=True)
class TewiInputs:
    gwp: float
    charge_m: float = DEFAULTCONF['charge_m']
    leak_rate_L: float = DEFAULTCONF['leak_rate_L']
    life_n: float = DEFAULTCONF['life_n']
    recovery_alpha: float = DEFAULTCONF['recovery_alpha']
    annual_energy_E: float = 0.0
    emission_factor_beta: float = DEFAULTCONF['emission_factor_beta']

    def __post_init__(self):
        for name in ('leak_rate_L', 'recovery_alpha'):
            value = getattr(self, name)
            if not (0.0 <= value <= 100.0):
                raise InvalidTewiInputs('{} must be within 0 .. 100 %, got {}'.format(name, value))
        for name in ('gwp', 'charge_m', 'life_n', 'annual_energy_E', 'emission_factor_beta'):
            if getattr(self, name) < 0:
                raise InvalidTewiInputs('{} must be >= 0, got {}'.format(name, getattr(self, name)))


@dataclass(frozen=True)
class TewiResult:
    direct: float  # kg CO2-eq
    indirect: float
    total: float


def tewi(inputs):
    direct = inputs.gwp * inputs.charge_m * (
        inputs.leak_rate_L / 100.0 * inputs.life_n + (1.0 - inputs.recovery_alpha / 100.0))
    indirect = inputs.annual_energy_E * inputs.emission_factor_beta * inputs.life_n
    return TewiResult(direct, indirect, direct + indirect)


def tewi_inputs_for(refrigerant, sol, params=None):
    """
    TewiInputs for a solved cycle: GWP from the metadata and the annual
    energy E = W_elec_total * operating_hours.

    params - Overrides for DEFAULTCONF keys
    """
    conf = dict(DEFAULTCONF)
    if params:
        unknown = sorted(set(params) - set(DEFAULTCONF))
        if unknown:
            raise InvalidTewiInputs('Unknown TEWI parameter(s): {}'.format(', '.join(unknown)))
        conf.update(params)
    try:
        conf = {k: float(v) for k, v in conf.items()}
    except (TypeError, ValueError) as e:
        raise InvalidTewiInputs('TEWI parameters must be numbers: {}'.format(e))
    if conf['operating_hours'] < 0:
        raise InvalidTewiInputs('operating_hours must be >= 0, got {}'.format(conf['operating_hours']))
    return TewiInputs(
        gwp=refrigerant_metadata(refrigerant).gwp_100yr,
        charge_m=conf['charge_m'],
        leak_rate_L=conf['leak_rate_L'],
        life_n=conf['life_n'],
        recovery_alpha=conf['recovery_alpha'],
        annual_energy_E=sol.W_elec_total * conf['operating_hours'],
        emission_factor_beta=conf['emission_factor_beta'],
    )
