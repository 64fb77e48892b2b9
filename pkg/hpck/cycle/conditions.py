# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Operating conditions of the heat pump.

Two ways of producing them are provided: the regressions fitted on the
measured data (sink temperature 40..50 C, compressor power given), and the
design point used for refrigerant screening (fixed condenser capacity).
"""
import logging
import warnings
from dataclasses import dataclass, fields, replace
from typing import Union

from hpck.common.errors import InputError

logger = logging.getLogger(__name__)

REGRESSION_RANGE = (40.0, 50.0)
REGRESSED_FIELDS = ('T_source', 'W_elec_comp', 'T_SH', 'T_SC', 'T_EAP', 'T_CAP')

DEFAULTS = {
    'T0': 20.0,
    'P0': 101.325,
    'pump1_flow': 0.595,
    'pump2_flow': 0.543,
    'pump1_power': 60.0,
    'pump2_power': 40.0,
    'htf_cp': 4.186,
    'htf_rho': 998.0,
    # Motor and drive losses outside the rated compressor efficiency fit
    'drive_efficiency': 0.95,
}

DESIGN_POINT = {
    'T_sink': 50.0,
    'T_source': 13.0,
    'T_SH': 8.0,
    'T_SC': 2.0,
    'T_EAP': 2.0,
    'T_CAP': 2.0,
}
DESIGN_Q_COND = 5.0


class RangeWarning(UserWarning):
    pass


class InvalidConditions(InputError):
    pass


class InvalidOverride(InvalidConditions):
    pass


@dataclass(frozen=True)
class MeasuredPower:
    W_elec_comp: float  # kW

    def __post_init__(self):
        if not self.W_elec_comp > 0:
            raise InvalidConditions('W_elec_comp must be > 0, got {}'.format(self.W_elec_comp))


@dataclass(frozen=True)
class FixedCapacity:
    Q_cond: float  # kW

    def __post_init__(self):
        if not self.Q_cond > 0:
            raise InvalidConditions('Q_cond must be > 0, got {}'.format(self.Q_cond))


@dataclass(frozen=True)
class OperatingConditions:
    T_sink: float
    T_source: float
    T_SH: float
    T_SC: float
    T_EAP: float
    T_CAP: float
    mode: Union[MeasuredPower, FixedCapacity]
    T0: float = DEFAULTS['T0']
    P0: float = DEFAULTS['P0']
    pump1_flow: float = DEFAULTS['pump1_flow']
    pump2_flow: float = DEFAULTS['pump2_flow']
    pump1_power: float = DEFAULTS['pump1_power']
    pump2_power: float = DEFAULTS['pump2_power']
    htf_cp: float = DEFAULTS['htf_cp']
    htf_rho: float = DEFAULTS['htf_rho']
    drive_efficiency: float = DEFAULTS['drive_efficiency']

    def __post_init__(self):
        if not self.T_sink > self.T_source:
            raise InvalidConditions('T_sink ({}) must be above T_source ({})'.format(self.T_sink, self.T_source))
        for name in ('T_SH', 'T_SC', 'T_EAP', 'T_CAP'):
            if getattr(self, name) < 0:
                raise InvalidConditions('{} must be >= 0, got {}'.format(name, getattr(self, name)))
        for name in ('pump1_flow', 'pump2_flow', 'htf_cp', 'htf_rho', 'P0'):
            if not getattr(self, name) > 0:
                raise InvalidConditions('{} must be > 0, got {}'.format(name, getattr(self, name)))
        if not (0.0 < self.drive_efficiency <= 1.0):
            raise InvalidConditions('drive_efficiency must be in (0, 1], got {}'.format(self.drive_efficiency))
        # Zero pump power is allowed so the pump-free limit can be evaluated
        for name in ('pump1_power', 'pump2_power'):
            if getattr(self, name) < 0:
                raise InvalidConditions('{} must be >= 0, got {}'.format(name, getattr(self, name)))
        if not isinstance(self.mode, (MeasuredPower, FixedCapacity)):
            raise InvalidConditions('mode must be MeasuredPower or FixedCapacity, got {!r}'.format(self.mode))

    @property
    def T_evap(self):
        return self.T_source - self.T_EAP - self.T_SH

    @property
    def T_cond(self):
        return self.T_sink + self.T_CAP + self.T_SC

    @property
    def m_pump1(self):
        """Ground loop HTF mass flow, kg/s."""
        return self.htf_rho * self.pump1_flow / 3600.0

    @property
    def m_pump2(self):
        """Tank loop HTF mass flow, kg/s."""
        return self.htf_rho * self.pump2_flow / 3600.0

    @property
    def pump_power(self):
        """Both circulation pumps, kW."""
        return (self.pump1_power + self.pump2_power) / 1000.0

    def as_dict(self):
        out = {f.name: getattr(self, f.name) for f in fields(self) if f.name != 'mode'}
        if isinstance(self.mode, MeasuredPower):
            out['W_elec_comp'] = self.mode.W_elec_comp
        else:
            out['Q_cond'] = self.mode.Q_cond
        return out


FIELD_NAMES = tuple(f.name for f in fields(OperatingConditions) if f.name != 'mode')
OVERRIDE_NAMES = FIELD_NAMES + ('W_elec_comp', 'Q_cond')


def regressions(T_sink):
    """Values of the regressed quantities at a sink temperature."""
    return {
        'T_source': 0.01048 * T_sink ** 2 - 1.081 * T_sink + 40.3,
        'W_elec_comp': 0.000195 * T_sink ** 2 + 0.0098 * T_sink + 0.626,
        'T_SH': 13.5 - 0.046 * T_sink,
        'T_SC': 5.1 - 0.071 * T_sink,
        'T_EAP': 0.7 + 0.029 * T_sink,
        'T_CAP': 9.1 - 0.088 * T_sink,
    }


def _build(values, overrides):
    overrides = dict(overrides or {})
    unknown = sorted(set(overrides) - set(OVERRIDE_NAMES))
    if unknown:
        raise InvalidOverride('Unknown condition override(s): {}'.format(', '.join(unknown)))
    if 'W_elec_comp' in overrides and 'Q_cond' in overrides:
        raise InvalidOverride('Give either W_elec_comp or Q_cond, not both')
    for key, value in overrides.items():
        try:
            overrides[key] = float(value)
        except (TypeError, ValueError):
            raise InvalidOverride('Override {} must be a number, got {!r}'.format(key, value))
    values = dict(values)
    if 'Q_cond' in overrides:
        values.pop('W_elec_comp', None)
    elif 'W_elec_comp' in overrides:
        values.pop('Q_cond', None)
    values.update(overrides)
    try:
        if 'Q_cond' in values:
            mode = FixedCapacity(values.pop('Q_cond'))
        else:
            mode = MeasuredPower(values.pop('W_elec_comp'))
        return OperatingConditions(mode=mode, **values)
    except InvalidConditions as e:
        raise InvalidOverride(str(e))


def operating_conditions_from_regressions(T_sink, overrides=None):
    """
    Operating conditions at a sink temperature from the measured-data
    regressions, compressor power given.

    T_sink - Sink (tank) temperature, C
    overrides - Optional {field: value}; any OperatingConditions field, or
                W_elec_comp / Q_cond to set the mode
    """
    overrides = overrides or {}
    lo, hi = REGRESSION_RANGE
    if not (lo <= T_sink <= hi) and not all(k in overrides for k in REGRESSED_FIELDS):
        warnings.warn('T_sink = {} C is outside the {}..{} C range the regressions were fitted on'.format(
            T_sink, lo, hi), RangeWarning, stacklevel=2)
    values = dict(DEFAULTS)
    values.update(regressions(T_sink))
    values['T_sink'] = T_sink
    return _build(values, overrides)


def design_point_conditions(refrigerant=None, Q_cond=DESIGN_Q_COND, overrides=None):
    """
    The screening design point: T_sink 50, T_source 13, T_SH 8, T_SC 2,
    T_EAP 2, T_CAP 2 with the condenser capacity fixed. The conditions are
    the same for every refrigerant.
    """
    values = dict(DEFAULTS)
    values.update(DESIGN_POINT)
    values['Q_cond'] = Q_cond
    return _build(values, overrides)


def custom_conditions(T_sink, overrides):
    """
    Conditions built only from the given values and the defaults; the
    overrides must name T_source, T_SH, T_SC, T_EAP, T_CAP and one of
    W_elec_comp / Q_cond.
    """
    overrides = dict(overrides or {})
    missing = [k for k in REGRESSED_FIELDS if k != 'W_elec_comp' and k not in overrides]
    if 'W_elec_comp' not in overrides and 'Q_cond' not in overrides:
        missing.append('W_elec_comp or Q_cond')
    if missing:
        raise InvalidOverride('Custom conditions need {}'.format(', '.join(missing)))
    values = dict(DEFAULTS)
    values['T_sink'] = T_sink
    return _build(values, overrides)


def with_mode(cond, mode):
    return replace(cond, mode=mode)
