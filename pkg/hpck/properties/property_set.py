# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Tabulated refrigerant properties.

A PropertySet holds the saturation table and the superheated-vapor grid of
one refrigerant, loaded from `<id>.sat.csv` and `<id>.sh.csv`. Every lookup
is a pure function of the (immutable) set, so one set may be shared between
threads.

Saturation properties are linear in T. Superheated properties are carried as
departures from saturated vapor, linear in the superheat offset along each
grid pressure and linear in ln P between grid pressures. No lookup ever
extrapolates.
"""
import logging
import os
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional, Tuple

import numpy as np
import pandas as pd
from scipy.optimize import bisect

from hpck.common.errors import DataError, InputError
from hpck.environment.metadata import refrigerant_metadata
from hpck.properties.refrigerants import RefrigerantId

logger = logging.getLogger(__name__)

SAT_COLUMNS = ['T_C', 'P_kPa', 'hf_kJkg', 'hg_kJkg', 'sf_kJkgK', 'sg_kJkgK', 'rhof_kgm3', 'rhog_kgm3']
SH_COLUMNS = ['P_kPa', 'T_C', 'h_kJkg', 's_kJkgK', 'rho_kgm3']

# Saturated liquid at 0 C: h = 200 kJ/kg, s = 1.0 kJ/(kg K)
REFERENCE_CONVENTION = 'IIR'

T_MIN_COVERAGE = -45.0
P_DEAD_STATE = 101.325
MAX_SPACING = 1.0
MAX_SUPERHEAT = 80.0
# Allowed mismatch between the first temperature of a grid pressure and T_sat(P)
GRID_TSAT_TOLERANCE = 0.1
EPS = 1e-9


class MissingData(DataError):
    pass


class MalformedData(DataError):
    pass


class InvariantViolation(DataError):
    pass


class OutOfRange(InputError):
    pass


class SubSaturation(InputError):
    pass


class WetCompression(InputError):
    pass


class Phase(Enum):
    SUBCOOLED_LIQUID = 'subcooled-liquid'
    TWO_PHASE = 'two-phase'
    SUPERHEATED_VAPOR = 'superheated-vapor'


@dataclass(frozen=True)
class SaturationRecord:
    T: float
    P_sat: float
    h_f: float
    h_g: float
    s_f: float
    s_g: float
    rho_f: float
    rho_g: float


@dataclass(frozen=True)
class ThermoState:
    T: float
    P: float
    h: float
    s: float
    rho: float
    quality: Optional[float]
    phase: Phase
    refrigerant: RefrigerantId
    convention: str = REFERENCE_CONVENTION

    @property
    def is_two_phase(self):
        return self.phase is Phase.TWO_PHASE


@dataclass(frozen=True, eq=False)
class SuperheatGrid:
    pressures: np.ndarray
    t_sat: np.ndarray
    offsets: np.ndarray
    h: np.ndarray
    s: np.ndarray
    rho: np.ndarray

    @property
    def temperatures(self):
        """Per-pressure temperature rows, T_sat(P) + offsets."""
        return self.t_sat[:, None] + self.offsets[None, :]

    @property
    def max_offset(self):
        return float(self.offsets[-1])


@dataclass(frozen=True, eq=False)
class PropertySet:
    refrigerant: RefrigerantId
    T: np.ndarray
    P: np.ndarray
    h_f: np.ndarray
    h_g: np.ndarray
    s_f: np.ndarray
    s_g: np.ndarray
    rho_f: np.ndarray
    rho_g: np.ndarray
    superheat: SuperheatGrid
    reference_convention: str = REFERENCE_CONVENTION
    source: str = ''
    saturation: Tuple[SaturationRecord, ...] = field(default=(), repr=False)

    def __post_init__(self):
        if not self.saturation:
            records = tuple(SaturationRecord(*row) for row in zip(
                self.T.tolist(), self.P.tolist(), self.h_f.tolist(), self.h_g.tolist(),
                self.s_f.tolist(), self.s_g.tolist(), self.rho_f.tolist(), self.rho_g.tolist()))
            object.__setattr__(self, 'saturation', records)

    @property
    def t_range(self):
        return float(self.T[0]), float(self.T[-1])

    @property
    def p_range(self):
        return float(self.P[0]), float(self.P[-1])

    def shifted(self, dh, ds):
        """
        Returns a copy with every enthalpy moved by dh and every entropy by ds,
        that is the same fluid under another reference state.
        """
        grid = replace(self.superheat, h=self.superheat.h + dh, s=self.superheat.s + ds)
        return replace(
            self, h_f=self.h_f + dh, h_g=self.h_g + dh, s_f=self.s_f + ds, s_g=self.s_g + ds,
            superheat=grid, saturation=(),
            reference_convention='{}{:+g}/{:+g}'.format(self.reference_convention, dh, ds))


def _read_table(path, columns):
    if not os.path.isfile(path):
        raise MissingData('Property table {} not found'.format(path))
    try:
        df = pd.read_csv(path, encoding='utf-8')
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise MalformedData('{}: {}'.format(path, e))
    if list(df.columns) != columns:
        raise MalformedData('{}: expected header {}, got {}'.format(
            path, ','.join(columns), ','.join(str(c) for c in df.columns)))
    if df.empty:
        raise MalformedData('{}: no data rows'.format(path))
    try:
        df = df.apply(pd.to_numeric, errors='raise')
    except (ValueError, TypeError) as e:
        raise MalformedData('{}: non-numeric value: {}'.format(path, e))
    values = df.to_numpy(dtype=float)
    if not np.all(np.isfinite(values)):
        row = int(np.argwhere(~np.isfinite(values))[0][0])
        raise MalformedData('{}: missing or non-finite value in data row {}'.format(path, row + 1))
    return values


def _check_saturation(path, rid, values):
    T, P, hf, hg, sf, sg, rhof, rhog = values.T
    if np.any(np.diff(T) <= 0):
        raise InvariantViolation('{}: T_C is not strictly increasing'.format(path))
    if np.any(np.diff(P) <= 0):
        i = int(np.argmax(np.diff(P) <= 0))
        raise InvariantViolation('{}: P_sat does not increase between {} C and {} C'.format(path, T[i], T[i + 1]))
    for hi, lo, name in ((hg, hf, 'h_g > h_f'), (sg, sf, 's_g > s_f'), (rhof, rhog, 'rho_f > rho_g')):
        if np.any(hi <= lo):
            i = int(np.argmax(hi <= lo))
            raise InvariantViolation('{}: {} violated at {} C'.format(path, name, T[i]))
    if np.any(P <= 0) or np.any(rhog <= 0):
        raise InvariantViolation('{}: pressures and densities must be positive'.format(path))
    if np.max(np.diff(T)) > MAX_SPACING + EPS:
        raise InvariantViolation('{}: saturation grid spacing exceeds {} K'.format(path, MAX_SPACING))
    t_top = refrigerant_metadata(rid).critical_temperature - 5.0
    if T[0] > T_MIN_COVERAGE + EPS or T[-1] < t_top - EPS:
        raise InvariantViolation('{}: saturation table covers {} .. {} C, needs {} .. {} C'.format(
            path, T[0], T[-1], T_MIN_COVERAGE, t_top))


def _check_superheat(path, rid, values, T_sat, P_sat):
    pressures, first_rows = np.unique(values[:, 0], return_index=True)
    order = np.argsort(first_rows)
    if np.any(np.diff(pressures[order]) <= 0):
        raise InvariantViolation('{}: pressure groups are not in ascending order'.format(path))
    bounds = list(first_rows[order]) + [len(values)]
    groups = [values[bounds[i]:bounds[i + 1]] for i in range(len(pressures))]
    # Each pressure must form one contiguous block
    for group in groups:
        if np.any(group[:, 0] != group[0, 0]):
            raise MalformedData('{}: rows for P = {} kPa are not contiguous'.format(path, group[0, 0]))

    offsets = groups[0][:, 1] - groups[0][0, 1]
    for group in groups:
        group_offsets = group[:, 1] - group[0, 1]
        if len(group_offsets) != len(offsets) or np.max(np.abs(group_offsets - offsets)) > 1e-6:
            raise MalformedData('{}: grid is not rectangular in superheat offset at P = {} kPa'.format(
                path, group[0, 0]))
        if np.any(np.diff(group[:, 1]) <= 0):
            raise InvariantViolation('{}: T_C not ascending at P = {} kPa'.format(path, group[0, 0]))
        if np.any(np.diff(group[:, 2]) <= 0) or np.any(np.diff(group[:, 3]) <= 0):
            raise InvariantViolation('{}: h and s must increase with T at P = {} kPa'.format(path, group[0, 0]))
        if np.any(np.diff(group[:, 4]) >= 0) or np.any(group[:, 4] <= 0):
            raise InvariantViolation('{}: rho must decrease with T at P = {} kPa'.format(path, group[0, 0]))
    if offsets[-1] < MAX_SUPERHEAT - 1e-6:
        raise InvariantViolation('{}: superheat grid reaches only {} K above saturation'.format(path, offsets[-1]))

    p = np.array([g[0, 0] for g in groups])
    if p[0] > P_DEAD_STATE + EPS:
        raise InvariantViolation('{}: lowest grid pressure {} kPa is above {} kPa'.format(path, p[0], P_DEAD_STATE))
    p_cap = 0.9 * refrigerant_metadata(rid).critical_pressure_kpa
    if p[-1] > p_cap + 1e-6:
        raise InvariantViolation('{}: highest grid pressure {} kPa exceeds 0.9 P_crit = {} kPa'.format(
            path, p[-1], p_cap))
    if p[0] < P_sat[0] - EPS or p[-1] > P_sat[-1] + EPS:
        raise InvariantViolation('{}: grid pressures leave the saturation table'.format(path))
    t_sat = np.interp(p, P_sat, T_sat)
    first = np.array([g[0, 1] for g in groups])
    worst = np.max(np.abs(first - t_sat))
    if worst > GRID_TSAT_TOLERANCE:
        raise InvariantViolation('{}: grid rows must start at T_sat(P), off by {:.3f} K'.format(path, worst))

    stack = np.stack(groups)
    return SuperheatGrid(
        pressures=p,
        t_sat=t_sat,
        offsets=offsets,
        h=stack[:, :, 2],
        s=stack[:, :, 3],
        rho=stack[:, :, 4],
    )


def table_paths(refrigerant, data_dir):
    rid = RefrigerantId.parse(refrigerant)
    return (os.path.join(data_dir, '{}.sat.csv'.format(rid.value)),
            os.path.join(data_dir, '{}.sh.csv'.format(rid.value)))


def load_property_set(refrigerant, data_dir):
    """
    Loads and validates the property tables of one refrigerant.

    refrigerant - RefrigerantId or its name
    data_dir - Directory holding <id>.sat.csv and <id>.sh.csv
    """
    rid = RefrigerantId.parse(refrigerant)
    sat_path, sh_path = table_paths(rid, data_dir)
    sat = _read_table(sat_path, SAT_COLUMNS)
    sh = _read_table(sh_path, SH_COLUMNS)
    _check_saturation(sat_path, rid, sat)
    grid = _check_superheat(sh_path, rid, sh, sat[:, 0], sat[:, 1])
    columns = [np.ascontiguousarray(c) for c in sat.T]
    logger.info('Loaded %s: %d saturation records, %d x %d superheat grid', rid, len(sat),
                len(grid.pressures), len(grid.offsets))
    return PropertySet(rid, *columns, superheat=grid, source=os.path.abspath(data_dir))


def _check_T(ps, T):
    lo, hi = ps.t_range
    if not (lo - EPS <= T <= hi + EPS):
        raise OutOfRange('{}: T = {} C outside saturation table {} .. {} C'.format(ps.refrigerant, T, lo, hi))


def _check_P(ps, P):
    lo, hi = ps.p_range
    if not (lo - EPS <= P <= hi + EPS):
        raise OutOfRange('{}: P = {} kPa outside saturation table {} .. {} kPa'.format(
            ps.refrigerant, P, lo, hi))


def saturation_pressure(ps, T):
    _check_T(ps, T)
    return float(np.interp(T, ps.T, ps.P))


def saturation_temperature(ps, P):
    _check_P(ps, P)
    return float(np.interp(P, ps.P, ps.T))


def _saturated_values(ps, T):
    return [float(np.interp(T, ps.T, column))
            for column in (ps.P, ps.h_f, ps.h_g, ps.s_f, ps.s_g, ps.rho_f, ps.rho_g)]


def latent_heat(ps, T):
    _check_T(ps, T)
    return float(np.interp(T, ps.T, ps.h_g) - np.interp(T, ps.T, ps.h_f))


def saturated_state(ps, T, phase):
    """
    Saturated liquid ('liquid') or vapor ('vapor') at T.
    """
    _check_T(ps, T)
    P, hf, hg, sf, sg, rhof, rhog = _saturated_values(ps, T)
    if phase == 'liquid':
        return ThermoState(T, P, hf, sf, rhof, 0.0, Phase.TWO_PHASE, ps.refrigerant, ps.reference_convention)
    if phase == 'vapor':
        return ThermoState(T, P, hg, sg, rhog, 1.0, Phase.TWO_PHASE, ps.refrigerant, ps.reference_convention)
    raise ValueError('phase must be "liquid" or "vapor", got {!r}'.format(phase))


def subcooled_state(ps, T, P=None):
    """
    Compressed liquid at T, approximated by saturated liquid at the same
    temperature. P defaults to P_sat(T).
    """
    _check_T(ps, T)
    P_sat, hf, _, sf, _, rhof, _ = _saturated_values(ps, T)
    if P is None:
        P = P_sat
    elif P < P_sat - EPS:
        raise OutOfRange('{}: P = {} kPa is below P_sat({} C) = {} kPa, not a liquid'.format(
            ps.refrigerant, P, T, P_sat))
    return ThermoState(T, P, hf, sf, rhof, None, Phase.SUBCOOLED_LIQUID, ps.refrigerant, ps.reference_convention)


def _grid_row(grid, P):
    x = np.log(P)
    lnp = np.log(grid.pressures)
    if not (lnp[0] - EPS <= x <= lnp[-1] + EPS):
        raise OutOfRange('P = {} kPa outside superheat grid {} .. {} kPa'.format(
            P, grid.pressures[0], grid.pressures[-1]))
    i = int(np.searchsorted(grid.pressures, P))
    if i < len(grid.pressures) and grid.pressures[i] == P:
        return i, None
    i = min(max(i, 1), len(grid.pressures) - 1)
    w = (x - lnp[i - 1]) / (lnp[i] - lnp[i - 1])
    return i - 1, w


def _superheat_values(ps, P, offset):
    """h, s, rho at pressure P and offset K above T_sat(P)."""
    grid = ps.superheat
    row, w = _grid_row(grid, P)
    along = [np.interp(offset, grid.offsets, table[row]) for table in (grid.h, grid.s, grid.rho)]
    if w is None:
        return [float(v) for v in along]
    above = [np.interp(offset, grid.offsets, table[row + 1]) for table in (grid.h, grid.s, grid.rho)]
    base = [table[row, 0] for table in (grid.h, grid.s, grid.rho)]
    base_above = [table[row + 1, 0] for table in (grid.h, grid.s, grid.rho)]
    t_sat = saturation_temperature(ps, P)
    _, _, hg, _, sg, _, rhog = _saturated_values(ps, t_sat)
    departures = [(1.0 - w) * (a - b) + w * (c - d) for a, b, c, d in zip(along, base, above, base_above)]
    return [float(v + d) for v, d in zip((hg, sg, rhog), departures)]


def _superheated(ps, P, t_sat, offset):
    h, s, rho = _superheat_values(ps, P, offset)
    return ThermoState(t_sat + offset, P, h, s, rho, None, Phase.SUPERHEATED_VAPOR, ps.refrigerant,
                       ps.reference_convention)


def superheated_state(ps, P, T):
    """
    Superheated vapor at (P, T), with T between T_sat(P) and T_sat(P) + the
    grid's largest offset.
    """
    t_sat = saturation_temperature(ps, P)
    offset = T - t_sat
    if offset < -EPS:
        raise SubSaturation('{}: T = {} C is below T_sat({} kPa) = {:.4f} C'.format(ps.refrigerant, T, P, t_sat))
    if offset > ps.superheat.max_offset + EPS:
        raise OutOfRange('{}: T = {} C is more than {} K above saturation at {} kPa'.format(
            ps.refrigerant, T, ps.superheat.max_offset, P))
    offset = min(max(offset, 0.0), ps.superheat.max_offset)
    # Snap to a stored offset so grid nodes come back exactly
    offsets = ps.superheat.offsets
    k = int(np.argmin(np.abs(offsets - offset)))
    if abs(offsets[k] - offset) <= EPS:
        offset = float(offsets[k])
    if offset == 0.0:
        vapor = saturated_state(ps, t_sat, 'vapor')
        return replace(vapor, P=P, quality=None, phase=Phase.SUPERHEATED_VAPOR)
    return _superheated(ps, P, t_sat, offset)


def _invert(ps, P, target, index, name):
    """Bisection on the superheat offset for the state whose `index` value equals target."""
    t_sat = saturation_temperature(ps, P)
    top = ps.superheat.max_offset
    low = _superheat_values(ps, P, 0.0)[index]
    high = _superheat_values(ps, P, top)[index]
    if target > high + EPS:
        raise OutOfRange('{}: {} = {} beyond the superheat grid at {} kPa (max {:.6f})'.format(
            ps.refrigerant, name, target, P, high))
    if target <= low + EPS:
        return superheated_state(ps, P, t_sat)
    offset = bisect(lambda off: _superheat_values(ps, P, off)[index] - target, 0.0, top, xtol=1e-10, maxiter=200)
    return _superheated(ps, P, t_sat, offset)


def state_at_entropy(ps, P, s):
    """
    Superheated state at pressure P with entropy s. Raises WetCompression if
    s is below the saturated vapor entropy at P.
    """
    t_sat = saturation_temperature(ps, P)
    s_g = float(np.interp(t_sat, ps.T, ps.s_g))
    if s < s_g - EPS:
        raise WetCompression('{}: s = {:.6f} is below s_g = {:.6f} at {} kPa'.format(ps.refrigerant, s, s_g, P))
    if abs(s - s_g) <= EPS:
        return superheated_state(ps, P, t_sat)
    return _invert(ps, P, s, 1, 's')


def state_at_enthalpy(ps, P, h):
    """Superheated state at pressure P with enthalpy h."""
    t_sat = saturation_temperature(ps, P)
    h_g = float(np.interp(t_sat, ps.T, ps.h_g))
    if h < h_g - EPS:
        raise OutOfRange('{}: h = {:.4f} is inside the dome at {} kPa (h_g = {:.4f})'.format(
            ps.refrigerant, h, P, h_g))
    if abs(h - h_g) <= EPS:
        return superheated_state(ps, P, t_sat)
    return _invert(ps, P, h, 0, 'h')


def two_phase_state(ps, P, h):
    """Liquid-vapor mixture at pressure P and enthalpy h."""
    T = saturation_temperature(ps, P)
    _, hf, hg, sf, sg, rhof, rhog = _saturated_values(ps, T)
    if h < hf - EPS or h > hg + EPS:
        raise OutOfRange('{}: h = {:.4f} outside the dome {:.4f} .. {:.4f} at {} kPa'.format(
            ps.refrigerant, h, hf, hg, P))
    if h <= hf:
        x = 0.0
    elif h >= hg:
        x = 1.0
    else:
        x = (h - hf) / (hg - hf)
    s = sf + x * (sg - sf)
    rho = 1.0 / ((1.0 - x) / rhof + x / rhog)
    return ThermoState(T, P, h, s, rho, x, Phase.TWO_PHASE, ps.refrigerant, ps.reference_convention)


def dead_state(ps, T0=20.0, P0=101.325):
    """Refrigerant state at the environment conditions (T0, P0)."""
    try:
        return superheated_state(ps, P0, T0)
    except SubSaturation as e:
        raise OutOfRange('Dead state ({} C, {} kPa) is not in the superheat grid: {}'.format(T0, P0, e))
