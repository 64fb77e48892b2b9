# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Builds the property tables from CoolProp.

The blends R450A and R513A are evaluated as HEOS mixtures and reduced to
pseudo-pure fluids: P_sat is the mean of bubble and dew pressure, liquid
properties come from the bubble line and vapor properties from the dew line.
The superheated rows of a blend are evaluated at the dew pressure, starting
from the dew temperature, and filed under the mean pressure. Every fluid is
shifted to h = 200 kJ/kg, s = 1.0 kJ/(kg K) for saturated liquid at 0 C.

A saturation node the oracle cannot flash is moved by up to 0.2 K, then
located from an extrapolated pressure. A superheated point is retried with
the gas phase imposed. Whatever still fails raises OracleFailure.
"""
import json
import logging
import math
import os
from dataclasses import dataclass, field
from typing import Mapping, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from hpck.common.errors import DataError, InputError
from hpck.environment.metadata import refrigerant_metadata
from hpck.properties.property_set import (MAX_SPACING, MAX_SUPERHEAT, SAT_COLUMNS, SH_COLUMNS, T_MIN_COVERAGE,
                                          table_paths)
from hpck.properties.refrigerants import ALL_REFRIGERANTS, RefrigerantId

logger = logging.getLogger(__name__)

KELVIN = 273.15

PURE_FLUIDS = {
    RefrigerantId.R134A: 'R134a',
    RefrigerantId.R152A: 'R152a',
    RefrigerantId.R1234YF: 'R1234yf',
    RefrigerantId.R1234ZE_E: 'R1234ze(E)',
}

# Mass fractions
BLENDS = {
    RefrigerantId.R450A: (('R134a', 0.42), ('R1234ze(E)', 0.58)),
    RefrigerantId.R513A: (('R134a', 0.44), ('R1234yf', 0.56)),
}

FLOAT_FORMAT = '%.10g'

# Tried in this order when a saturation node fails, K
NUDGES = (0.1, -0.1, 0.2, -0.2)


class OracleUnavailable(InputError):
    pass


class OracleFailure(DataError):
    pass


def _props_si():
    try:
        from CoolProp.CoolProp import PropsSI
    except ImportError:
        raise OracleUnavailable('CoolProp is required to build property tables. '
                                "Install it with 'pip install CoolProp'.")
    return PropsSI


def oracle_version():
    try:
        import CoolProp
    except ImportError:
        return None
    return CoolProp.__version__


def mole_fractions(components, props_si=None):
    """Converts (name, mass fraction) pairs into (name, mole fraction) pairs."""
    props_si = props_si or _props_si()
    try:
        moles = [(name, w / props_si('M', name)) for name, w in components]
    except Exception as e:
        raise OracleFailure('Molar mass lookup failed for {}: {}'.format(
            ', '.join(name for name, _ in components), e))
    total = sum(n for _, n in moles)
    return [(name, n / total) for name, n in moles]


def fluid_string(refrigerant, props_si=None):
    rid = RefrigerantId.parse(refrigerant)
    if rid in PURE_FLUIDS:
        return 'HEOS::' + PURE_FLUIDS[rid]
    parts = ['{}[{:.6f}]'.format(name, x) for name, x in mole_fractions(BLENDS[rid], props_si)]
    return 'HEOS::' + '&'.join(parts)


@dataclass(frozen=True)
class SaturationNode:
    """One saturation state in SI units, unshifted. T and t_dew in C."""
    T: float
    P: float
    p_dew: float
    t_dew: float
    hf: float
    hg: float
    sf: float
    sg: float
    rhof: float
    rhog: float


class _Oracle(object):
    """Raw (unshifted) saturation and single-phase lookups for one fluid, SI units."""
    def __init__(self, refrigerant, props_si):
        self.rid = RefrigerantId.parse(refrigerant)
        self.blend = self.rid in BLENDS
        self.fluid = fluid_string(self.rid, props_si)
        self.props_si = props_si

    def _call(self, output, name1, value1, name2, value2, node):
        try:
            value = self.props_si(output, name1, value1, name2, value2, self.fluid)
        except Exception as e:
            raise OracleFailure('{}: {} at {} failed: {}'.format(self.rid, output, node, e))
        if not math.isfinite(value):
            raise OracleFailure('{}: {} at {} is {}'.format(self.rid, output, node, value))
        return value

    def saturation(self, T_C):
        TK = T_C + KELVIN
        node = 'T = {:g} C'.format(T_C)

        def flash(output, quality):
            return self._call(output, 'T', TK, 'Q', quality, node)

        p_bubble = flash('P', 0)
        p_dew = flash('P', 1) if self.blend else p_bubble
        return SaturationNode(
            T=T_C, P=(p_bubble + p_dew) / 2.0, p_dew=p_dew, t_dew=T_C,
            hf=flash('H', 0), hg=flash('H', 1), sf=flash('S', 0), sg=flash('S', 1),
            rhof=flash('D', 0), rhog=flash('D', 1))

    def saturation_at_pressure(self, P):
        """Bubble and dew states at one pressure; T is the mean of both temperatures."""
        node = 'P = {:.6g} kPa'.format(P / 1000.0)

        def flash(output, quality):
            return self._call(output, 'P', P, 'Q', quality, node)

        t_bubble = flash('T', 0) - KELVIN
        t_dew = flash('T', 1) - KELVIN if self.blend else t_bubble
        return SaturationNode(
            T=(t_bubble + t_dew) / 2.0, P=P, p_dew=P, t_dew=t_dew,
            hf=flash('H', 0), hg=flash('H', 1), sf=flash('S', 0), sg=flash('S', 1),
            rhof=flash('D', 0), rhog=flash('D', 1))

    def single_phase(self, P, T_C):
        TK = T_C + KELVIN
        node = 'P = {:.6g} kPa, T = {:g} C'.format(P / 1000.0, T_C)
        try:
            return tuple(self._call(output, 'P', P, 'T', TK, node) for output in ('H', 'S', 'D'))
        except OracleFailure as e:
            logger.debug('%s; retrying as gas', e)
        return tuple(self._call(output, 'P|gas', P, 'T', TK, node) for output in ('H', 'S', 'D'))


def saturation_grid(refrigerant, step=0.5):
    """-45 C up to at least the critical temperature minus 5 K, in `step` increments."""
    t_top = refrigerant_metadata(refrigerant).critical_temperature - 5.0
    n = int(math.ceil((t_top - T_MIN_COVERAGE) / step - 1e-9))
    return [round(T_MIN_COVERAGE + i * step, 10) for i in range(n + 1)]


def _extrapolated_pressure(nodes, T_C):
    """ln P linear in 1/T through the last two nodes."""
    (t1, p1), (t2, p2) = [(n.T + KELVIN, n.P) for n in nodes[-2:]]
    slope = (math.log(p2) - math.log(p1)) / (1.0 / t2 - 1.0 / t1)
    return math.exp(math.log(p2) + slope * (1.0 / (T_C + KELVIN) - 1.0 / t2))


def _saturation_node(oracle, T, nodes, first, last):
    try:
        return oracle.saturation(T)
    except OracleFailure as e:
        error = e
    lower = nodes[-1].T if nodes else -math.inf

    def fits(t):
        return lower < t <= lower + MAX_SPACING if nodes else True

    # The end nodes may only move outwards, the coverage is checked at load time
    for delta in NUDGES:
        if (first and delta > 0) or (last and delta < 0) or not fits(T + delta):
            continue
        try:
            node = oracle.saturation(T + delta)
        except OracleFailure:
            continue
        logger.warning('%s: saturation node %g C moved to %g C', oracle.rid, T, node.T)
        return node

    if len(nodes) >= 2:
        target = T + max(NUDGES) if last else T
        try:
            node = oracle.saturation_at_pressure(_extrapolated_pressure(nodes, target))
        except OracleFailure as e:
            logger.debug('%s', e)
        else:
            if fits(node.T) and (not last or node.T >= T):
                logger.warning('%s: saturation node %g C located from pressure at %.4f C', oracle.rid, T, node.T)
                return node
    raise OracleFailure('{}: no saturation state at or near {:g} C ({})'.format(oracle.rid, T, error))


def saturation_nodes(oracle, temperatures):
    nodes = []
    for i, T in enumerate(temperatures):
        nodes.append(_saturation_node(oracle, T, nodes, first=i == 0, last=i == len(temperatures) - 1))
    return nodes


def build_tables(refrigerant, step=0.5, superheat_step=2.0, offset_step=2.0, props_si=None):
    """
    Returns the saturation and superheat tables of one refrigerant as
    DataFrames with the on-disk column names. Raises OracleFailure naming
    the fluid and node the oracle could not evaluate.
    """
    props_si = props_si or _props_si()
    rid = RefrigerantId.parse(refrigerant)
    oracle = _Oracle(rid, props_si)

    reference = oracle.saturation(0.0)
    dh = 200.0 - reference.hf / 1000.0
    ds = 1.0 - reference.sf / 1000.0

    nodes = saturation_nodes(oracle, saturation_grid(rid, step))
    sat = pd.DataFrame([(n.T, n.P / 1000.0, n.hf / 1000.0 + dh, n.hg / 1000.0 + dh, n.sf / 1000.0 + ds,
                         n.sg / 1000.0 + ds, n.rhof, n.rhog) for n in nodes], columns=SAT_COLUMNS)

    p_cap = 0.9 * refrigerant_metadata(rid).critical_pressure_kpa
    ratio = int(round(superheat_step / step))
    offsets = np.arange(0.0, MAX_SUPERHEAT + offset_step / 2.0, offset_step)
    grid = []
    for node in tqdm(nodes[::ratio], desc=str(rid), leave=False):
        P = node.P / 1000.0
        if P > p_cap:
            break
        grid.append((P, node.T, node.hg / 1000.0 + dh, node.sg / 1000.0 + ds, node.rhog))
        for off in offsets[1:]:
            h, s, rho = oracle.single_phase(node.p_dew, node.t_dew + off)
            grid.append((P, node.T + off, h / 1000.0 + dh, s / 1000.0 + ds, rho))
    sh = pd.DataFrame(grid, columns=SH_COLUMNS)
    return sat, sh


def write_tables(refrigerant, sat, sh, out_dir):
    sat_path, sh_path = table_paths(refrigerant, out_dir)
    for frame, path in ((sat, sat_path), (sh, sh_path)):
        with open(path, 'w', encoding='utf-8', newline='') as f:
            frame.to_csv(f, index=False, float_format=FLOAT_FORMAT, lineterminator='\n')
    return [sat_path, sh_path]


@dataclass(frozen=True)
class GenerationResult:
    paths: Tuple[str, ...]
    refrigerants: Tuple[RefrigerantId, ...]
    failures: Mapping[RefrigerantId, str] = field(default_factory=dict)


def generate_tables(refrigerants=ALL_REFRIGERANTS, out_dir='.', step=0.5, superheat_step=2.0):
    """
    Generates <id>.sat.csv and <id>.sh.csv for each refrigerant plus an
    oracle.json describing the source. A refrigerant the oracle fails on is
    logged and skipped; the others are still written.
    """
    props_si = _props_si()
    if not os.path.isdir(out_dir):
        os.makedirs(out_dir)
    written = []
    generated = []
    failures = {}
    blends = {}
    for rid in tqdm([RefrigerantId.parse(r) for r in refrigerants], desc='Refrigerants'):
        logger.info('Generating tables for %s', rid)
        try:
            sat, sh = build_tables(rid, step, superheat_step, props_si=props_si)
        except OracleFailure as e:
            logger.error('Skipping %s: %s', rid, e)
            failures[rid] = str(e)
            continue
        written.extend(write_tables(rid, sat, sh, out_dir))
        generated.append(rid)
        if rid in BLENDS:
            blends[rid.value] = {
                'mass_fractions': dict(BLENDS[rid]),
                'mole_fractions': dict(mole_fractions(BLENDS[rid], props_si)),
            }

    info = {
        'oracle': 'CoolProp',
        'version': oracle_version(),
        'backend': 'HEOS',
        'reference': 'h=200 kJ/kg, s=1.0 kJ/(kg K) for saturated liquid at 0 C',
        'saturation_step_K': step,
        'superheat_step_K': superheat_step,
        'blends': blends,
        'refrigerants': sorted(rid.value for rid in generated),
        'failed': sorted(rid.value for rid in failures),
    }
    info_path = os.path.join(out_dir, 'oracle.json')
    with open(info_path, 'w', encoding='utf-8') as f:
        json.dump(info, f, indent=2, sort_keys=True)
        f.write('\n')
    written.append(info_path)
    return GenerationResult(tuple(written), tuple(generated), failures)
