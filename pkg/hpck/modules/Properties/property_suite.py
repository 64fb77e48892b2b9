# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
import numpy as np

from hpck.environment.metadata import refrigerant_metadata
from hpck.properties.property_set import (P_DEAD_STATE, saturation_pressure, saturation_temperature,
                                          superheated_state, two_phase_state)
from hpck.scenario.validate import CheckResult

TYPE = 'Properties'
NAME = 'property_suite'
DEFAULTCONF = {
    'ENABLED': True,
    'round_trip_K': 0.05,
    'boiling_point_K': 0.3,
    # Published boiling point of R152a differs from current equations of state
    'boiling_point_overrides': {'R152a': 0.8},
    'monotonic_step_K': 0.25,
}


def _round_trip(ps):
    back = np.array([saturation_temperature(ps, saturation_pressure(ps, T)) for T in ps.T])
    return float(np.max(np.abs(back - ps.T)))


def _node_exact(ps):
    if any(saturation_pressure(ps, T) != P for T, P in zip(ps.T, ps.P)):
        return False
    grid = ps.superheat
    for i, P in enumerate(grid.pressures):
        for k in range(1, len(grid.offsets)):
            state = superheated_state(ps, float(P), float(grid.t_sat[i] + grid.offsets[k]))
            if state.h != grid.h[i, k] or state.s != grid.s[i, k] or state.rho != grid.rho[i, k]:
                return False
    return True


def _monotonic(ps, step):
    grid = ps.superheat
    # Between grid pressures, where rows are blended
    pressures = np.sqrt(grid.pressures[1:] * grid.pressures[:-1])
    offsets = np.arange(0.0, grid.max_offset, step)
    for P in pressures:
        t_sat = saturation_temperature(ps, float(P))
        states = [superheated_state(ps, float(P), t_sat + off) for off in offsets]
        h = [s.h for s in states]
        s = [s.s for s in states]
        if np.any(np.diff(h) <= 0) or np.any(np.diff(s) <= 0):
            return False
    return bool(np.all(np.diff(ps.P) > 0))


def _quality_bounds(ps):
    for T, P, hf, hg in zip(ps.T, ps.P, ps.h_f, ps.h_g):
        P = float(P)
        if two_phase_state(ps, P, float(hf)).quality != 0.0 or two_phase_state(ps, P, float(hg)).quality != 1.0:
            return False
        x = two_phase_state(ps, P, float((hf + hg) / 2.0)).quality
        if not (0.0 <= x <= 1.0) or abs(x - 0.5) > 1e-9:
            return False
    return True


def check(context, conf=DEFAULTCONF):
    return bool(context.property_sets)


def scan(context, conf=DEFAULTCONF):
    '''Interpolation identities and published boiling points of each property set'''
    results = []
    for rid, ps in sorted(context.property_sets.items(), key=lambda item: item[0].value):
        label = rid.value
        worst = _round_trip(ps)
        results.append(CheckResult('{} saturation round trip (K)'.format(label), 0.0, worst, conf['round_trip_K'],
                                   worst <= conf['round_trip_K']))
        exact = _node_exact(ps)
        results.append(CheckResult('{} node-exact interpolation'.format(label), True, exact, None, exact))
        monotonic = _monotonic(ps, conf['monotonic_step_K'])
        results.append(CheckResult('{} monotonicity'.format(label), True, monotonic, None, monotonic))
        bounds = _quality_bounds(ps)
        results.append(CheckResult('{} quality bounds'.format(label), True, bounds, None, bounds))

        tol = conf['boiling_point_overrides'].get(label, conf['boiling_point_K'])
        expected = refrigerant_metadata(rid).normal_boiling_point
        computed = saturation_temperature(ps, P_DEAD_STATE)
        results.append(CheckResult('{} normal boiling point'.format(label), expected, computed, tol,
                                   abs(computed - expected) <= tol))

    metadata = {}
    metadata['Name'] = NAME
    metadata['Type'] = TYPE
    return (results, metadata)
