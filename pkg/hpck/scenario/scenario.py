# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Scenario documents.

A scenario is a UTF-8 JSON object with the keys refrigerants, mode, t_sink,
overrides, tewi and output. Only refrigerants and mode are required:

    {"refrigerants": ["R134a", "R152a"],
     "mode": "regression_sweep",
     "t_sink": {"start": 40, "stop": 50, "step": 1},
     "tewi": {"charge_m": 1.5},
     "output": {"format": "json", "path": "sweep.json"}}
"""
import json
import logging
import os
import warnings
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from hpck.common.errors import InputError
from hpck.common.utils import RangeSyntaxError, expand_range, parse_range
from hpck.cycle.conditions import (DESIGN_POINT, OVERRIDE_NAMES, REGRESSION_RANGE, RangeWarning, custom_conditions,
                                   design_point_conditions, operating_conditions_from_regressions)
from hpck.environment.tewi import TEWI_PARAMETERS
from hpck.properties.refrigerants import RefrigerantId, UnknownRefrigerant

logger = logging.getLogger(__name__)

SCENARIO_KEYS = ('refrigerants', 'mode', 't_sink', 'overrides', 'tewi', 'output')
MODES = ('design_point', 'regression_sweep', 'custom')
OUTPUT_KEYS = ('format', 'path', 'series', 'baseline')
OUTPUT_FORMATS = ('csv', 'json', 'plot-data')
RANGE_KEYS = ('start', 'stop', 'step')


class ParseError(InputError):
    def __init__(self, message, line=None, column=None, field=None):
        super(ParseError, self).__init__(message)
        self.line = line
        self.column = column
        self.field = field


class SchemaError(InputError):
    pass


class InvariantViolation(InputError):
    pass


@dataclass(frozen=True)
class OutputSpec:
    format: str = 'csv'
    path: str = '-'
    series: Optional[str] = None
    baseline: Optional[str] = None


@dataclass(frozen=True)
class Scenario:
    refrigerants: Tuple[RefrigerantId, ...]
    mode: str
    t_sink: Tuple[float, ...]
    overrides: Dict[str, float] = field(default_factory=dict)
    tewi: Dict[str, float] = field(default_factory=dict)
    output: OutputSpec = OutputSpec()
    source: Optional[str] = None

    def __post_init__(self):
        if not self.refrigerants:
            raise InvariantViolation('A scenario needs at least one refrigerant')
        if self.mode not in MODES:
            raise SchemaError('mode must be one of {}, got {!r}'.format(', '.join(MODES), self.mode))
        if not self.t_sink:
            raise InvariantViolation('A scenario needs at least one sink temperature')

    def points(self):
        """(refrigerant, T_sink) pairs in refrigerant order, then ascending T_sink."""
        return [(rid, t) for rid in self.refrigerants for t in self.t_sink]

    def conditions_for(self, T_sink):
        if self.mode == 'design_point':
            overrides = dict(self.overrides)
            overrides['T_sink'] = T_sink
            return design_point_conditions(overrides=overrides)
        if self.mode == 'regression_sweep':
            return operating_conditions_from_regressions(T_sink, self.overrides)
        return custom_conditions(T_sink, self.overrides)


def _default_t_sink(mode):
    if mode == 'regression_sweep':
        return expand_range(REGRESSION_RANGE[0], REGRESSION_RANGE[1], 1.0)
    return [DESIGN_POINT['T_sink']]


def parse_t_sink(value):
    """Number, 'start:stop:step' string or {start, stop, step} object."""
    if isinstance(value, bool):
        raise SchemaError('t_sink must be a number, a range string or an object')
    if isinstance(value, (int, float)):
        return [float(value)]
    try:
        if isinstance(value, str):
            return parse_range(value)
        if isinstance(value, dict):
            unknown = sorted(set(value) - set(RANGE_KEYS))
            if unknown:
                raise SchemaError('Unknown key(s) in t_sink: {}'.format(', '.join(unknown)))
            missing = [k for k in RANGE_KEYS if k not in value]
            if missing:
                raise SchemaError('t_sink range is missing {}'.format(', '.join(missing)))
            try:
                start, stop, step = (float(value[k]) for k in RANGE_KEYS)
            except (TypeError, ValueError):
                raise SchemaError('t_sink start, stop and step must be numbers')
            return expand_range(start, stop, step)
    except RangeSyntaxError as e:
        raise InvariantViolation(str(e))
    raise SchemaError('t_sink must be a number, a range string or an object')


def _numbers(section, value, allowed):
    if not isinstance(value, dict):
        raise SchemaError('{} must be an object'.format(section))
    unknown = sorted(set(value) - set(allowed))
    if unknown:
        raise SchemaError('Unknown key(s) in {}: {}'.format(section, ', '.join(unknown)))
    out = {}
    for key, item in value.items():
        if isinstance(item, bool) or not isinstance(item, (int, float)):
            raise SchemaError('{}.{} must be a number, got {!r}'.format(section, key, item))
        out[key] = float(item)
    return out


def _output(value):
    if not isinstance(value, dict):
        raise SchemaError('output must be an object')
    unknown = sorted(set(value) - set(OUTPUT_KEYS))
    if unknown:
        raise SchemaError('Unknown key(s) in output: {}'.format(', '.join(unknown)))
    spec = OutputSpec(**value)
    if spec.format not in OUTPUT_FORMATS:
        raise SchemaError('output.format must be one of {}, got {!r}'.format(', '.join(OUTPUT_FORMATS), spec.format))
    if spec.format == 'plot-data' and not spec.series:
        raise SchemaError('output.series is required for plot-data output')
    return spec


def scenario_from_dict(document, source=None):
    if not isinstance(document, dict):
        raise SchemaError('A scenario must be a JSON object')
    unknown = sorted(set(document) - set(SCENARIO_KEYS))
    if unknown:
        raise SchemaError('Unknown scenario key(s): {}'.format(', '.join(unknown)))
    for key in ('refrigerants', 'mode'):
        if key not in document:
            raise SchemaError('Scenario is missing "{}"'.format(key))

    refrigerants = document['refrigerants']
    if isinstance(refrigerants, str):
        refrigerants = [refrigerants]
    if not isinstance(refrigerants, list):
        raise SchemaError('refrigerants must be a list of refrigerant names')
    try:
        refrigerants = tuple(RefrigerantId.parse(r) for r in refrigerants)
    except UnknownRefrigerant as e:
        raise SchemaError('refrigerants: {}'.format(e))
    if len(set(refrigerants)) != len(refrigerants):
        raise InvariantViolation('refrigerants contains duplicates')

    mode = document['mode']
    if mode not in MODES:
        raise SchemaError('mode must be one of {}, got {!r}'.format(', '.join(MODES), mode))
    if 't_sink' in document:
        t_sink = parse_t_sink(document['t_sink'])
    else:
        t_sink = _default_t_sink(mode)

    scenario = Scenario(
        refrigerants=refrigerants,
        mode=mode,
        t_sink=tuple(sorted(set(t_sink))),
        overrides=_numbers('overrides', document.get('overrides', {}), OVERRIDE_NAMES),
        tewi=_numbers('tewi', document.get('tewi', {}), TEWI_PARAMETERS),
        output=_output(document.get('output', {})),
        source=source,
    )
    # Surface bad overrides now instead of once per point
    try:
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', RangeWarning)
            scenario.conditions_for(scenario.t_sink[0])
    except InputError as e:
        raise InvariantViolation('Scenario conditions are invalid: {}'.format(e))
    return scenario


def load_scenario(path):
    """Reads and validates a scenario document, filling defaults."""
    if not os.path.isfile(path):
        raise ParseError('Scenario file {} not found'.format(path))
    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError('{}:{}:{}: {}'.format(path, e.lineno, e.colno, e.msg), line=e.lineno, column=e.colno)
    scenario = scenario_from_dict(document, source=path)
    logger.info('Loaded scenario %s: %d point(s)', path, len(scenario.points()))
    return scenario
