# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Reference checks.

Every check module under hpck/modules/<Group>/ defines TYPE, NAME,
DEFAULTCONF, check(context, conf) and scan(context, conf). check() says
whether the module's inputs are present, scan() returns (checks, metadata)
where checks is a list of CheckResult. Module configuration (tolerances)
comes from the config section named after the module.
"""
import logging
import os
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from hpck.common.errors import InputError
from hpck.common.threads import run_threads
from hpck.common.utils import load_module, parseDir
from hpck.config import MODULESDIR
from hpck.scenario.reference import REFERENCE
from hpck.scenario.runner import ResultSeries

logger = logging.getLogger(__name__)

CHECK_COLUMNS = ['name', 'expected', 'computed', 'tolerance', 'passed']


class IncompleteResults(InputError):
    pass


def _text(value):
    if isinstance(value, (tuple, list)):
        return '[{}]'.format(', '.join(_text(v) for v in value))
    if isinstance(value, float):
        return format(value, '.6g')
    return '' if value is None else str(value)


@dataclass(frozen=True)
class CheckResult:
    name: str
    expected: object
    computed: object
    tolerance: object
    passed: bool

    def as_record(self):
        return {
            'name': self.name,
            'expected': _text(self.expected),
            'computed': _text(self.computed),
            'tolerance': _text(self.tolerance),
            'passed': bool(self.passed),
        }


@dataclass(frozen=True)
class ValidationReport:
    checks: Tuple[CheckResult, ...]
    skipped: Tuple[str, ...] = ()
    metadata: Dict[str, dict] = field(default_factory=dict)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def summary(self):
        passed = sum(1 for c in self.checks if c.passed)
        return {'total': len(self.checks), 'passed': passed, 'failed': len(self.checks) - passed}

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def records(self):
        return [c.as_record() for c in self.checks]


@dataclass(frozen=True)
class ValidationContext:
    design: List[dict]
    sweep: List[dict]
    property_sets: dict
    refs: object = REFERENCE

    def design_by_refrigerant(self):
        return {r['refrigerant']: r for r in self.design}


def _is_design_point(record):
    try:
        return (abs(float(record['T_sink_C']) - 50.0) < 1e-9 and abs(float(record['T_source_C']) - 13.0) < 1e-9
                and abs(float(record['Q_cond_kW']) - 5.0) < 1e-6)
    except (KeyError, TypeError, ValueError):
        return False


def _split_records(results):
    design, sweep = [], []
    if results is None:
        return design, sweep
    if isinstance(results, ResultSeries):
        results = [results]
    for item in results:
        if isinstance(item, ResultSeries):
            records = item.metrics()
        elif isinstance(item, dict):
            records = [item]
        else:
            records = list(item)
        for record in records:
            mode = record.get('mode')
            if mode == 'design_point' or (mode is None and _is_design_point(record)):
                design.append(record)
            elif mode == 'regression_sweep' or mode is None:
                sweep.append(record)
    return design, sweep


def _run_module(modname, mod, context, conf):
    """check() then scan() of one module. Returns (checks, metadata) or None if it does not apply."""
    if not mod.check(context, conf=conf):
        logger.info('Check module %s does not apply to these results', modname)
        return None
    checks, metadata = mod.scan(context, conf=conf)
    return list(checks), metadata


def _module_conf(mod, modname, tolerances):
    conf = dict(getattr(mod, 'DEFAULTCONF', {}))
    if tolerances and modname in tolerances:
        conf.update(tolerances[modname])
    return conf


def get_check_modules(module_dir=MODULESDIR):
    """Sorted list of (name, module) for every check module."""
    modules = []
    for path in parseDir(module_dir, recursive=True, exclude=['__init__']):
        if not path.endswith('.py'):
            continue
        modname = os.path.basename(path)[:-3]
        mod = load_module(modname, [os.path.dirname(path)])
        if not mod:
            logger.warning('%s is not a valid check module', path)
            continue
        modules.append((modname, mod))
    return modules


def module_defaults(module_dir=MODULESDIR):
    """{module name: DEFAULTCONF} for writing the config file."""
    return {name: dict(mod.DEFAULTCONF) for name, mod in get_check_modules(module_dir)}


def validate_against_reference(results, refs=REFERENCE, tolerances=None, property_sets=None, workers=4,
                               module_dir=MODULESDIR):
    """
    Runs every enabled check module against model results.

    results - ResultSeries, a list of them, or report/metric records
    refs - ReferenceDataset
    tolerances - {module name: {key: value}} overriding module DEFAULTCONF
    property_sets - {RefrigerantId: PropertySet} for the property and identity checks
    """
    design, sweep = _split_records(results)
    context = ValidationContext(design, sweep, dict(property_sets or {}), refs)

    jobs = []
    for modname, mod in get_check_modules(module_dir):
        conf = _module_conf(mod, modname, tolerances)
        if not conf.get('ENABLED', True):
            continue
        jobs.append((modname, _run_module, (modname, mod, context, conf)))

    checks, skipped, metadata = [], [], {}
    for thread in run_threads(jobs, workers):
        if thread.exc is not None:
            logger.error('Check module %s failed: %s', thread.name, thread.exc)
            checks.append(CheckResult('{}: module error'.format(thread.name), 'no error', str(thread.exc), None, False))
        elif thread.ret is None:
            skipped.append(thread.name)
        else:
            module_checks, module_metadata = thread.ret
            checks.extend(module_checks)
            metadata[thread.name] = module_metadata
    if not checks:
        raise IncompleteResults('No reference check applies to the given results')
    report = ValidationReport(tuple(checks), tuple(skipped), metadata)
    logger.info('Validation: %(passed)d of %(total)d checks passed', report.summary)
    return report
