# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Report emitters.

Each emitter is a Storage subclass in this directory with a FORMAT name.
emit_report() picks the emitter for a format, applies its config section
and runs setup(), store() and teardown() against a path or '-' (stdout).
"""
import codecs
import inspect
import logging
import os
import sys

from hpck.common.errors import InputError
from hpck.common import utils
from hpck.scenario.runner import REPORT_COLUMNS, ResultSeries

logger = logging.getLogger(__name__)

STORAGE_DIR = os.path.dirname(__file__)


class ReportIoError(InputError):
    pass


class UnknownFormat(InputError):
    pass


def format_number(value, float_format='.10g'):
    """Text form of a report value. Floats keep 10 significant digits so output is stable."""
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return format(value, float_format)
    if value is None:
        return ''
    return str(value)


class Storage(object):
    FORMAT = None
    DEFAULTCONF = {
        'ENABLED': True,
        'float_format': '.10g',
    }

    def __init__(self, config=None):
        self.config = dict(self.DEFAULTCONF)
        if config:
            self.config.update(config)
        self.path = '-'
        self.stream = None
        self.file_handle = None
        self.series = None
        self.baseline = None

    def setup(self):
        if self.path == '-':
            self.file_handle = self.stream or sys.stdout
            return True
        try:
            directory = os.path.dirname(os.path.abspath(self.path))
            if not os.path.isdir(directory):
                os.makedirs(directory)
            self.file_handle = codecs.open(self.path, 'w', 'utf-8')
        except (IOError, OSError) as e:
            raise ReportIoError('Cannot write {}: {}'.format(self.path, e))
        return True

    def store(self, records, columns):
        raise NotImplementedError

    def teardown(self):
        if self.file_handle is None:
            return True
        if self.path == '-':
            self.file_handle.flush()
        else:
            self.file_handle.close()
        self.file_handle = None
        return True


def _get_storage_classes(dir_path=STORAGE_DIR):
    """{class name: emitter instance} for every Storage subclass under dir_path."""
    storage_classes = {}
    dir_list = utils.parseDir(dir_path, recursive=True)
    dir_list.remove(os.path.join(dir_path, 'storage.py'))
    for filename in dir_list:
        if filename.endswith('.py'):
            modname = os.path.basename(filename[:-3])
            moddir = os.path.dirname(filename)
            mod = utils.load_module(modname, [moddir])
            if not mod:
                logger.warning('%s is not a valid storage module', filename)
                continue
            for member_name in dir(mod):
                member = getattr(mod, member_name)
                if inspect.isclass(member) and issubclass(member, Storage) and member.FORMAT:
                    storage_classes[member_name] = member()
    return storage_classes


def storage_defaults(dir_path=STORAGE_DIR):
    """{class name: DEFAULTCONF} for writing the config file."""
    classes = _get_storage_classes(dir_path)
    return {name: dict(classes[name].DEFAULTCONF) for name in sorted(classes)}


def get_emitter(format, config=None, dir_path=STORAGE_DIR):
    """
    Emitter instance for an output format.

    config - Parsed config file; the section named after the emitter class is applied
    """
    for name, storage in _get_storage_classes(dir_path).items():
        if storage.FORMAT == format:
            emitter = storage.__class__((config or {}).get(name))
            if not emitter.config.get('ENABLED', True):
                raise UnknownFormat('Output format {} is disabled in the config'.format(format))
            return emitter
    raise UnknownFormat('Unknown output format {!r}'.format(format))


def report_records(results):
    """(records, default columns) for a ResultSeries or a list of record dicts."""
    if isinstance(results, ResultSeries):
        return results.metrics(), list(REPORT_COLUMNS)
    records = list(results)
    columns = list(records[0].keys()) if records else []
    return records, columns


def emit_report(results, format='csv', path='-', columns=None, series=None, baseline=None, config=None,
                stream=None):
    """
    Writes results as csv, json or plot-data.

    results - ResultSeries or list of record dicts
    path - Output file, '-' writes to stream (stdout by default)
    columns - Column subset and order, defaults to the full report column set
    series - Plot series name, required for plot-data
    baseline - Baseline refrigerant of the normalized plot series
    config - Parsed config file
    """
    emitter = get_emitter(format, config)
    records, default_columns = report_records(results)
    emitter.path = path or '-'
    emitter.stream = stream
    emitter.series = series
    emitter.baseline = baseline
    emitter.setup()
    try:
        emitter.store(records, list(columns or default_columns))
    except (IOError, OSError) as e:
        raise ReportIoError('Cannot write {}: {}'.format(emitter.path, e))
    finally:
        emitter.teardown()
    if emitter.path != '-':
        logger.info('Wrote %d record(s) to %s', len(records), emitter.path)
