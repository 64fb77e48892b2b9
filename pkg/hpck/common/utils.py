# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
import ast
import codecs
import configparser
import importlib.util
import logging
import os

import numpy as np

from hpck.common.errors import InputError

logger = logging.getLogger(__name__)


class RangeSyntaxError(InputError):
    pass


def load_module(name, path):
    """
    Loads a module by filename and path. Returns module object

    name - Filename without .py
    path - A list of dirs to search
    """
    for directory in path:
        filename = os.path.join(directory, name + '.py')
        if not os.path.isfile(filename):
            continue
        try:
            spec = importlib.util.spec_from_file_location(name, filename)
            loaded_mod = importlib.util.module_from_spec(spec)
            spec.loader.exec_module(loaded_mod)
            return loaded_mod
        except Exception as e:
            logger.error('Could not load %s: %s', filename, e)
            return None
    return None


def parse_config(config_object):
    """Take a config object and returns it as a dictionary"""
    return_var = {}
    for section in config_object.sections():
        section_dict = dict(config_object.items(section))
        for key in section_dict:
            try:
                section_dict[key] = ast.literal_eval(section_dict[key])
            except (ValueError, SyntaxError):
                # Plain strings such as paths stay as they are
                pass
        return_var[section] = section_dict
    return return_var


def read_config(filepath):
    """Reads an INI file into a dictionary of sections. A missing file gives {}."""
    if not filepath or not os.path.isfile(filepath):
        return {}
    config_object = configparser.ConfigParser()
    config_object.optionxform = str
    config_object.read(filepath)
    return parse_config(config_object)


def write_config(filepath, sections):
    """
    Writes a dictionary of {section: {key: value}} as an INI file.

    filepath - The config file to create
    sections - Ordered mapping of section names to default dictionaries
    """
    config_object = configparser.ConfigParser()
    config_object.optionxform = str
    for section, conf in sections.items():
        config_object.add_section(section)
        for key in conf:
            config_object.set(section, key, str(conf[key]))

    directory = os.path.dirname(os.path.abspath(filepath))
    if not os.path.isdir(directory):
        os.makedirs(directory)
    with codecs.open(filepath, 'w', 'utf-8') as f:
        config_object.write(f)


def merge_conf(defaults, override):
    """Returns a copy of defaults updated with override."""
    conf = dict(defaults)
    if override:
        conf.update(override)
    return conf


def parseDir(directory, recursive=False, exclude=['__init__']):
    """
    Returns a sorted list of files in a directory.

    dir - The directory to search
    recursive - If true it will recursively find files.
    """
    filelist = []
    if not exclude:
        exclude = []
    for item in sorted(os.listdir(directory)):
        item = os.path.join(directory, item)
        if os.path.isdir(item):
            if recursive:
                filelist.extend(parseDir(item, recursive, exclude))
        else:
            if os.path.basename(item).split('.')[0] in exclude:
                continue
            filelist.append(item)
    return filelist


def parse_range(text):
    """
    Parses the sweep syntax start:stop:step, or a single number, into a
    sorted list of floats including stop.
    """
    parts = str(text).split(':')
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise RangeSyntaxError('Invalid range "{}", expected start:stop:step'.format(text))
    if len(values) == 1:
        return [values[0]]
    if len(values) != 3:
        raise RangeSyntaxError('Invalid range "{}", expected start:stop:step'.format(text))
    return expand_range(*values)


def expand_range(start, stop, step):
    if step <= 0:
        raise RangeSyntaxError('Sweep step must be > 0, got {}'.format(step))
    if stop < start:
        raise RangeSyntaxError('Sweep stop {} is below start {}'.format(stop, start))
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 10) for i in range(count)]
