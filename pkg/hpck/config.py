# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
import os
import sys

if sys.version_info < (3, 8):
    print("WARNING: You're running an untested version of python", file=sys.stderr)


# Gets the directory that this file is in
HPCK_WD = os.path.dirname(os.path.abspath(__file__))

# The directory where the check modules are kept
MODULESDIR = os.path.join(HPCK_WD, 'modules')

# Environment variable naming the property table directory
PROP_DATA_ENV = 'HPCK_PROP_DATA'

LOCAL_STORAGE = os.path.join(os.path.expanduser('~'), '.hpck')

# Property tables installed with the package, written by `hpck tables --out hpck/data`
SHIPPED_PROP_DATA = os.path.join(HPCK_WD, 'data')


def get_configuration_paths():
    # Possible paths for the configuration file.
    # This should go in order from local to global.
    return [
        os.path.join(os.getcwd(), 'config.ini'),
        os.path.join(LOCAL_STORAGE, 'config.ini'),
        '/opt/hpck/config.ini',
    ]


def determine_configuration_path(filepath):
    if filepath:
        return filepath

    for config_path in get_configuration_paths():
        if os.path.exists(config_path):
            return config_path

    return os.path.join(LOCAL_STORAGE, 'config.ini')


def determine_prop_data_dir(flag=None, main_config=None):
    """
    Resolves the property table directory.

    flag - Value of --prop-data, wins over everything else
    main_config - The [main] section of the config file

    Without either, ~/.hpck/prop-data is used, or the shipped tables when
    that directory does not exist.
    """
    if flag:
        return flag
    env = os.environ.get(PROP_DATA_ENV)
    if env:
        return env
    if main_config and main_config.get('prop-data'):
        return main_config['prop-data']
    local = os.path.join(LOCAL_STORAGE, 'prop-data')
    if not os.path.isdir(local) and has_shipped_tables():
        return SHIPPED_PROP_DATA
    return local


def has_shipped_tables():
    return os.path.isfile(os.path.join(SHIPPED_PROP_DATA, 'oracle.json'))


# The default config file
CONFIG = determine_configuration_path(None)
