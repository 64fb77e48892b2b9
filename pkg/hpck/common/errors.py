# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Base exceptions shared by every hpck component.

Concrete errors live next to the code that raises them and derive from
InputError (bad arguments, scenario documents or operating conditions) or
DataError (property tables that are absent or broken).
"""

EXIT_OK = 0
EXIT_VALIDATION_FAILED = 1
EXIT_USAGE = 2
EXIT_DATA = 3


class HpckError(Exception):
    pass


class InputError(HpckError):
    pass


class DataError(HpckError):
    pass


def exit_code_for(exc):
    if isinstance(exc, DataError):
        return EXIT_DATA
    return EXIT_USAGE
