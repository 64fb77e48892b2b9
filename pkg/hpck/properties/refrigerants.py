# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from enum import Enum

from hpck.common.errors import InputError


class UnknownRefrigerant(InputError):
    pass


class RefrigerantId(Enum):
    R134A = 'R134a'
    R152A = 'R152a'
    R450A = 'R450A'
    R513A = 'R513A'
    R1234YF = 'R1234yf'
    R1234ZE_E = 'R1234ze(E)'

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, value):
        """Accepts a RefrigerantId or its name as written in reports, case-insensitively."""
        if isinstance(value, cls):
            return value
        text = str(value).strip()
        for member in cls:
            if member.value.lower() == text.lower():
                return member
        raise UnknownRefrigerant('Unknown refrigerant "{}", expected one of {}'.format(
            value, ', '.join(m.value for m in cls)))


# Order used by the screening results: descending design-point COP
ALL_REFRIGERANTS = (
    RefrigerantId.R152A,
    RefrigerantId.R134A,
    RefrigerantId.R1234ZE_E,
    RefrigerantId.R450A,
    RefrigerantId.R513A,
    RefrigerantId.R1234YF,
)


def parse_refrigerants(values):
    if isinstance(values, (str, RefrigerantId)):
        values = [values]
    return [RefrigerantId.parse(v) for v in values]
