# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Refrigerant metadata: GWP, molar mass, boiling and critical points and
flammability limits for the six supported fluids. The embedded table can be
replaced by a refrigerants.csv file with the same columns.
"""
import logging
import math
import os
from dataclasses import dataclass
from typing import Optional

import pandas as pd

from hpck.common.errors import InputError
from hpck.properties.refrigerants import RefrigerantId, UnknownRefrigerant  # noqa: F401

logger = logging.getLogger(__name__)

METADATA_COLUMNS = [
    'refrigerant', 'gwp_100yr', 'molar_mass', 'normal_boiling_point', 'critical_pressure',
    'critical_temperature', 'ufl', 'lfl', 'auto_ignition',
]


class MetadataError(InputError):
    pass


@dataclass(frozen=True)
class RefrigerantMeta:
    id: RefrigerantId
    gwp_100yr: float
    molar_mass: float
    normal_boiling_point: float
    critical_pressure: float  # MPa
    critical_temperature: float
    ufl: Optional[float] = None
    lfl: Optional[float] = None
    auto_ignition: Optional[float] = None

    def __post_init__(self):
        if self.ufl is not None and self.lfl is not None and not self.ufl > self.lfl:
            raise MetadataError('{}: UFL {} must exceed LFL {}'.format(self.id, self.ufl, self.lfl))

    @property
    def flammable(self):
        return self.lfl is not None

    @property
    def critical_pressure_kpa(self):
        return self.critical_pressure * 1000.0


_TABLE = {
    RefrigerantId.R134A: RefrigerantMeta(RefrigerantId.R134A, 1430, 102.03, -26.1, 4.06, 101.1),
    RefrigerantId.R152A: RefrigerantMeta(RefrigerantId.R152A, 124, 66.05, -24.7, 4.50, 113.15, 16.9, 3.9, 455),
    RefrigerantId.R450A: RefrigerantMeta(RefrigerantId.R450A, 547, 108.6, -23.1, 4.01, 75.1),
    RefrigerantId.R513A: RefrigerantMeta(RefrigerantId.R513A, 573, 108.4, -29.2, 3.77, 96.5),
    RefrigerantId.R1234YF: RefrigerantMeta(RefrigerantId.R1234YF, 4, 114.0, -29.4, 3.38, 94.7, 12.3, 6.2, 405),
    RefrigerantId.R1234ZE_E: RefrigerantMeta(RefrigerantId.R1234ZE_E, 7, 114.0, -19.0, 3.64, 109.4, 11.3, 5.7, 368),
}

_overrides = {}


def refrigerant_metadata(refrigerant):
    """Returns the RefrigerantMeta row for a refrigerant id or name."""
    rid = RefrigerantId.parse(refrigerant)
    if rid in _overrides:
        return _overrides[rid]
    return _TABLE[rid]


def _optional(value):
    if value is None:
        return None
    try:
        if math.isnan(value):
            return None
    except TypeError:
        pass
    if isinstance(value, str) and value.strip() in ('', '-'):
        return None
    return float(value)


def load_metadata_csv(path):
    """
    Reads a refrigerants.csv file with the metadata columns and returns a
    dictionary of RefrigerantMeta keyed by id. Blank or '-' cells mean the
    value does not apply.
    """
    if not os.path.isfile(path):
        raise MetadataError('Metadata file {} not found'.format(path))
    df = pd.read_csv(path, dtype={'refrigerant': str}, keep_default_na=True, na_values=['-'])
    missing = [c for c in METADATA_COLUMNS if c not in df.columns]
    if missing:
        raise MetadataError('{}: missing columns {}'.format(path, ', '.join(missing)))
    rows = {}
    for record in df.to_dict('records'):
        rid = RefrigerantId.parse(record['refrigerant'])
        try:
            rows[rid] = RefrigerantMeta(
                rid,
                float(record['gwp_100yr']),
                float(record['molar_mass']),
                float(record['normal_boiling_point']),
                float(record['critical_pressure']),
                float(record['critical_temperature']),
                _optional(record['ufl']),
                _optional(record['lfl']),
                _optional(record['auto_ignition']),
            )
        except (TypeError, ValueError) as e:
            raise MetadataError('{}: bad row for {}: {}'.format(path, rid, e))
    return rows


def use_metadata_csv(path):
    """Installs the rows of a refrigerants.csv file in place of the embedded ones."""
    rows = load_metadata_csv(path)
    _overrides.update(rows)
    logger.info('Loaded metadata for %s from %s', ', '.join(str(r) for r in rows), path)
    return rows


def reset_metadata():
    _overrides.clear()
