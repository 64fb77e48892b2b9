# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
import json
from collections import OrderedDict

from hpck.storage import storage


def _value(value, float_format):
    if isinstance(value, float):
        return float(format(value, float_format))
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


class JsonFile(storage.Storage):
    FORMAT = 'json'
    DEFAULTCONF = {
        'ENABLED': True,
        'float_format': '.10g',
        'indent': 2,
    }

    def store(self, records, columns):
        fmt = self.config['float_format']
        rows = [OrderedDict((c, _value(record.get(c), fmt)) for c in columns) for record in records]
        self.file_handle.write(json.dumps(rows, indent=self.config['indent'], ensure_ascii=False))
        self.file_handle.write('\n')
