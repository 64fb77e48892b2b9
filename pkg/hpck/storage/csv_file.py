# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
import csv

from hpck.storage import storage


def write_rows(handle, records, columns, float_format):
    writer = csv.DictWriter(handle, fieldnames=columns, extrasaction='ignore', lineterminator='\n')
    writer.writeheader()
    for record in records:
        writer.writerow({c: storage.format_number(record.get(c), float_format) for c in columns})


class CsvFile(storage.Storage):
    FORMAT = 'csv'
    DEFAULTCONF = {
        'ENABLED': True,
        'float_format': '.10g',
    }

    def store(self, records, columns):
        write_rows(self.file_handle, records, columns, self.config['float_format'])
