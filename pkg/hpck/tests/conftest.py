# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
import json
import os

import pytest

from hpck import config
from hpck.environment.metadata import reset_metadata
from hpck.properties.property_set import load_property_set
from hpck.properties.refrigerants import ALL_REFRIGERANTS, RefrigerantId
from hpck.tests.toy_fluid import write_toy_tables


@pytest.fixture(scope='session')
def toy_data_dir(tmp_path_factory):
    path = str(tmp_path_factory.mktemp('toy-prop-data'))
    write_toy_tables(path)
    return path


@pytest.fixture(scope='session')
def toy_sets(toy_data_dir):
    return {rid: load_property_set(rid, toy_data_dir) for rid in ALL_REFRIGERANTS}


@pytest.fixture
def r134a(toy_sets):
    return toy_sets[RefrigerantId.R134A]


def _shipped_tables_complete():
    path = os.path.join(config.SHIPPED_PROP_DATA, 'oracle.json')
    if not os.path.isfile(path):
        return False
    with open(path, encoding='utf-8') as f:
        generated = json.load(f).get('refrigerants', [])
    return sorted(generated) == sorted(rid.value for rid in ALL_REFRIGERANTS)


@pytest.fixture(scope='session')
def oracle_data_dir(tmp_path_factory):
    """The shipped tables when complete, else tables generated with CoolProp once per session."""
    if _shipped_tables_complete():
        return config.SHIPPED_PROP_DATA
    pytest.importorskip('CoolProp')
    from hpck.properties.generate import generate_tables
    path = str(tmp_path_factory.mktemp('prop-data'))
    result = generate_tables(ALL_REFRIGERANTS, path)
    if result.failures:
        pytest.fail('Table generation failed: {}'.format('; '.join(result.failures.values())))
    return path


@pytest.fixture(scope='session')
def oracle_sets(oracle_data_dir):
    return {rid: load_property_set(rid, oracle_data_dir) for rid in ALL_REFRIGERANTS}


@pytest.fixture(autouse=True)
def _clean_metadata():
    yield
    reset_metadata()
