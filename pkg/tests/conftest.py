from __future__ import division, absolute_import, print_function

import os

import pytest

from dswitch.catalog import data
from dswitch.designs import IncidenceStructure

DEMO_PATH = os.path.join(os.path.dirname(os.path.dirname(__file__)), 'demo')


def printed_design(text: str) -> IncidenceStructure:
    return IncidenceStructure.from_incidence(data.int_rows(text))


@pytest.fixture
def demo_path():
    return DEMO_PATH


@pytest.fixture
def design_file():
    def _file(name):
        return os.path.join(DEMO_PATH, 'designs', f'{name}.json')
    return _file


@pytest.fixture
def fano():
    return printed_design(data.FANO_N)


@pytest.fixture
def ag22():
    return printed_design(data.AG22_N)


@pytest.fixture
def gm6():
    return printed_design(data.GM6_N)


@pytest.fixture
def wqh6():
    return printed_design(data.WQH6_N)


@pytest.fixture
def ah6():
    return printed_design(data.AH6_N)
