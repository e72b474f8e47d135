"""
Shared fixtures for the pybranch test suite.
"""
import json
from pathlib import Path

import pytest

from pybranch.algebras import build_algebra
from pybranch.brancher import Brancher
from pybranch.injections import get_preset

FIXTURES = Path(__file__).parent / 'fixtures'


@pytest.fixture(scope='session')
def a2():
    return build_algebra({'series': 'A', 'rank': 2})


@pytest.fixture(scope='session')
def b1():
    return build_algebra({'series': 'B', 'rank': 1})


@pytest.fixture(scope='session')
def b2():
    return build_algebra({'series': 'B', 'rank': 2})


@pytest.fixture(scope='session')
def g2():
    return build_algebra({'series': 'G', 'rank': 2})


@pytest.fixture(scope='session')
def a2_affine():
    return build_algebra({'series': 'A', 'rank': 2, 'twist': 1})


@pytest.fixture(scope='session')
def a2_twisted():
    return build_algebra({'series': 'A', 'rank': 2, 'twist': 2})


@pytest.fixture(scope='session')
def b1_in_a2():
    return get_preset('B1-in-A2')


@pytest.fixture(scope='session')
def a2_in_g2():
    return get_preset('A2-in-G2')


@pytest.fixture(scope='session')
def twisted_in_affine():
    return get_preset('A2_2-in-A2_1')


@pytest.fixture(scope='session')
def affine_brancher(twisted_in_affine):
    return Brancher(twisted_in_affine)


@pytest.fixture(scope='session')
def omega0_singular_fixture():
    with open(FIXTURES / 'a2_affine_omega0_singular.json', 'r', encoding='utf-8') as handle:
        return json.load(handle)
