"""Shared fixtures: one table per group per session.

Algebra elements are bound to a specific table object, so tests that
exchange elements must draw the group from the same fixture.
"""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import f2units as f


@pytest.fixture(scope="session")
def c2():
    return f.make_cyclic(2)


@pytest.fixture(scope="session")
def c4():
    return f.make_cyclic(4)


@pytest.fixture(scope="session")
def c8():
    return f.make_cyclic(8)


@pytest.fixture(scope="session")
def d8():
    return f.make_dihedral(8)


@pytest.fixture(scope="session")
def q8():
    return f.make_quaternion(8)


@pytest.fixture(scope="session")
def q16():
    return f.make_quaternion(16)


@pytest.fixture(scope="session")
def c4xc2():
    return f.make_direct_product(f.make_cyclic(4), f.make_cyclic(2))


@pytest.fixture(scope="session")
def d8xc2(d8, c2):
    return f.make_direct_product(d8, c2)


@pytest.fixture(scope="session")
def q8xc2(q8, c2):
    return f.make_direct_product(q8, c2)


@pytest.fixture(scope="session")
def q8_form(q8):
    return f.make_inverting_form(q8, [1], 4)


@pytest.fixture(scope="session")
def q16_form(q16):
    return f.make_inverting_form(q16, [1], 8)


@pytest.fixture(scope="session")
def d8_odot_form(d8):
    return f.make_odot_form(d8)


@pytest.fixture(scope="session")
def q8_odot_form(q8):
    return f.make_odot_form(q8)


@pytest.fixture(scope="session")
def d8xc2_odot_form(d8xc2):
    return f.make_odot_form(d8xc2)
