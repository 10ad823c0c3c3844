import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import pytest

from cyclohecke.group import GroupParams
from cyclohecke.hecke import AlgebraContext
from cyclohecke.rings import RingSpec


def spec_context(r, n, xi=Fraction(2), qs=None):
    """Rational specialization; defaults to the fast semisimple point."""
    if qs is None:
        qs = [Fraction(100) ** (l - 1) for l in range(1, r + 1)]
    ring = RingSpec.specialized(xi, qs)
    return AlgebraContext(GroupParams(r, n), ring,
                          ring.xi(), [ring.q(l) for l in range(1, r + 1)])


def laurent_context(r, n):
    ring = RingSpec.laurent(r)
    return AlgebraContext(GroupParams(r, n), ring,
                          ring.xi(), [ring.q(l) for l in range(1, r + 1)])


def fraction_context(r, n):
    ring = RingSpec.fraction(r)
    return AlgebraContext(GroupParams(r, n), ring,
                          ring.xi(), [ring.q(l) for l in range(1, r + 1)])


@pytest.fixture(scope="session")
def ctx22_sym():
    return laurent_context(2, 2)


@pytest.fixture(scope="session")
def ctx22_spec():
    return spec_context(2, 2)


@pytest.fixture(scope="session")
def ctx13_spec():
    return spec_context(1, 3)
