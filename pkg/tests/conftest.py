import random

import pytest

from f2q.pauli import PauliOperator, SiteRegistry


@pytest.fixture
def reg6():
    """A plain 6-site registry with integer labels."""
    return SiteRegistry(range(6))


def random_pauli(reg, rng, allow_phase=True):
    xs = frozenset(i for i in range(len(reg)) if rng.random() < 0.4)
    zs = frozenset(i for i in range(len(reg)) if rng.random() < 0.4)
    k = rng.randrange(4) if allow_phase else 0
    return PauliOperator(reg, k, xs, zs)


@pytest.fixture
def rng():
    return random.Random(20240817)
