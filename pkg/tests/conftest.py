from fractions import Fraction

import pytest

from treegraded import make_family
from treegraded.jsonio import Scene
from treegraded.pieces import SCALE, BilipschitzMap
from treegraded.stretch import StretchContext


@pytest.fixture
def tree_family():
    return make_family("tree")


@pytest.fixture
def line_family():
    return make_family("line")


@pytest.fixture
def mixed_family():
    return make_family("tree", "line", ("l1", 2))


@pytest.fixture
def mixed_scene(mixed_family):
    return Scene(mixed_family, capacity=6)


@pytest.fixture
def scale_context(mixed_family):
    lam = Fraction(3, 2)
    maps = tuple(
        BilipschitzMap(p.id, p.id, SCALE, (lam,)) for p in mixed_family.pieces
    )
    return StretchContext(mixed_family, mixed_family, maps)


def frac(n, d=1):
    return Fraction(n, d)
