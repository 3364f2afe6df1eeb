import pytest

from stanley_reisner_toolkit.complex_core import from_facets, vertex_set
from stanley_reisner_toolkit.field_linalg import GF2, GF3, RATIONALS


def complex_of(n, *faces):
    """Shorthand: complex_of(4, "12", "23") with single-digit vertex labels."""
    return from_facets(n, [vertex_set(int(ch) for ch in face) for face in faces])


@pytest.fixture
def four_cycle():
    return complex_of(4, "12", "23", "34", "14")


@pytest.fixture
def hollow_triangle():
    return complex_of(3, "12", "13", "23")


@pytest.fixture
def two_edges():
    return complex_of(4, "12", "34")


@pytest.fixture
def moebius():
    return complex_of(5, "124", "134", "135", "235", "245")


@pytest.fixture(params=[GF2, GF3, RATIONALS], ids=lambda f: f.label)
def field(request):
    return request.param
