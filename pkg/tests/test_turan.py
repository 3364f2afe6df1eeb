import pytest

from stanley_reisner_toolkit.enumeration import empirical_f, f_from_turan, mantel_f, turan
from stanley_reisner_toolkit.utils.errors import GuardExceededError, StanleyReisnerError


@pytest.mark.parametrize("n, expected", [(4, 5), (5, 7), (6, 10), (7, 13), (8, 17)])
def test_graph_threshold_matches_mantel(n, expected):
    assert mantel_f(n) == expected
    assert f_from_turan(n, 2) == expected


@pytest.mark.parametrize("n, value", [(4, 3), (5, 7), (6, 14)])
def test_small_hypergraph_turan_numbers(n, value):
    record = turan(n, 4, 3)
    assert record.value == value
    assert record.covering + record.value == {4: 4, 5: 10, 6: 20}[n]
    assert record.f_value == value + 1


def test_turan_below_p_vertices_is_everything():
    record = turan(3, 4, 3)
    assert record.value == 1 and record.covering == 0


def test_turan_rejects_bad_parameters():
    with pytest.raises(StanleyReisnerError):
        turan(5, 3, 3)


def test_turan_guard():
    with pytest.raises(GuardExceededError):
        turan(9, 4, 3, max_sets=40)


@pytest.mark.parametrize("n", [4, 5])
def test_enumerated_threshold_agrees_with_turan(n):
    assert empirical_f(n, 2) == f_from_turan(n, 2)


@pytest.mark.slow
def test_enumerated_threshold_in_dimension_three():
    assert empirical_f(5, 3) == f_from_turan(5, 3)
