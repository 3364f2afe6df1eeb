import pytest

from conftest import complex_of
from stanley_reisner_toolkit.betti_resolution import (
    a_invariant_negative,
    has_linear_resolution,
    hochster_betti,
    regularity,
    regularity_by_restriction_scan,
    subset_count,
)
from stanley_reisner_toolkit.complex_core import boundary_of_simplex, full_simplex
from stanley_reisner_toolkit.enumeration import sample_complexes
from stanley_reisner_toolkit.utils.errors import GuardExceededError, VoidComplexError


def test_four_cycle_table(four_cycle, field):
    table = hochster_betti(four_cycle, field)
    assert table.entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
    assert table.regularity == 2
    assert table.projective_dimension == 2
    assert not table.is_linear
    assert list(table.totals) == [1, 2, 1]


def test_two_edges_have_a_linear_resolution(two_edges, field):
    table = hochster_betti(two_edges, field)
    assert table.entries == {(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1}
    assert table.regularity == 1
    assert table.is_linear
    assert has_linear_resolution(two_edges, field) == (True, 2)


def test_first_row_counts_minimal_nonfaces(field):
    for cx in sample_complexes(6, 20, seed=31):
        if cx.is_full_simplex:
            continue
        table = hochster_betti(cx, field)
        by_degree = {}
        for m in cx.minimal_nonfaces:
            by_degree[m.bit_count()] = by_degree.get(m.bit_count(), 0) + 1
        assert table.first_syzygy_degrees() == by_degree
        assert (table.indeg, table.rt) == (cx.indeg, cx.rt)


def test_regularity_agrees_with_restriction_scan(field):
    for cx in sample_complexes(6, 20, seed=37):
        assert regularity(cx, field) == regularity_by_restriction_scan(cx, field)


def test_linearity_shortcut_matches_full_table(field):
    for cx in sample_complexes(6, 25, seed=41):
        if cx.is_full_simplex:
            continue
        linear, q = has_linear_resolution(cx, field)
        assert q == cx.indeg
        assert linear == hochster_betti(cx, field).is_linear


def test_hypersurface_resolution(field):
    table = hochster_betti(boundary_of_simplex(4), field)
    assert table.entries == {(0, 0): 1, (1, 4): 1}


def test_full_simplex_has_trivial_table(field):
    table = hochster_betti(full_simplex(3), field)
    assert table.entries == {(0, 0): 1}
    assert table.regularity == 0
    with pytest.raises(VoidComplexError):
        has_linear_resolution(full_simplex(3), field)


def test_parallel_sweep_matches_serial(field):
    cx = complex_of(9, "123", "345", "567", "789", "19", "2468")
    assert hochster_betti(cx, field, jobs=2) == hochster_betti(cx, field)


def test_max_j_truncates_the_sweep(four_cycle, field):
    table = hochster_betti(four_cycle, field, max_j=3)
    assert table.entries == {(0, 0): 1, (1, 2): 2}


def test_subset_guard(four_cycle, field):
    assert subset_count(4) == 15
    assert subset_count(4, max_j=2) == 10
    with pytest.raises(GuardExceededError):
        hochster_betti(four_cycle, field, max_subsets=10)


def test_a_invariant_sign(four_cycle, two_edges, field):
    assert not a_invariant_negative(four_cycle, field)
    assert a_invariant_negative(two_edges, field)


def test_table_rendering(four_cycle, field):
    table = hochster_betti(four_cycle, field)
    text = str(table)
    assert text.splitlines()[1].split() == ["total:", "1", "2", "1"]
    schema = table.to_schema()
    assert schema.regularity == 2
    assert schema.grid == [[1, 0, 0], [0, 2, 0], [0, 0, 1]]
