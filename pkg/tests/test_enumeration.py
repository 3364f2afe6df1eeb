import pytest
from pydantic import ValidationError

from stanley_reisner_toolkit.complex_core import canonical_form
from stanley_reisner_toolkit.enumeration import (
    EnumFilter,
    count_complexes,
    enumerate_complexes,
    orbit_size,
    sample_complexes,
)
from stanley_reisner_toolkit.utils.errors import GuardExceededError


@pytest.mark.parametrize("n, labeled", [(3, 9), (4, 114)])
def test_labeled_vertex_full_counts(n, labeled):
    assert count_complexes(EnumFilter(n=n)) == labeled


@pytest.mark.slow
def test_labeled_count_on_five_vertices():
    assert count_complexes(EnumFilter(n=5)) == 6894


@pytest.mark.parametrize("n, classes", [(3, 5), (4, 20), pytest.param(5, 180, marks=pytest.mark.slow)])
def test_isomorphism_class_counts(n, classes):
    assert count_complexes(EnumFilter(n=n, up_to_iso=True)) == classes


@pytest.mark.parametrize("n", [3, 4])
def test_orbit_sizes_add_up_to_labeled_count(n):
    classes = list(enumerate_complexes(EnumFilter(n=n, up_to_iso=True)))
    assert sum(orbit_size(cx) for cx in classes) == count_complexes(EnumFilter(n=n))


def test_labeled_output_is_distinct_and_admitted():
    flt = EnumFilter(n=5, dim_ring=3, pure=True)
    found = list(enumerate_complexes(flt))
    assert len(found) == len(set(found))
    assert all(flt.admits(cx) for cx in found)


def test_up_to_iso_is_sorted_canonical_and_distinct():
    found = list(enumerate_complexes(EnumFilter(n=5, dim_ring=2, up_to_iso=True)))
    assert found == sorted(found)
    assert all(canonical_form(cx) == cx for cx in found)
    assert len(found) == len(set(found))


def test_forced_skeleton_agrees_with_filtered_antichain_search():
    forced = EnumFilter(n=5, dim_ring=3, indeg_exact=3)
    plain = list(enumerate_complexes(EnumFilter(n=5, dim_ring=3)))
    expected = {cx for cx in plain if cx.indeg == 3}
    assert set(enumerate_complexes(forced)) == expected


def test_filters_on_invariants():
    flt = EnumFilter(n=5, dim_ring=3, indeg_exact=3, rt_exact=3, e_min=5, pure=True)
    found = list(enumerate_complexes(flt))
    assert found
    for cx in found:
        assert (cx.dim_ring, cx.indeg, cx.rt) == (3, 3, 3)
        assert cx.multiplicity >= 5 and cx.is_pure


def test_parallel_enumeration_matches_serial():
    flt = EnumFilter(n=5, dim_ring=3)
    serial = list(enumerate_complexes(flt))
    assert set(enumerate_complexes(flt, jobs=2)) == set(serial)


def test_any_vertex_set_adds_complexes():
    assert count_complexes(EnumFilter(n=3, require_vertex_full=False)) > 9


def test_family_guard():
    with pytest.raises(GuardExceededError):
        count_complexes(EnumFilter(n=5), max_families=10)


def test_antichain_search_is_capped_by_vertex_count():
    with pytest.raises(GuardExceededError):
        next(enumerate_complexes(EnumFilter(n=8)))


@pytest.mark.parametrize(
    "kwargs",
    [
        {"n": 11},
        {"n": 4, "dim_ring": 5},
        {"n": 4, "e_min": 3, "e_max": 2},
        {"n": 4, "indeg_exact": 3, "rt_max": 2},
    ],
)
def test_inconsistent_filters_are_rejected(kwargs):
    with pytest.raises(ValidationError):
        EnumFilter(**kwargs)


def test_sampler_is_reproducible():
    first = sample_complexes(6, 10, seed=4)
    assert first == sample_complexes(6, 10, seed=4)
    assert all(cx.vertex_full for cx in first)
