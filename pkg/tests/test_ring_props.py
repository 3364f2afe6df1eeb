import pytest

from conftest import complex_of
from stanley_reisner_toolkit.betti_resolution import has_linear_resolution
from stanley_reisner_toolkit.complex_core import boundary_of_simplex, full_simplex
from stanley_reisner_toolkit.enumeration import EnumFilter, enumerate_complexes, sample_complexes
from stanley_reisner_toolkit.field_linalg import GF2, GF3, RATIONALS
from stanley_reisner_toolkit.ring_props import (
    degree_d_height_at_least_two,
    eagon_reiner_agrees,
    graph_is_connected,
    is_buchsbaum,
    is_cm,
    is_hypersurface,
    reisner_witness,
    ring_status,
)


def test_four_cycle_is_cohen_macaulay(four_cycle, field):
    status = ring_status(four_cycle, field)
    assert status.is_cm and status.is_buchsbaum
    assert not status.is_hypersurface
    assert status.d2_connected is True
    assert status.failing_witness is None
    assert status.model_dump()["field"] == field.label


def test_two_edges_are_buchsbaum_but_not_cm(two_edges, field):
    status = ring_status(two_edges, field)
    assert not status.is_cm
    assert status.is_buchsbaum
    assert status.failing_witness.face == []
    assert status.failing_witness.index == 0
    assert status.d2_connected is False


def test_hollow_triangle_is_a_hypersurface(hollow_triangle, field):
    assert is_hypersurface(hollow_triangle)
    assert is_cm(hollow_triangle, field)


def test_moebius_band(moebius, field):
    assert is_buchsbaum(moebius, field)
    assert not is_cm(moebius, field)
    assert not is_hypersurface(moebius)
    assert reisner_witness(moebius, field) == (0, 1)


def test_t35_is_not_buchsbaum(field):
    t35 = complex_of(5, "124", "134", "135", "234", "245")
    assert not is_buchsbaum(t35, field)
    face, index = reisner_witness(t35, field, skip_empty=True)
    assert face.bit_count() == 1 and index == 0


def test_impure_complexes_are_neither(field):
    cx = complex_of(4, "123", "4")
    assert not is_cm(cx, field)
    assert not is_buchsbaum(cx, field)


def test_spheres_and_simplices_are_cm(field):
    for n in range(1, 6):
        assert is_cm(full_simplex(n), field)
    for n in range(2, 6):
        assert is_cm(boundary_of_simplex(n), field)


def test_cm_depends_on_characteristic_for_the_projective_plane():
    rp2 = complex_of(
        6,
        "124", "126", "135", "136", "145", "234", "235", "256", "346", "456",
    )
    assert not is_cm(rp2, GF2)
    assert is_cm(rp2, GF3)
    assert is_cm(rp2, RATIONALS)


def test_graph_connectivity_equals_cm_in_dimension_one(field):
    flt = EnumFilter(n=5, dim_ring=2)
    for cx in enumerate_complexes(flt):
        assert graph_is_connected(cx) == (cx.is_pure and is_cm(cx, field))


def test_eagon_reiner_on_all_small_complexes(field):
    for cx in enumerate_complexes(EnumFilter(n=4)):
        assert eagon_reiner_agrees(cx, field)


def test_height_condition(four_cycle, two_edges):
    assert degree_d_height_at_least_two(four_cycle)
    assert degree_d_height_at_least_two(two_edges)
    assert not degree_d_height_at_least_two(complex_of(3, "12", "13"))


def _dual_resolution_matches_reisner(cx, fld):
    if cx.is_full_simplex:
        return True
    linear, _ = has_linear_resolution(cx.alexander_dual(), fld)
    return linear == is_cm(cx, fld)


@pytest.mark.slow
@pytest.mark.parametrize("fld", [GF2, RATIONALS], ids=lambda f: f.label)
def test_dual_linearity_matches_reisner_on_five_vertices(fld):
    classes = list(enumerate_complexes(EnumFilter(n=5, up_to_iso=True)))
    assert len(classes) == 180
    assert all(_dual_resolution_matches_reisner(cx, fld) for cx in classes)


@pytest.mark.slow
@pytest.mark.parametrize("fld", [GF2, RATIONALS], ids=lambda f: f.label)
def test_dual_linearity_matches_reisner_on_six_vertices_and_samples(fld):
    for cx in enumerate_complexes(EnumFilter(n=6, up_to_iso=True)):
        assert _dual_resolution_matches_reisner(cx, fld), cx
    for n in (7, 8):
        for cx in sample_complexes(n, 2000, seed=n):
            assert _dual_resolution_matches_reisner(cx, fld), cx


@pytest.mark.parametrize("fld", [GF2, RATIONALS], ids=lambda f: f.label)
def test_dual_linearity_matches_reisner_on_sampled_six_vertex_complexes(fld):
    assert all(_dual_resolution_matches_reisner(cx, fld) for cx in sample_complexes(6, 60, seed=61))
