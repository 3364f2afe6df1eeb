import pytest

from conftest import complex_of
from stanley_reisner_toolkit.complex_core import boundary_of_simplex, full_simplex, vertices_of
from stanley_reisner_toolkit.enumeration import sample_complexes
from stanley_reisner_toolkit.field_linalg import VERIFY_FIELDS
from stanley_reisner_toolkit.homology import (
    boundary_matrix,
    reduced_betti_numbers,
    reduced_homology,
    top_homology_vanishes,
)


def test_four_cycle_is_a_circle(four_cycle, field):
    profile = reduced_homology(four_cycle, field)
    assert profile.betti_reduced == [0, 0, 1]
    assert profile.h(1) == 1
    assert profile.top_index == 1
    assert not top_homology_vanishes(four_cycle, field)


def test_sphere_boundaries(field):
    for n in range(2, 6):
        betti = reduced_betti_numbers(boundary_of_simplex(n), field)
        assert betti[-1] == 1 and sum(betti) == 1


def test_empty_face_complex_has_homology_in_degree_minus_one(field):
    profile = reduced_homology(boundary_of_simplex(1), field)
    assert profile.betti_reduced == [1]
    assert profile.h(-1) == 1


def test_simplex_and_cone_are_acyclic(moebius, field):
    assert reduced_homology(full_simplex(4), field).is_acyclic
    cone = complex_of(6, *("".join(sorted(f + "6")) for f in ["124", "134", "135", "235", "245"]))
    assert reduced_homology(cone, field).is_acyclic


def test_two_edges_have_two_components(two_edges, field):
    assert reduced_homology(two_edges, field).betti_reduced == [0, 1, 0]


def test_moebius_band_is_a_circle_in_every_characteristic(moebius):
    assert {reduced_betti_numbers(moebius, f) for f in VERIFY_FIELDS} == {(0, 0, 1, 0)}


def _trimmed(betti):
    betti = list(betti)
    while betti and betti[-1] == 0:
        betti.pop()
    return betti


def assert_homology_invariants(cx, field):
    for i in range(0, cx.dim_ring):
        product = boundary_matrix(cx, i + 1, field).matmul(boundary_matrix(cx, i, field))
        assert product.is_zero()

    profile = reduced_homology(cx, field)
    alternating = sum((-1) ** (k - 1) * count for k, count in enumerate(cx.f_vector))
    assert profile.reduced_euler_characteristic() == alternating

    for v in vertices_of(cx.support):
        assert reduced_homology(cx.star([v]), field).is_acyclic

    for face in cx.free_faces[:4]:
        collapsed = cx.collapse(face)
        assert _trimmed(reduced_betti_numbers(collapsed, field)) == _trimmed(profile.betti_reduced)


@pytest.mark.parametrize("n, seed", [(5, 11), (6, 23), (7, 29)])
def test_homology_invariants_on_random_complexes(n, seed, field):
    for cx in sample_complexes(n, 40, seed=seed):
        assert_homology_invariants(cx, field)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(2, 9))
def test_homology_invariants_on_many_random_complexes(n, field):
    # 7 * 1430 draws: ten thousand complexes per field
    for cx in sample_complexes(n, 1430, seed=1000 + n):
        assert_homology_invariants(cx, field)


@pytest.mark.parametrize("face", [[1, 2], [1, 2, 3]])
def test_elementary_collapse_preserves_homology(face, field):
    filled = complex_of(4, "1234", "45")
    assert reduced_homology(filled, field).is_acyclic
    assert reduced_homology(filled.collapse(face), field).is_acyclic


def test_collapsing_the_moebius_band_keeps_its_circle(moebius, field):
    assert moebius.free_faces
    cx = moebius
    while cx.free_faces:
        cx = cx.collapse(cx.free_faces[0])
        assert _trimmed(reduced_betti_numbers(cx, field)) == [0, 0, 1]


def test_vertex_stars_of_the_moebius_band_are_cones(moebius, field):
    for v in range(1, 6):
        star = moebius.star([v])
        assert reduced_homology(star, field).is_acyclic
