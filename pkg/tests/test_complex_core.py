import math
from itertools import permutations

import pytest

from conftest import complex_of
from stanley_reisner_toolkit.complex_core import (
    automorphism_count,
    boundary_of_simplex,
    canonical_form,
    format_json,
    format_src,
    format_src_documents,
    from_facets,
    full_simplex,
    invariants,
    is_isomorphic,
    parse_complex_text,
    parse_inline_facets,
    parse_json,
    parse_src,
    parse_src_documents,
    vertex_set,
)
from stanley_reisner_toolkit.complex_core.vertex_set import all_subsets, full_set
from stanley_reisner_toolkit.enumeration import sample_complexes
from stanley_reisner_toolkit.utils.errors import (
    ComplexParseError,
    InvalidComplexError,
    VoidComplexError,
)


def brute_minimal_nonfaces(cx):
    faces = cx.face_set
    nonfaces = [s for s in all_subsets(full_set(cx.n)) if s not in faces]
    return sorted(
        (m for m in nonfaces if not any(o != m and o & ~m == 0 for o in nonfaces)),
        key=lambda m: (m.bit_count(), m),
    )


def test_from_facets_keeps_maximal_sets():
    cx = complex_of(4, "12", "1", "123", "4")
    assert cx.facet_lists() == [[4], [1, 2, 3]]
    assert cx.dim_ring == 3
    assert cx.multiplicity == 1
    assert not cx.is_pure


def test_from_facets_rejects_bad_input():
    with pytest.raises(InvalidComplexError):
        from_facets(3, [])
    with pytest.raises(InvalidComplexError):
        from_facets(3, [vertex_set([1, 4])])


def test_four_cycle_invariants(four_cycle):
    summary = invariants(four_cycle)
    assert (summary.dim_ring, summary.codim, summary.multiplicity) == (2, 2, 4)
    assert summary.f_vector == [1, 4, 4]
    assert summary.is_pure and summary.vertex_full
    assert (summary.indeg, summary.rt, summary.mu, summary.bight) == (2, 2, 2, 2)
    assert four_cycle.minimal_nonfaces == (vertex_set([1, 3]), vertex_set([2, 4]))


def test_full_simplex_has_no_nonfaces():
    cx = full_simplex(3)
    assert cx.is_full_simplex
    assert math.isinf(cx.indeg) and math.isinf(cx.rt)
    assert cx.mu == 0
    assert invariants(cx).model_dump()["indeg"] == "inf"
    with pytest.raises(VoidComplexError):
        cx.alexander_dual()


def test_boundary_of_simplex_is_a_hypersurface():
    cx = boundary_of_simplex(4)
    assert cx.dim_ring == 3
    assert cx.minimal_nonfaces == (full_set(4),)
    assert boundary_of_simplex(1).facets == (0,)


def test_minimal_nonfaces_match_brute_force():
    for cx in sample_complexes(6, 60, seed=11):
        assert list(cx.minimal_nonfaces) == brute_minimal_nonfaces(cx)


def test_link_star_restriction(moebius):
    link = moebius.link([1])
    assert link.facet_lists() == [[2, 4], [3, 4], [3, 5]]
    star = moebius.star([5])
    assert star.facet_lists() == [[1, 3, 5], [2, 3, 5], [2, 4, 5]]
    assert moebius.deletion(5).facet_lists() == [[2, 3], [1, 2, 4], [1, 3, 4]]
    with pytest.raises(InvalidComplexError):
        moebius.link([1, 2, 3])


def test_collapse_requires_a_free_face(hollow_triangle):
    filled = complex_of(3, "123")
    collapsed = filled.collapse([1, 2])
    assert collapsed.facet_lists() == [[1, 3], [2, 3]]
    with pytest.raises(InvalidComplexError):
        hollow_triangle.collapse([1])


def test_free_faces(four_cycle, moebius):
    assert four_cycle.free_faces == ()
    path = complex_of(3, "12", "23")
    assert path.free_faces == (vertex_set([1]), vertex_set([3]))
    boundary = {vertex_set(int(ch) for ch in e) for e in ("12", "23", "34", "45", "15")}
    assert set(moebius.free_faces) == boundary


def test_free_faces_match_brute_force():
    for cx in sample_complexes(6, 25, seed=41):
        expected = [
            g for g in all_subsets(full_set(cx.n))
            if g and g not in cx.facets and sum(1 for f in cx.facets if g & f == g) == 1
        ]
        assert set(cx.free_faces) == set(expected)


def test_alexander_dual_of_four_cycle(four_cycle):
    dual = four_cycle.alexander_dual()
    assert dual.facet_lists() == [[1, 3], [2, 4]]
    assert dual.alexander_dual() == four_cycle


def test_double_dual_on_random_complexes():
    for cx in sample_complexes(7, 80, seed=3):
        if not cx.is_full_simplex:
            assert cx.alexander_dual().alexander_dual() == cx


def test_canonical_form_is_a_class_invariant(moebius):
    base = canonical_form(moebius)
    for perm in [(2, 3, 4, 5, 1), (5, 4, 3, 2, 1), (1, 3, 5, 2, 4)]:
        relabeled = moebius.relabel(perm)
        assert canonical_form(relabeled) == base
        assert is_isomorphic(relabeled, moebius)


def test_isomorphism_separates_buchsbaum_complex_from_t35(moebius):
    t35 = complex_of(5, "124", "134", "135", "234", "245")
    assert not is_isomorphic(moebius, t35)


def test_automorphism_count_matches_brute_force():
    for cx in sample_complexes(5, 25, seed=5) + [complex_of(4, "12", "23", "34", "14")]:
        brute = sum(1 for perm in permutations(range(1, cx.n + 1)) if cx.relabel(perm) == cx)
        assert automorphism_count(cx) == brute


def test_src_round_trip(moebius):
    text = format_src(moebius)
    assert text == "n 5\n1 2 4\n1 3 4\n1 3 5\n2 3 5\n2 4 5\n"
    assert parse_src(text) == moebius
    both = parse_src_documents(format_src_documents([moebius, full_simplex(2)]))
    assert both == [moebius, full_simplex(2)]


def test_src_comments_and_empty_facet():
    cx = parse_src("# just the empty face\nn 2\n{}\n")
    assert cx.facets == (0,)
    assert not cx.vertex_full


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("m 4\n1 2\n", 1, 1),
        ("n 3\n1 2\n1 x\n", 3, 3),
        ("n 3\n1 4\n", 2, 3),
    ],
)
def test_src_parse_errors_carry_positions(text, line, column):
    with pytest.raises(ComplexParseError) as err:
        parse_src(text)
    assert (err.value.line, err.value.column) == (line, column)


def test_json_mirror(four_cycle):
    text = format_json(four_cycle)
    assert parse_json(text) == four_cycle
    assert parse_complex_text(text) == four_cycle
    with pytest.raises(ComplexParseError):
        parse_json('{"n": 3, "facets": [[0, 1]]}')


def test_inline_facets():
    cx = parse_inline_facets("1 2 4; 1 3 5")
    assert cx.n == 5
    assert parse_inline_facets("1 2", n=4).vertex_full is False
    with pytest.raises(ComplexParseError):
        parse_inline_facets("1 two")
