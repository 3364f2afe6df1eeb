"""Per-complex predicates behind the claim registry.

Each ``*_violation`` function takes a complex and a field, returns ``None``
when the complex is outside the claim's hypotheses or satisfies its
conclusion, and a short description of the failure otherwise. They only
look at the complex itself, so a serialized counterexample can be checked
again without knowing the sweep that produced it.
"""
import math
from typing import List, Optional

import networkx as nx

from stanley_reisner_toolkit.betti_resolution import (
    has_linear_resolution,
    regularity_by_restriction_scan,
)
from stanley_reisner_toolkit.claims.examples import (
    PURE_DUAL_GRAPHS,
    PURE_PAIRS,
    buchsbaum_complex,
    pure_dual_complex,
)
from stanley_reisner_toolkit.complex_core.isomorphism import is_isomorphic
from stanley_reisner_toolkit.complex_core.simplicial_complex import (
    SimplicialComplex,
    skeleton_faces,
)
from stanley_reisner_toolkit.complex_core.vertex_set import vertices_of
from stanley_reisner_toolkit.enumeration.turan import mantel_f
from stanley_reisner_toolkit.field_linalg import FieldSpec
from stanley_reisner_toolkit.homology import top_homology_vanishes
from stanley_reisner_toolkit.ring_props import (
    degree_d_height_at_least_two,
    eagon_reiner_agrees,
    graph_is_connected,
    is_buchsbaum,
    is_cm,
    is_hypersurface,
)

Violation = Optional[str]


def has_q_linear_resolution(cx: SimplicialComplex, q: int, field: FieldSpec) -> bool:
    if not cx.minimal_nonfaces:
        return False
    linear, indeg = has_linear_resolution(cx, field)
    return linear and indeg == q


def _summary(cx: SimplicialComplex) -> str:
    return f"d={cx.dim_ring} n={cx.n} e={cx.multiplicity} indeg={cx.indeg} rt={cx.rt}"


def large_multiplicity_cm_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    d, c, n = cx.dim_ring, cx.codim, cx.n
    bound = math.comb(n, c) - c
    if d < 2 or cx.multiplicity < bound:
        return None
    if not is_cm(cx, field):
        return f"{_summary(cx)}: e >= {bound} but not Cohen-Macaulay over {field.label}"
    return None


def large_multiplicity_indeg_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    d, c, n = cx.dim_ring, cx.codim, cx.n
    bound = math.comb(n, c) - c
    if d < 2 or cx.multiplicity < bound:
        return None
    if cx.indeg < d:
        return f"{_summary(cx)}: e >= {bound} but indeg < d"
    return None


def top_degree_equivalence_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    d, n = cx.dim_ring, cx.n
    if d < 1 or d >= n or cx.is_full_simplex:
        return None
    indeg_high = cx.indeg == d + 1
    all_top_sets = cx.multiplicity == math.comb(n, d)
    generated_by_all = set(cx.minimal_nonfaces) == set(skeleton_faces(n, d + 1))
    linear = has_q_linear_resolution(cx, d + 1, field)
    flags = [indeg_high, all_top_sets, generated_by_all, linear]
    if len(set(flags)) != 1:
        return (
            f"{_summary(cx)}: indeg=d+1 {indeg_high}, e=C(n,d) {all_top_sets}, "
            f"I generated by all (d+1)-sets {generated_by_all}, (d+1)-linear {linear}"
        )
    if indeg_high and (not is_cm(cx, field) or cx.rt != d + 1):
        return f"{_summary(cx)}: indeg = d+1 but not Cohen-Macaulay with rt = d+1"
    return None


def codim_one_hypersurface_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    if cx.codim != 1 or cx.multiplicity < cx.dim_ring:
        return None
    if not is_hypersurface(cx):
        return f"{_summary(cx)}: n = d+1 and e >= d but mu = {cx.mu}"
    return None


def dual_properties_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    if cx.is_full_simplex:
        return None
    n, d = cx.n, cx.dim_ring
    dual = cx.alexander_dual()
    problems: List[str] = []
    if dual.indeg + d != n:
        problems.append(f"indeg(dual) + d = {dual.indeg + d} != n")
    if dual.rt != cx.bight:
        problems.append(f"rt(dual) = {dual.rt} != bight = {cx.bight}")
    if cx.is_pure != (dual.rt == dual.indeg):
        problems.append("purity does not match rt(dual) = indeg(dual)")
    lowest = sum(1 for m in dual.minimal_nonfaces if m.bit_count() == dual.indeg)
    if lowest != cx.multiplicity:
        problems.append(f"generators of I(dual) in degree indeg = {lowest} != e = {cx.multiplicity}")
    if dual.alexander_dual() != cx:
        problems.append("the double dual differs")
    if dual.dim_ring != n - cx.indeg:
        problems.append(f"dim(dual) = {dual.dim_ring} != n - indeg")
    if cx.indeg == d and dual.multiplicity + cx.multiplicity != math.comb(n, d):
        problems.append(f"e(dual) + e = {dual.multiplicity + cx.multiplicity} != C(n,d)")
    if problems:
        return f"{_summary(cx)}: " + "; ".join(problems)
    return None


def eagon_reiner_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    if cx.is_full_simplex:
        return None
    if not eagon_reiner_agrees(cx, field):
        return f"{_summary(cx)}: Reisner CM = {is_cm(cx, field)} but the dual's resolution disagrees over {field.label}"
    return None


def small_multiplicity_linear_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    d = cx.dim_ring
    if d < 2 or cx.indeg != d or cx.multiplicity > d:
        return None
    if not has_q_linear_resolution(cx, d, field):
        return f"{_summary(cx)}: e <= d but no d-linear resolution over {field.label}"
    if cx.rt != d:
        return f"{_summary(cx)}: e <= d but rt != d"
    return None


def pure_second_bound_cm_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    d, c, n = cx.dim_ring, cx.codim, cx.n
    bound = math.comb(n, c) - 2 * c + 1
    if d < 2 or not cx.is_pure or cx.multiplicity < bound:
        return None
    if not is_cm(cx, field):
        return f"{_summary(cx)}: pure with e >= {bound} but not Cohen-Macaulay over {field.label}"
    return None


def second_bound_indeg_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    d, c, n = cx.dim_ring, cx.codim, cx.n
    bound = math.comb(n, c) - 2 * c + 1
    if d < 2 or cx.multiplicity < bound:
        return None
    if cx.indeg < d - 1:
        return f"{_summary(cx)}: e >= {bound} but indeg < d - 1"
    return None


def equigenerated_small_multiplicity_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    d = cx.dim_ring
    if d < 2 or cx.indeg != d or cx.rt != d or cx.multiplicity > 2 * d - 1:
        return None
    if not has_q_linear_resolution(cx, d, field):
        return f"{_summary(cx)}: indeg = rt = d, e <= 2d-1 but no d-linear resolution over {field.label}"
    if not top_homology_vanishes(cx, field):
        return f"{_summary(cx)}: indeg = rt = d, e <= 2d-1 but top homology is nonzero"
    return None


def regularity_sides(cx: SimplicialComplex, field: FieldSpec):
    """(reg <= d - 1, top homology vanishes)."""
    d = cx.dim_ring
    return regularity_by_restriction_scan(cx, field) <= d - 1, top_homology_vanishes(cx, field)


def low_relation_type_regularity_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    d = cx.dim_ring
    if d < 2:
        return None
    reg_ok, top_ok = regularity_sides(cx, field)
    if reg_ok != top_ok:
        return f"{_summary(cx)}: reg <= d-1 is {reg_ok} but top homology vanishing is {top_ok}"
    if cx.rt <= d and cx.multiplicity <= 2 * d - 1 and not reg_ok:
        return f"{_summary(cx)}: rt <= d, e <= 2d-1 but reg >= d over {field.label}"
    return None


def many_generators_linear_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    d, n = cx.dim_ring, cx.n
    if d < 2 or cx.indeg != d - 1 or cx.rt != d - 1:
        return None
    bound = math.comb(n, d - 1) - 2 * d + 3
    if cx.mu < bound:
        return None
    if cx.multiplicity != 1:
        return f"{_summary(cx)}: mu >= {bound} but e != 1"
    if not has_q_linear_resolution(cx, d - 1, field):
        return f"{_summary(cx)}: mu >= {bound} but no (d-1)-linear resolution over {field.label}"
    return None


def many_generators_example_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    d, n = cx.dim_ring, cx.n
    bound = math.comb(n, d - 1) - 2 * d + 3
    if cx.indeg != d - 1 or cx.rt != d - 1 or cx.mu < bound:
        return f"{_summary(cx)}: mu = {cx.mu} misses the hypotheses (bound {bound})"
    return many_generators_linear_violation(cx, field)


def buchsbaum_criteria_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    d, c, n = cx.dim_ring, cx.codim, cx.n
    if d < 3 or not cx.is_pure or cx.indeg != d or cx.multiplicity < math.comb(n, c) - 2 * c:
        return None
    link_bound = math.comb(n - 1, c) - 2 * c
    for v in vertices_of(cx.support):
        e_link = cx.link([v]).multiplicity
        if e_link < link_bound:
            return f"{_summary(cx)}: e(link {v}) = {e_link} < {link_bound}"
    buchsbaum = None
    if degree_d_height_at_least_two(cx):
        buchsbaum = is_buchsbaum(cx, field)
        if not buchsbaum:
            return f"{_summary(cx)}: height >= 2 but not Buchsbaum over {field.label}"
    if cx.rt == d:
        if buchsbaum is None:
            buchsbaum = is_buchsbaum(cx, field)
        if not buchsbaum:
            return f"{_summary(cx)}: rt = d but not Buchsbaum over {field.label}"
    return None


def sample_family_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    d, e = cx.dim_ring, cx.multiplicity
    if cx.indeg != d or cx.rt != d:
        return f"{_summary(cx)}: expected indeg = rt = d"
    if e > 2 * d - 1:
        return None
    if not has_q_linear_resolution(cx, d, field):
        return f"{_summary(cx)}: e <= 2d-1 but no d-linear resolution over {field.label}"
    dual = cx.alexander_dual()
    c_dual = dual.codim
    bound = math.comb(dual.n, c_dual) - 2 * c_dual + 1
    if not dual.is_pure or dual.multiplicity < bound:
        return f"{_summary(cx)}: the dual is not pure with e >= {bound}"
    if not is_cm(dual, field):
        return f"{_summary(cx)}: the dual is not Cohen-Macaulay over {field.label}"
    return None


def not_linear_witness_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    d = cx.dim_ring
    if cx.indeg != d or cx.rt != d or cx.multiplicity != 2 * d:
        return f"{_summary(cx)}: expected indeg = rt = d and e = 2d"
    if has_q_linear_resolution(cx, d, field):
        return f"{_summary(cx)}: e = 2d yet d-linear over {field.label}"
    if top_homology_vanishes(cx, field):
        return f"{_summary(cx)}: top homology vanishes over {field.label}"
    return None


def rt_jump_witness_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    d = cx.dim_ring
    if cx.indeg != d or cx.rt != d + 1:
        return f"{_summary(cx)}: expected indeg = d and rt = d+1"
    if has_q_linear_resolution(cx, d, field):
        return f"{_summary(cx)}: rt = d+1 yet d-linear over {field.label}"
    return None


def relation_type_range_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    d = cx.dim_ring
    if d < 2 or cx.indeg != d:
        return None
    if cx.rt not in (d, d + 1):
        return f"{_summary(cx)}: rt outside {{d, d+1}}"
    if cx.multiplicity <= d and cx.rt != d:
        return f"{_summary(cx)}: e <= d but rt != d"
    return None


def pure_pair_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    d, e, n = cx.dim_ring, cx.multiplicity, cx.n
    if d < 2 or not cx.is_pure or cx.indeg != d or e > 2 * d - 1 or n < d + 2:
        return None
    if (d, e) not in PURE_PAIRS:
        return f"{_summary(cx)}: (d, e) = ({d}, {e}) is not a listed pair"
    if d >= 3 and n != d + 2:
        return f"{_summary(cx)}: n != d + 2"
    return None


def pure_vertex_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    d = cx.dim_ring
    if d < 3 or not cx.is_pure or cx.indeg != d or is_hypersurface(cx):
        return None
    best = max(cx.deletion(v).multiplicity for v in range(1, cx.n + 1))
    if best < 2:
        return f"{_summary(cx)}: every vertex deletion has multiplicity 1"
    return None


def pure_dual_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    n, edges = cx.n, cx.multiplicity
    if cx.dim_ring != 2 or (n, edges) not in PURE_DUAL_GRAPHS:
        return None
    if not graph_is_connected(cx) or cx.rt != 2:
        return f"{_summary(cx)}: expected a connected graph with rt = 2"
    if not is_cm(cx, field):
        return f"{_summary(cx)}: not Cohen-Macaulay over {field.label}"
    if edges == mantel_f(n) - 1:
        graph = nx.Graph([vertices_of(f) for f in cx.facets])
        if not nx.is_bipartite(graph):
            return f"{_summary(cx)}: e = f(n,2) - 1 but the graph is not bipartite"
    d = n - 2
    e = math.comb(d + 2, 2) - edges
    expected = pure_dual_complex(d, e)
    if not is_isomorphic(cx.alexander_dual(), expected):
        return f"{_summary(cx)}: the dual is not isomorphic to T_{{{d},{e}}}"
    return None


def buchsbaum_classification_violation(cx: SimplicialComplex, field: FieldSpec) -> Violation:
    d = cx.dim_ring
    if d < 3 or cx.indeg != d or cx.multiplicity > 2 * d - 1:
        return None
    if is_hypersurface(cx) or not is_buchsbaum(cx, field):
        return None
    if d != 3 or not is_isomorphic(cx, buchsbaum_complex()):
        return f"{_summary(cx)}: Buchsbaum and not a hypersurface, but not the listed complex"
    return None
