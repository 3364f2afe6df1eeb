"""Constructors for the named example families.

Every builder checks the invariants its family is supposed to have before
returning, and raises ``ConsistencyError`` when one does not hold.
"""
import math
from typing import Callable, Dict, List, Tuple

from stanley_reisner_toolkit.complex_core.simplicial_complex import (
    SimplicialComplex,
    from_facets,
    skeleton_faces,
)
from stanley_reisner_toolkit.complex_core.vertex_set import (
    VertexSet,
    complement,
    full_set,
    is_subset,
    singleton,
    sort_faces,
    vertex_set,
)
from stanley_reisner_toolkit.utils.errors import ConsistencyError, ExampleParameterError

# Triangle-free connected graphs S_{n,e'} and the pure complexes T_{d,e} dual to them.
PURE_DUAL_GRAPHS: Dict[Tuple[int, int], List[str]] = {
    (4, 4): ["12", "14", "23", "34"],
    (4, 3): ["12", "23", "34"],
    (5, 6): ["12", "14", "23", "25", "34", "45"],
    (5, 5): ["12", "14", "23", "34", "45"],
    (6, 9): ["14", "15", "16", "24", "25", "26", "34", "35", "36"],
    (6, 8): ["12", "14", "23", "25", "34", "36", "45", "56"],
    (7, 12): ["15", "16", "17", "25", "26", "27", "35", "36", "37", "45", "46", "47"],
}

PURE_DUAL_COMPLEXES: Dict[Tuple[int, int], List[str]] = {
    (2, 2): ["13", "24"],
    (2, 3): ["13", "23", "24"],
    (3, 4): ["124", "135", "234", "245"],
    (3, 5): ["124", "134", "135", "234", "245"],
    (4, 6): ["1234", "1235", "1236", "1456", "2456", "3456"],
    (4, 7): ["1235", "1246", "1345", "1356", "2345", "2346", "2456"],
    (5, 9): ["12345", "12346", "12347", "12567", "13567", "14567", "23567", "24567", "34567"],
}

# The cyclic family printed for T_{4,6}; it misses {1,3,5} and {2,4,6}.
PRINTED_T_4_6 = ["1234", "2345", "3456", "1456", "1256", "1236"]

BUCHSBAUM_COMPLEX = ["124", "134", "135", "235", "245"]

PURE_PAIRS: List[Tuple[int, int]] = sorted(PURE_DUAL_COMPLEXES)


def _digits(faces: List[str]) -> List[VertexSet]:
    return [vertex_set(int(ch) for ch in face) for face in faces]


def _expect(cx: SimplicialComplex, name: str, **expected) -> SimplicialComplex:
    for attr, want in expected.items():
        got = getattr(cx, attr)
        if got != want:
            raise ConsistencyError(f"{name}: expected {attr}={want}, got {got} for {cx}")
    return cx


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ExampleParameterError(message)


def sample_facets(c: int, d: int) -> List[VertexSet]:
    """The cd sets [d] minus {i} plus {j}, i in [d], j in d+1..d+c, in canonical order."""
    top = full_set(d)
    out = [
        (top & ~singleton(i)) | singleton(j)
        for i in range(1, d + 1)
        for j in range(d + 1, d + c + 1)
    ]
    return sort_faces(out)


def thm_sample(c: int, d: int, e: int) -> SimplicialComplex:
    _require(c >= 2 and d >= 2, f"thm-sample needs c, d >= 2, got c={c}, d={d}")
    _require(1 <= e <= c * d, f"thm-sample needs 1 <= e <= cd = {c * d}, got e={e}")
    n = c + d
    cx = from_facets(n, sample_facets(c, d)[:e] + skeleton_faces(n, d - 1))
    return _expect(cx, "thm-sample", dim_ring=d, indeg=d, rt=d, multiplicity=e)


def notlin(d: int) -> SimplicialComplex:
    _require(d >= 2, f"notlin needs d >= 2, got d={d}")
    n = d + 2
    facets = [
        complement(singleton(a) | singleton(b), n)
        for a in range(1, d + 1)
        for b in (d + 1, d + 2)
    ]
    cx = from_facets(n, facets + skeleton_faces(n, d - 1))
    return _expect(cx, "notlin", dim_ring=d, indeg=d, rt=d, multiplicity=2 * d)


def rt_jump(n: int, d: int, e: int) -> SimplicialComplex:
    """Multiplicity e with rt = d + 1: every d-subset of [d+1] plus e - d - 1 further d-sets."""
    _require(d >= 2 and n >= d + 1, f"rt needs d >= 2 and n >= d + 1, got n={n}, d={d}")
    _require(
        d + 1 <= e <= math.comb(n, d) - 1,
        f"rt needs d + 1 <= e <= C(n,d) - 1 = {math.comb(n, d) - 1}, got e={e}",
    )
    base = full_set(d + 1)
    inside = [s for s in skeleton_faces(n, d) if is_subset(s, base)]
    outside = [s for s in skeleton_faces(n, d) if not is_subset(s, base)]
    cx = from_facets(n, inside + outside[: e - d - 1] + skeleton_faces(n, d - 1))
    return _expect(cx, "rt", dim_ring=d, indeg=d, rt=d + 1, multiplicity=e)


def omake_ex(d: int, rho: int, n: int) -> SimplicialComplex:
    _require(d >= 3 and 0 <= rho <= d - 3, f"omake-ex needs 0 <= rho <= d - 3, got d={d}, rho={rho}")
    _require(n >= d + 1, f"omake-ex needs n >= d + 1, got n={n}")
    top = full_set(d)
    extra = [s for s in skeleton_faces(n, d - 1) if not is_subset(s, top)]
    _require(len(extra) > rho, f"omake-ex: not enough (d-1)-sets outside [d] for rho={rho}")
    cx = from_facets(n, [top] + extra[:rho] + skeleton_faces(n, d - 2))
    return _expect(
        cx, "omake-ex",
        dim_ring=d, indeg=d - 1, rt=d - 1, multiplicity=1,
        mu=math.comb(n, d - 1) - rho - d,
    )


def pure_dual_graph(n: int, edges: int) -> SimplicialComplex:
    _require((n, edges) in PURE_DUAL_GRAPHS, f"no listed graph S_{{{n},{edges}}}")
    cx = from_facets(n, _digits(PURE_DUAL_GRAPHS[(n, edges)]))
    return _expect(cx, "puredual-S", dim_ring=2, multiplicity=edges, rt=2, vertex_full=True)


def pure_dual_complex(d: int, e: int) -> SimplicialComplex:
    _require((d, e) in PURE_DUAL_COMPLEXES, f"no listed complex T_{{{d},{e}}}")
    cx = from_facets(d + 2, _digits(PURE_DUAL_COMPLEXES[(d, e)]))
    return _expect(cx, "puredual-T", dim_ring=d, is_pure=True, indeg=d, multiplicity=e)


def pure_dual_printed(d: int, e: int) -> SimplicialComplex:
    """The family exactly as printed; only T_{4,6} differs from ``pure_dual_complex``."""
    if (d, e) == (4, 6):
        return from_facets(6, _digits(PRINTED_T_4_6))
    return pure_dual_complex(d, e)


def buchsbaum_complex() -> SimplicialComplex:
    cx = from_facets(5, _digits(BUCHSBAUM_COMPLEX))
    return _expect(cx, "cor-bbm-pure", dim_ring=3, indeg=3, multiplicity=5, is_pure=True)


EXAMPLE_BUILDERS: Dict[str, Callable[..., SimplicialComplex]] = {
    "thm-sample": thm_sample,
    "notlin": notlin,
    "rt": rt_jump,
    "omake-ex": omake_ex,
    "puredual-S": pure_dual_graph,
    "puredual-T": pure_dual_complex,
    "puredual-T-printed": pure_dual_printed,
    "cor-bbm-pure": buchsbaum_complex,
}


def build_example(example_id: str, **params) -> SimplicialComplex:
    builder = EXAMPLE_BUILDERS.get(example_id)
    if builder is None:
        raise ExampleParameterError(
            f"Unknown example '{example_id}'. Valid ids: {', '.join(EXAMPLE_BUILDERS)}"
        )
    try:
        return builder(**params)
    except TypeError as exc:
        raise ExampleParameterError(f"{example_id}: {exc}") from None
