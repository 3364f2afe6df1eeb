from functools import lru_cache
from itertools import combinations
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict

from stanley_reisner_toolkit.complex_core.simplicial_complex import SimplicialComplex
from stanley_reisner_toolkit.complex_core.vertex_set import (
    VertexSet,
    singleton,
    vertices_of,
)
from stanley_reisner_toolkit.field_linalg import FieldSpec, SparseMatrix, rank

HOMOLOGY_CACHE_SIZE = 1 << 16


class HomologyProfile(BaseModel):
    """Reduced Betti numbers h̃_i for i = -1 .. dim Δ; ``betti_reduced[k]`` is h̃_{k-1}."""

    model_config = ConfigDict(frozen=True)

    field: FieldSpec
    betti_reduced: List[int]

    def h(self, i: int) -> int:
        k = i + 1
        if 0 <= k < len(self.betti_reduced):
            return self.betti_reduced[k]
        return 0

    @property
    def top_index(self) -> int:
        return len(self.betti_reduced) - 2

    @property
    def is_acyclic(self) -> bool:
        return not any(self.betti_reduced)

    def reduced_euler_characteristic(self) -> int:
        return sum((-1) ** (k - 1) * b for k, b in enumerate(self.betti_reduced))


def _faces_of_size(facets: Tuple[VertexSet, ...], size: int) -> List[VertexSet]:
    found = set()
    for f in facets:
        if f.bit_count() < size:
            continue
        bits = [singleton(v) for v in vertices_of(f)]
        for combo in combinations(bits, size):
            found.add(sum(combo))
    return sorted(found)


def _boundary(facets: Tuple[VertexSet, ...], i: int, field: FieldSpec) -> SparseMatrix:
    rows = _faces_of_size(facets, i + 1) if i >= -1 else []
    cols = _faces_of_size(facets, i) if i >= 0 else []
    col_index = {face: k for k, face in enumerate(cols)}
    entries = []
    for r, face in enumerate(rows):
        for k, v in enumerate(vertices_of(face)):
            entries.append((r, col_index[face & ~singleton(v)], -1 if k % 2 else 1))
    return SparseMatrix(len(rows), len(cols), entries, field)


def boundary_matrix(cx: SimplicialComplex, i: int, field: FieldSpec) -> SparseMatrix:
    """∂_i from i-faces (rows) to (i-1)-faces (columns) of the augmented chain complex."""
    return _boundary(cx.facets, i, field)


def _compress(cx: SimplicialComplex) -> Tuple[VertexSet, ...]:
    # Order-preserving relabelling of the used vertices onto 1..m.
    position = {v: k for k, v in enumerate(vertices_of(cx.support))}
    compressed = []
    for f in cx.facets:
        mask = 0
        for v in vertices_of(f):
            mask |= 1 << position[v]
        compressed.append(mask)
    return tuple(sorted(compressed, key=lambda m: (m.bit_count(), m)))


@lru_cache(maxsize=HOMOLOGY_CACHE_SIZE)
def _reduced_betti(facets: Tuple[VertexSet, ...], field: FieldSpec) -> Tuple[int, ...]:
    top = max(f.bit_count() for f in facets) - 1
    if len(facets) == 1:
        return (1,) if facets[0] == 0 else (0,) * (top + 2)
    counts = [len(_faces_of_size(facets, i + 1)) for i in range(-1, top + 1)]
    ranks = {i: rank(_boundary(facets, i, field), field) for i in range(0, top + 1)}
    betti = []
    for i in range(-1, top + 1):
        betti.append(counts[i + 1] - ranks.get(i, 0) - ranks.get(i + 1, 0))
    return tuple(betti)


def reduced_homology(cx: SimplicialComplex, field: FieldSpec) -> HomologyProfile:
    return HomologyProfile(field=field, betti_reduced=list(_reduced_betti(_compress(cx), field)))


def reduced_betti_numbers(cx: SimplicialComplex, field: FieldSpec) -> Tuple[int, ...]:
    """Cached tuple form of ``reduced_homology``: entry k is h̃_{k-1}."""
    return _reduced_betti(_compress(cx), field)


def top_homology_vanishes(cx: SimplicialComplex, field: FieldSpec) -> bool:
    return reduced_betti_numbers(cx, field)[-1] == 0


def homology_cache_clear() -> None:
    _reduced_betti.cache_clear()
