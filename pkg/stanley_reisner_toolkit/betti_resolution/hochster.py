"""Graded Betti numbers from Hochster's formula.

    β_{i,j}(k[Δ]) = Σ_{|W| = j} dim_k H̃_{j-i-1}(Δ_W; k)

The sweep over W is embarrassingly parallel; chunks are merged by adding
counters, so the table does not depend on the schedule.
"""
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Tuple

from tqdm import tqdm

from stanley_reisner_toolkit.betti_resolution.betti_table import BettiTable
from stanley_reisner_toolkit.complex_core.simplicial_complex import (
    SimplicialComplex,
    from_facets,
)
from stanley_reisner_toolkit.complex_core.vertex_set import VertexSet, singleton
from stanley_reisner_toolkit.field_linalg import FieldSpec
from stanley_reisner_toolkit.homology import reduced_betti_numbers, top_homology_vanishes
from stanley_reisner_toolkit.utils.errors import VoidComplexError
from stanley_reisner_toolkit.utils.guards import (
    DEFAULT_MAX_SUBSETS,
    MAX_SUBSETS_ENV,
    check_guard,
    resolve_cap,
)
from stanley_reisner_toolkit.utils.logger import logger

CHUNK_SIZE = 256


def _subsets(n: int, sizes: Iterable[int]) -> Iterator[VertexSet]:
    bits = [singleton(v) for v in range(1, n + 1)]
    for j in sizes:
        for combo in combinations(bits, j):
            yield sum(combo)


def _restriction_contributions(
    cx: SimplicialComplex, w: VertexSet, field: FieldSpec
) -> List[Tuple[int, int, int]]:
    """(i, j, h̃) triples contributed by Δ_W."""
    j = w.bit_count()
    restricted = from_facets(cx.n, [f & w for f in cx.facets])
    out = []
    for k, value in enumerate(reduced_betti_numbers(restricted, field)):
        if value:
            out.append((j - k, j, value))  # homology degree k-1, so i = j - k
    return out


def _hochster_chunk(n: int, facets: Tuple[VertexSet, ...], characteristic: int, subsets: List[VertexSet]) -> Counter:
    field = FieldSpec(characteristic=characteristic)
    cx = SimplicialComplex(n, facets)
    counts: Counter = Counter()
    for w in subsets:
        for i, j, value in _restriction_contributions(cx, w, field):
            counts[(i, j)] += value
    return counts


def subset_count(n: int, max_j: Optional[int] = None) -> int:
    top = n if max_j is None else min(n, max_j)
    return sum(math.comb(n, j) for j in range(1, top + 1))


def hochster_betti(
    cx: SimplicialComplex,
    field: FieldSpec,
    max_j: Optional[int] = None,
    max_subsets: Optional[int] = None,
    jobs: int = 1,
    progress: bool = False,
) -> BettiTable:
    top = cx.n if max_j is None else min(cx.n, max_j)
    cap = resolve_cap(max_subsets, MAX_SUBSETS_ENV, DEFAULT_MAX_SUBSETS)
    check_guard(
        "Hochster sweep subsets", subset_count(cx.n, top), cap,
        "lower --max-j or raise --max-subsets",
    )
    subsets = list(_subsets(cx.n, range(1, top + 1)))
    counts: Counter = Counter()
    if jobs > 1 and len(subsets) > CHUNK_SIZE:
        chunks = [subsets[k:k + CHUNK_SIZE] for k in range(0, len(subsets), CHUNK_SIZE)]
        logger.debug(f"Hochster sweep over {len(subsets)} subsets in {len(chunks)} chunks, {jobs} jobs")
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_hochster_chunk, cx.n, cx.facets, field.characteristic, chunk)
                for chunk in chunks
            ]
            for future in tqdm(futures, disable=not progress, desc="hochster", leave=False):
                counts.update(future.result())
    else:
        for w in tqdm(subsets, disable=not progress, desc="hochster", leave=False):
            for i, j, value in _restriction_contributions(cx, w, field):
                counts[(i, j)] += value
    return BettiTable(field, dict(counts))


def regularity(cx: SimplicialComplex, field: FieldSpec, **kwargs) -> int:
    return hochster_betti(cx, field, **kwargs).regularity


def regularity_by_restriction_scan(cx: SimplicialComplex, field: FieldSpec) -> int:
    """max{ i + 1 : H̃_i(Δ_W) ≠ 0 for some W }, 0 when there is none."""
    best = 0
    for w in _subsets(cx.n, range(1, cx.n + 1)):
        restricted = from_facets(cx.n, [f & w for f in cx.facets])
        betti = reduced_betti_numbers(restricted, field)
        for k in range(len(betti) - 1, -1, -1):
            if betti[k]:
                best = max(best, k)  # homology degree k - 1
                break
    return best


def has_linear_resolution(cx: SimplicialComplex, field: FieldSpec) -> Tuple[bool, int]:
    """Whether I_Δ has a q-linear resolution, with q = indeg; scans W with early exit."""
    if not cx.minimal_nonfaces:
        raise VoidComplexError("I_Δ = 0 has no resolution to be linear")
    q = int(cx.indeg)
    # reg ≤ q-1 fails exactly when some H̃_m(Δ_W) ≠ 0 with m ≥ q-1, which needs |W| ≥ q+1.
    for w in _subsets(cx.n, range(q + 1, cx.n + 1)):
        restricted = from_facets(cx.n, [f & w for f in cx.facets])
        betti = reduced_betti_numbers(restricted, field)
        if any(betti[k] for k in range(q, len(betti))):
            return False, q
    return True, q


def a_invariant_negative(cx: SimplicialComplex, field: FieldSpec) -> bool:
    return top_homology_vanishes(cx, field)
