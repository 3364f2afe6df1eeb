"""Exact small Turán numbers and the multiplicity threshold f(n, d).

T(n, p, k) is the largest family of k-subsets of [n] that contains no
p-subset together with all of its k-subsets. Its complement is a covering:
a family of k-sets meeting the k-shadow of every p-set. The covering number
is searched exactly, with iterative deepening on the budget.
"""
import math
from functools import lru_cache
from typing import Dict, List, Optional, Set

from pydantic import BaseModel, ConfigDict

from stanley_reisner_toolkit.complex_core.simplicial_complex import skeleton_faces
from stanley_reisner_toolkit.complex_core.vertex_set import is_subset, subsets_of_size
from stanley_reisner_toolkit.enumeration.enum_filter import EnumFilter
from stanley_reisner_toolkit.enumeration.enumerator import enumerate_complexes
from stanley_reisner_toolkit.utils.errors import StanleyReisnerError
from stanley_reisner_toolkit.utils.guards import DEFAULT_MAX_TURAN_SETS, check_guard
from stanley_reisner_toolkit.utils.logger import logger


class TuranRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    p: int
    k: int
    value: int
    covering: int
    # f(n, k) = T(n, k+1, k) + 1, only defined when p = k + 1
    f_value: Optional[int] = None


class _CoverSearch:
    def __init__(self, n: int, p: int, k: int):
        self.per_set = math.comb(n - k, p - k)
        k_sets = skeleton_faces(n, k)
        p_sets = skeleton_faces(n, p)
        self.full = (1 << len(p_sets)) - 1
        # p-sets hit by each k-set, and the k-subsets of each p-set
        self.hits: List[int] = []
        for t in k_sets:
            bits = 0
            for j, big in enumerate(p_sets):
                if is_subset(t, big):
                    bits |= 1 << j
            self.hits.append(bits)
        index = {t: i for i, t in enumerate(k_sets)}
        self.shadow: List[List[int]] = [
            [index[t] for t in subsets_of_size(big, k)] for big in p_sets
        ]
        self.failed: Dict[int, int] = {}
        self.nodes = 0

    def _bound(self, covered: int) -> int:
        return -(-(self.full & ~covered).bit_count() // self.per_set)

    def exists(self, covered: int, budget: int) -> bool:
        self.nodes += 1
        if covered == self.full:
            return True
        if budget <= 0 or self._bound(covered) > budget:
            return False
        if self.failed.get(covered, -1) >= budget:
            return False
        uncovered = self.full & ~covered
        target = (uncovered & -uncovered).bit_length() - 1
        for t in self.shadow[target]:
            if self.exists(covered | self.hits[t], budget - 1):
                return True
        self.failed[covered] = max(self.failed.get(covered, -1), budget)
        return False


def _packing_bound(n: int, p: int, k: int) -> int:
    """Size of a greedy family of p-sets pairwise sharing fewer than k vertices."""
    packed: List[int] = []
    for big in skeleton_faces(n, p):
        if all((big & other).bit_count() < k for other in packed):
            packed.append(big)
    return len(packed)


@lru_cache(maxsize=None)
def _covering_number(n: int, p: int, k: int, max_sets: int) -> int:
    if n < p:
        return 0
    total = math.comb(n, k)
    check_guard(f"k-subsets for T({n},{p},{k})", total, max_sets, "exact Turán search is exponential")
    lower = max(1, _packing_bound(n, p, k))
    if n > p:
        previous = math.comb(n - 1, k) - _covering_number(n - 1, p, k, max_sets)
        lower = max(lower, total - (n * previous) // (n - k))
    search = _CoverSearch(n, p, k)
    # every first covering set is equivalent to {1..k}
    start = search.hits[0]
    budget = lower
    while not search.exists(start, budget - 1):
        budget += 1
    logger.debug(f"cover({n},{p},{k}) = {budget} after {search.nodes} nodes (lower bound {lower})")
    return budget


def turan(n: int, p: int, k: int, max_sets: int = DEFAULT_MAX_TURAN_SETS) -> TuranRecord:
    if not 1 <= k < p:
        raise StanleyReisnerError(f"Turán numbers need 1 <= k < p, got k={k}, p={p}")
    covering = _covering_number(n, p, k, max_sets)
    value = math.comb(n, k) - covering
    return TuranRecord(
        n=n, p=p, k=k, value=value, covering=covering,
        f_value=value + 1 if p == k + 1 else None,
    )


def f_from_turan(n: int, d: int, max_sets: int = DEFAULT_MAX_TURAN_SETS) -> int:
    """f(n, d) = T(n, d+1, d) + 1."""
    return turan(n, d + 1, d, max_sets).value + 1


def mantel_f(n: int) -> int:
    """Closed form of f(n, 2): floor(n^2 / 4) + 1."""
    return n * n // 4 + 1


def multiplicities_with_rt_d(n: int, d: int, max_families: Optional[int] = None) -> Set[int]:
    """Multiplicities of the complexes on [n] with dim = indeg = rt = d."""
    flt = EnumFilter(n=n, dim_ring=d, indeg_exact=d, rt_exact=d, up_to_iso=True)
    return {cx.multiplicity for cx in enumerate_complexes(flt, max_families=max_families)}


def empirical_f(n: int, d: int, max_families: Optional[int] = None) -> int:
    """Least m such that every complex with dim = indeg = d and e >= m has rt = d + 1."""
    return max(multiplicities_with_rt_d(n, d, max_families), default=0) + 1
