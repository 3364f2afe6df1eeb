"""Exhaustive generation of simplicial complexes under an ``EnumFilter``.

Both searches pick a *free family* of sets and turn it into a complex:

* antichain search: the free family is the facet list itself, candidates
  are all subsets of [n] of size at most d;
* forced-skeleton search (``indeg_exact = q``): every (q-1)-set is a face,
  the free family is an antichain of sets of sizes q..d, and the (q-1)-sets
  it leaves uncovered are added as facets.

Candidates are ordered by decreasing size, then increasing mask, and the
first chosen set is always a d-set. Labeled output streams in search order;
with ``up_to_iso`` free families are grown one set at a time and
deduplicated by canonical labelling.
"""
import math
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple

from tqdm import tqdm

from stanley_reisner_toolkit.complex_core.isomorphism import (
    automorphism_count,
    canonical_form,
    canonical_labeling,
)
from stanley_reisner_toolkit.complex_core.simplicial_complex import (
    SimplicialComplex,
    skeleton_faces,
)
from stanley_reisner_toolkit.complex_core.vertex_set import (
    VertexSet,
    full_set,
    is_subset,
    sort_faces,
    subsets_of_size,
)
from stanley_reisner_toolkit.enumeration.enum_filter import EnumFilter
from stanley_reisner_toolkit.utils.guards import (
    DEFAULT_MAX_FAMILIES,
    MAX_FAMILIES_ENV,
    check_guard,
    resolve_cap,
)
from stanley_reisner_toolkit.utils.logger import logger

MAX_ANTICHAIN_VERTICES = 7

Family = Tuple[VertexSet, ...]


def _index_bits(masks: List[VertexSet], universe: List[VertexSet]) -> int:
    index = {m: k for k, m in enumerate(universe)}
    bits = 0
    for m in masks:
        bits |= 1 << index[m]
    return bits


class _SearchPlan:
    """Candidates, precomputed cover masks and pruning data for one value of d."""

    def __init__(self, flt: EnumFilter, d: int, cap: int):
        self.flt = flt
        self.n = flt.n
        self.d = d
        self.q = flt.indeg_exact
        self.forced = self.q is not None
        self.cap = cap
        self.visited = 0

        n, q = self.n, self.q
        if self.forced:
            low_size = d if flt.pure else q
        else:
            low_size = d if flt.pure else (1 if d > 0 else 0)
        self.cands: List[VertexSet] = []
        for size in range(d, low_size - 1, -1):
            self.cands.extend(skeleton_faces(n, size))
        self.num_top = sum(1 for c in self.cands if c.bit_count() == d)
        self.full = full_set(n)

        self.suffix_union = [0] * (len(self.cands) + 1)
        for i in range(len(self.cands) - 1, -1, -1):
            self.suffix_union[i] = self.suffix_union[i + 1] | self.cands[i]

        # Coverage of (q-1)-sets (forced facets) and of q-sets (the q-faces).
        self.low_sets: List[VertexSet] = skeleton_faces(n, q - 1) if self.forced else []
        self.q_sets: List[VertexSet] = skeleton_faces(n, q) if self.forced else []
        self.full_low = (1 << len(self.low_sets)) - 1
        self.full_q = (1 << len(self.q_sets)) - 1
        self.cover_low = [self._cover(c, self.low_sets, q - 1) for c in self.cands] if self.forced else []
        self.cover_q = [self._cover(c, self.q_sets, q) for c in self.cands] if self.forced else []

        self.dead_after: List[int] = []
        self.subfacets_per_top = math.comb(d, q - 1) if self.forced else 0
        if self.forced and flt.pure:
            last = [-1] * len(self.low_sets)
            for i, bits in enumerate(self.cover_low):
                for j in range(len(self.low_sets)):
                    if bits >> j & 1:
                        last[j] = i
            for start in range(len(self.cands) + 1):
                dead = 0
                for j, idx in enumerate(last):
                    if idx < start:
                        dead |= 1 << j
                self.dead_after.append(dead)

        self.q_cap: Optional[int] = None
        rt_bound = flt.rt_bound
        if self.forced and flt.mu_min is not None and rt_bound == q:
            self.q_cap = len(self.q_sets) - flt.mu_min

        # rt <= d forbids a (d+1)-set whose d-subsets are all chosen.
        self.cliques_of: List[List[int]] = [[] for _ in range(self.num_top)]
        if rt_bound is not None and rt_bound <= d and d < n:
            tops = self.cands[: self.num_top]
            for big in skeleton_faces(n, d + 1):
                clique = _index_bits(list(subsets_of_size(big, d)), tops)
                for t in range(self.num_top):
                    if clique >> t & 1:
                        self.cliques_of[t].append(clique)

    @staticmethod
    def _cover(mask: VertexSet, universe: List[VertexSet], size: int) -> int:
        if size < 0:
            return 0
        return _index_bits(list(subsets_of_size(mask, size)), universe)

    @property
    def skeleton_only(self) -> bool:
        return self.forced and self.d == self.q - 1

    @property
    def vertex_check(self) -> bool:
        return self.flt.require_vertex_full and not (self.forced and self.q >= 2)

    def _tick(self) -> None:
        self.visited += 1
        if self.visited > self.cap:
            check_guard(
                "enumerated families", self.visited, self.cap,
                f"raise {MAX_FAMILIES_ENV} or --max-families, or narrow the filter",
            )

    def _node_ok(self, count: int, low_cov: int, q_cov: int, union: VertexSet) -> bool:
        flt = self.flt
        if flt.e_min is not None and count < flt.e_min:
            return False
        if self.vertex_check and union != self.full:
            return False
        if self.forced:
            if flt.pure and low_cov != self.full_low:
                return False
            if q_cov == self.full_q:
                return False
        return True

    def _can_grow(self, start: int, count: int, low_cov: int, union: VertexSet) -> bool:
        flt = self.flt
        if start >= len(self.cands):
            return False
        if self.vertex_check and (union | self.suffix_union[start]) != self.full:
            return False
        top_left = max(self.num_top - start, 0)
        if flt.e_min is not None and count + top_left < flt.e_min:
            return False
        if self.forced and flt.pure:
            uncovered = self.full_low & ~low_cov
            if uncovered:
                if uncovered & self.dead_after[start]:
                    return False
                budget = top_left
                if flt.e_max is not None:
                    budget = min(budget, flt.e_max - count)
                if budget * self.subfacets_per_top < uncovered.bit_count():
                    return False
        return True

    def _addable(self, j: int, chosen: List[VertexSet], top_bits: int, count: int, q_cov: int) -> bool:
        mask = self.cands[j]
        if any(is_subset(mask, c) for c in chosen):
            return False
        if j < self.num_top:
            if self.flt.e_max is not None and count >= self.flt.e_max:
                return False
            grown = top_bits | 1 << j
            if any(grown & clique == clique for clique in self.cliques_of[j]):
                return False
        if self.q_cap is not None and (q_cov | self.cover_q[j]).bit_count() > self.q_cap:
            return False
        return True

    def _walk(
        self, i: int, chosen: List[VertexSet], top_bits: int, low_cov: int, q_cov: int, union: VertexSet
    ) -> Iterator[Family]:
        self._tick()
        chosen.append(self.cands[i])
        if i < self.num_top:
            top_bits |= 1 << i
        if self.forced:
            low_cov |= self.cover_low[i]
            q_cov |= self.cover_q[i]
        union |= self.cands[i]
        count = top_bits.bit_count()
        if self._node_ok(count, low_cov, q_cov, union):
            yield tuple(chosen)
        start = i + 1
        if self._can_grow(start, count, low_cov, union):
            for j in range(start, len(self.cands)):
                if j >= self.num_top and self.flt.e_min is not None and count < self.flt.e_min:
                    break
                if j < self.num_top and self.flt.e_min is not None and count + self.num_top - j < self.flt.e_min:
                    break
                if self._addable(j, chosen, top_bits, count, q_cov):
                    yield from self._walk(j, chosen, top_bits, low_cov, q_cov, union)
        chosen.pop()

    def shards(self) -> List[int]:
        """First-set indices worth exploring; each one roots an independent subtree."""
        if self.skeleton_only or not self._can_grow(0, 0, 0, 0):
            return []
        out = []
        for i in range(self.num_top):
            if self.flt.e_min is not None and self.num_top - i < self.flt.e_min:
                break
            if self._addable(i, [], 0, 0, 0):
                out.append(i)
        return out

    def families(self, first: Optional[int] = None) -> Iterator[Family]:
        if self.skeleton_only:
            yield ()
            return
        roots = self.shards() if first is None else [first]
        for i in roots:
            yield from self._walk(i, [], 0, 0, 0, 0)

    def complement_bounds(self) -> Optional[Tuple[int, int]]:
        """Bounds on the number of missing d-sets when that side is the smaller search."""
        flt = self.flt
        if not self.forced or self.q != self.d or flt.e_min is None:
            return None
        total = self.num_top
        if 2 * (total - flt.e_min) >= total:
            return None
        hi_e = total - 1 if flt.e_max is None else min(flt.e_max, total - 1)
        return max(total - hi_e, 1), total - flt.e_min

    def families_by_complement(self, lo: int, hi: int) -> Iterator[Family]:
        tops = self.cands[: self.num_top]
        for size in range(lo, hi + 1):
            for missing in combinations(range(self.num_top), size):
                self._tick()
                gone = set(missing)
                family = tuple(t for k, t in enumerate(tops) if k not in gone)
                if self.flt.pure:
                    low_cov = 0
                    for k in range(self.num_top):
                        if k not in gone:
                            low_cov |= self.cover_low[k]
                    if low_cov != self.full_low:
                        continue
                yield family

    def complex_of(self, family: Family) -> SimplicialComplex:
        if not self.forced:
            return SimplicialComplex(self.n, sort_faces(family))
        covered = 0
        for mask in family:
            covered |= self._cover(mask, self.low_sets, self.q - 1)
        facets = list(family)
        facets.extend(s for j, s in enumerate(self.low_sets) if not covered >> j & 1)
        return SimplicialComplex(self.n, sort_faces(facets))

    def iso_families(self) -> Iterator[Family]:
        """One free family per isomorphism class, grown level by level."""
        if self.skeleton_only:
            yield ()
            return
        level: Dict[Family, None] = {}
        for t in self.cands[: self.num_top]:
            self._tick()
            level.setdefault(canonical_labeling(self.n, (t,)).key, None)
        while level:
            grown: Dict[Family, None] = {}
            for family in sorted(level):
                yield family
                top_count = sum(1 for s in family if s.bit_count() == self.d)
                if self.flt.e_max is not None and top_count >= self.flt.e_max:
                    top_room = False
                else:
                    top_room = True
                for j, mask in enumerate(self.cands):
                    if mask in family:
                        continue
                    if j < self.num_top and not top_room:
                        continue
                    if any(is_subset(mask, s) or is_subset(s, mask) for s in family):
                        continue
                    extended = family + (mask,)
                    if not self._monotone_ok(extended):
                        continue
                    key = canonical_labeling(self.n, extended).key
                    if key not in grown:
                        self._tick()
                        grown[key] = None
            level = grown

    def _monotone_ok(self, family: Family) -> bool:
        tops = self.cands[: self.num_top]
        if any(self.cliques_of):
            top_bits = _index_bits([s for s in family if s.bit_count() == self.d], tops)
            for t in range(self.num_top):
                if top_bits >> t & 1 and any(top_bits & c == c for c in self.cliques_of[t]):
                    return False
        if self.q_cap is not None:
            q_cov = 0
            for mask in family:
                q_cov |= self._cover(mask, self.q_sets, self.q)
            if q_cov.bit_count() > self.q_cap:
                return False
        return True


def _dimensions(flt: EnumFilter) -> List[int]:
    if flt.dim_ring is not None:
        return [flt.dim_ring]
    if flt.indeg_exact is not None:
        return list(range(flt.indeg_exact - 1, flt.n))
    return list(range(0, flt.n + 1))


def _labeled_shard(flt: EnumFilter, d: int, cap: int, first: int) -> List[Family]:
    plan = _SearchPlan(flt, d, cap)
    out = []
    for family in plan.families(first):
        cx = plan.complex_of(family)
        if flt.admits(cx):
            out.append(cx.facets)
    return out


def _labeled(plan: _SearchPlan, jobs: int, progress: bool) -> Iterator[SimplicialComplex]:
    flt = plan.flt
    bounds = plan.complement_bounds()
    if bounds is not None:
        logger.debug(f"d={plan.d}: enumerating missing d-sets, {bounds[0]}..{bounds[1]} of {plan.num_top}")
        for family in plan.families_by_complement(*bounds):
            cx = plan.complex_of(family)
            if flt.admits(cx):
                yield cx
        return
    if plan.skeleton_only:
        cx = plan.complex_of(())
        if flt.admits(cx):
            yield cx
        return
    roots = plan.shards()
    logger.debug(f"d={plan.d}: {len(plan.cands)} candidates, {len(roots)} shards")
    if jobs > 1 and len(roots) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(
                _labeled_shard,
                [flt] * len(roots), [plan.d] * len(roots), [plan.cap] * len(roots), roots,
            )
            for facets_list in tqdm(results, total=len(roots), disable=not progress, desc="enumerate", leave=False):
                for facets in facets_list:
                    yield SimplicialComplex(flt.n, facets)
        return
    for i in tqdm(roots, disable=not progress, desc="enumerate", leave=False):
        for family in plan.families(i):
            cx = plan.complex_of(family)
            if flt.admits(cx):
                yield cx


def _up_to_iso(plan: _SearchPlan) -> List[SimplicialComplex]:
    found = []
    for family in plan.iso_families():
        cx = plan.complex_of(family)
        if plan.flt.admits(cx):
            found.append(canonical_form(cx))
    return found


def enumerate_complexes(
    flt: EnumFilter,
    jobs: int = 1,
    max_families: Optional[int] = None,
    progress: bool = False,
) -> Iterator[SimplicialComplex]:
    """Every complex admitted by ``flt``, each exactly once.

    Labeled complexes stream in search order, ascending in d. With
    ``flt.up_to_iso`` one canonical representative per class is produced,
    sorted ascending.
    """
    cap = resolve_cap(max_families, MAX_FAMILIES_ENV, DEFAULT_MAX_FAMILIES)
    if flt.indeg_exact is None and not flt.up_to_iso and flt.n > MAX_ANTICHAIN_VERTICES:
        check_guard(
            "vertices for antichain enumeration", flt.n, MAX_ANTICHAIN_VERTICES,
            "fix indeg_exact to use the forced-skeleton search, or use up_to_iso",
        )
    logger.debug(f"Enumerating {flt.describe()}")
    if flt.up_to_iso:
        found: List[SimplicialComplex] = []
        for d in _dimensions(flt):
            found.extend(_up_to_iso(_SearchPlan(flt, d, cap)))
        yield from sorted(found)
        return
    for d in _dimensions(flt):
        yield from _labeled(_SearchPlan(flt, d, cap), jobs, progress)


def count_complexes(flt: EnumFilter, **kwargs) -> int:
    return sum(1 for _ in enumerate_complexes(flt, **kwargs))


def orbit_size(cx: SimplicialComplex) -> int:
    """Number of labeled complexes isomorphic to ``cx``."""
    return math.factorial(cx.n) // automorphism_count(cx)
