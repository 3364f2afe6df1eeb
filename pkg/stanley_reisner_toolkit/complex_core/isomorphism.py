"""Canonical labelling of set families by individualisation and refinement.

Vertices with identical incidence (twins) are merged into weighted
super-vertices first; the refinement then only has to separate vertices
that genuinely differ. Each leaf of the search tree is a vertex order, the
canonical form is the smallest resulting sorted family, and the number of
leaves reaching it counts the automorphisms of the twin quotient.
"""
import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from stanley_reisner_toolkit.complex_core.simplicial_complex import SimplicialComplex
from stanley_reisner_toolkit.complex_core.vertex_set import (
    VertexSet,
    face_key,
    singleton,
    vertices_of,
)


@dataclass(frozen=True)
class CanonicalLabeling:
    key: Tuple[VertexSet, ...]
    mapping: Tuple[int, ...]  # mapping[v - 1] is the canonical label of vertex v
    automorphisms: int

    def apply(self, mask: VertexSet) -> VertexSet:
        out = 0
        for v in vertices_of(mask):
            out |= singleton(self.mapping[v - 1])
        return out


class _Quotient:
    def __init__(self, n: int, sets: Sequence[VertexSet]):
        used = 0
        for s in sets:
            used |= s
        incidence: Dict[int, List[int]] = {}
        for v in vertices_of(used):
            bit = singleton(v)
            incidence.setdefault(
                sum(1 << i for i, s in enumerate(sets) if s & bit), []
            ).append(v)
        self.classes: List[List[int]] = [incidence[k] for k in sorted(incidence)]
        class_of = {v: c for c, members in enumerate(self.classes) for v in members}
        self.sets: List[Tuple[int, ...]] = [
            tuple(sorted({class_of[v] for v in vertices_of(s)})) for s in sets
        ]
        self.incident: List[List[int]] = [[] for _ in self.classes]
        for idx, members in enumerate(self.sets):
            for c in members:
                self.incident[c].append(idx)
        self.unused = [v for v in range(1, n + 1) if not used & singleton(v)]

    def initial_cells(self) -> List[List[int]]:
        by_weight: Dict[int, List[int]] = {}
        for c, members in enumerate(self.classes):
            by_weight.setdefault(len(members), []).append(c)
        return [by_weight[w] for w in sorted(by_weight)]

    def refine(self, cells: List[List[int]]) -> List[List[int]]:
        while True:
            cell_of = {c: idx for idx, cell in enumerate(cells) for c in cell}
            refined: List[List[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    refined.append(cell)
                    continue
                groups: Dict[tuple, List[int]] = {}
                for c in cell:
                    signature = tuple(sorted(
                        tuple(sorted(cell_of[u] for u in self.sets[s] if u != c))
                        for s in self.incident[c]
                    ))
                    groups.setdefault(signature, []).append(c)
                refined.extend(groups[sig] for sig in sorted(groups))
            if len(refined) == len(cells):
                return refined
            cells = refined

    def leaves(self, cells: List[List[int]]) -> Iterator[List[int]]:
        cells = self.refine(cells)
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            yield [cell[0] for cell in cells]
            return
        cell = cells[target]
        for c in sorted(cell):
            rest = [u for u in cell if u != c]
            yield from self.leaves(cells[:target] + [[c], rest] + cells[target + 1:])

    def expand(self, order: List[int]) -> Tuple[Tuple[VertexSet, ...], Dict[int, int]]:
        labels: Dict[int, int] = {}
        class_mask: Dict[int, VertexSet] = {}
        next_label = 1
        for c in order:
            mask = 0
            for v in self.classes[c]:
                labels[v] = next_label
                mask |= singleton(next_label)
                next_label += 1
            class_mask[c] = mask
        family = []
        for members in self.sets:
            mask = 0
            for c in members:
                mask |= class_mask[c]
            family.append(mask)
        return tuple(sorted(family, key=face_key)), labels


def canonical_labeling(n: int, sets: Sequence[VertexSet]) -> CanonicalLabeling:
    """Canonical relabelling of the family ``sets`` on [n]."""
    quotient = _Quotient(n, sets)
    best_key = None
    best_labels: Dict[int, int] = {}
    count = 0
    for order in quotient.leaves(quotient.initial_cells()):
        key, labels = quotient.expand(order)
        if best_key is None or key < best_key:
            best_key, best_labels, count = key, labels, 1
        elif key == best_key:
            count += 1
    next_label = len(best_labels) + 1
    for v in quotient.unused:
        best_labels[v] = next_label
        next_label += 1
    twins = 1
    for members in quotient.classes:
        twins *= math.factorial(len(members))
    return CanonicalLabeling(
        key=best_key,
        mapping=tuple(best_labels[v] for v in range(1, n + 1)),
        automorphisms=count * twins * math.factorial(len(quotient.unused)),
    )


def canonical_form(cx: SimplicialComplex) -> SimplicialComplex:
    labeling = canonical_labeling(cx.n, cx.facets)
    return SimplicialComplex(cx.n, labeling.key)


def automorphism_count(cx: SimplicialComplex) -> int:
    """Number of permutations of [n] mapping the complex onto itself."""
    return canonical_labeling(cx.n, cx.facets).automorphisms


def is_isomorphic(first: SimplicialComplex, second: SimplicialComplex) -> bool:
    if first.n != second.n or len(first.facets) != len(second.facets):
        return False
    if first.f_vector != second.f_vector:
        return False
    return canonical_form(first) == canonical_form(second)
