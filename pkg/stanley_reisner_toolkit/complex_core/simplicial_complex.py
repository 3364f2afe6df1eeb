import math
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, Iterable, List, Sequence, Tuple, Union

from stanley_reisner_toolkit.complex_core.vertex_set import (
    MAX_VERTICES,
    VertexSet,
    all_subsets,
    complement,
    format_face,
    full_set,
    is_subset,
    singleton,
    sort_faces,
    top_vertex,
    vertex_set,
    vertices_of,
)
from stanley_reisner_toolkit.utils.errors import InvalidComplexError, VoidComplexError

FaceLike = Union[VertexSet, Iterable[int]]


def _as_mask(face: FaceLike) -> VertexSet:
    if isinstance(face, int):
        return face
    return vertex_set(face)


class SimplicialComplex:
    """An immutable simplicial complex on the ambient vertex set [n].

    Only the facets are stored, as an antichain of bit masks sorted by
    (cardinality, mask value), so two complexes are equal exactly when
    their facet tuples and ambient ``n`` agree. Everything else (faces,
    minimal nonfaces, duals, links) is derived on demand and cached.
    """

    def __init__(self, n: int, facets: Sequence[VertexSet]):
        self._n = n
        self._facets = tuple(facets)

    @property
    def n(self) -> int:
        return self._n

    @property
    def facets(self) -> Tuple[VertexSet, ...]:
        return self._facets

    @cached_property
    def dim_ring(self) -> int:
        return max(f.bit_count() for f in self._facets)

    @property
    def dimension(self) -> int:
        return self.dim_ring - 1

    @property
    def codim(self) -> int:
        return self._n - self.dim_ring

    @cached_property
    def multiplicity(self) -> int:
        d = self.dim_ring
        return sum(1 for f in self._facets if f.bit_count() == d)

    @cached_property
    def is_pure(self) -> bool:
        return all(f.bit_count() == self.dim_ring for f in self._facets)

    @cached_property
    def support(self) -> VertexSet:
        mask = 0
        for f in self._facets:
            mask |= f
        return mask

    @property
    def vertex_full(self) -> bool:
        return self.support == full_set(self._n)

    @property
    def is_full_simplex(self) -> bool:
        return self._facets == (full_set(self._n),)

    @cached_property
    def face_set(self) -> FrozenSet[VertexSet]:
        faces = set()
        for f in self._facets:
            faces.update(all_subsets(f))
        return frozenset(faces)

    def is_face(self, face: FaceLike) -> bool:
        mask = _as_mask(face)
        return any(is_subset(mask, f) for f in self._facets)

    def faces(self, q: int) -> List[VertexSet]:
        """All faces with exactly ``q`` vertices, in canonical order."""
        if q < 0 or q > self._n:
            return []
        found = set()
        for f in self._facets:
            if f.bit_count() < q:
                continue
            bits = [singleton(v) for v in vertices_of(f)]
            for combo in combinations(bits, q):
                found.add(sum(combo))
        return sorted(found)

    @cached_property
    def f_vector(self) -> Tuple[int, ...]:
        """(f_{-1}, f_0, ..., f_{d-1}); entry k counts faces with k vertices."""
        counts = [0] * (self.dim_ring + 1)
        for face in self.face_set:
            counts[face.bit_count()] += 1
        return tuple(counts)

    @cached_property
    def minimal_nonfaces(self) -> Tuple[VertexSet, ...]:
        # Every minimal nonface M is F + {v} with F = M minus its top vertex a face.
        face_set = self.face_set
        found = []
        for face in face_set:
            for v in range(top_vertex(face) + 1, self._n + 1):
                candidate = face | singleton(v)
                if candidate in face_set:
                    continue
                if all(
                    (candidate & ~singleton(u)) in face_set
                    for u in vertices_of(face)
                ):
                    found.append(candidate)
        return tuple(sort_faces(found))

    @property
    def indeg(self) -> Union[int, float]:
        """Initial degree of I_Δ, ``math.inf`` when I_Δ = 0."""
        nonfaces = self.minimal_nonfaces
        return nonfaces[0].bit_count() if nonfaces else math.inf

    @property
    def rt(self) -> Union[int, float]:
        nonfaces = self.minimal_nonfaces
        return max(m.bit_count() for m in nonfaces) if nonfaces else math.inf

    @property
    def mu(self) -> int:
        return len(self.minimal_nonfaces)

    @property
    def bight(self) -> int:
        return self._n - min(f.bit_count() for f in self._facets)

    def link(self, face: FaceLike) -> "SimplicialComplex":
        g = _as_mask(face)
        if not self.is_face(g):
            raise InvalidComplexError(f"{format_face(g)} is not a face of the complex")
        return from_facets(self._n, [f & ~g for f in self._facets if is_subset(g, f)])

    def star(self, face: FaceLike) -> "SimplicialComplex":
        g = _as_mask(face)
        if not self.is_face(g):
            raise InvalidComplexError(f"{format_face(g)} is not a face of the complex")
        return from_facets(self._n, [f for f in self._facets if is_subset(g, f)])

    def restriction(self, subset: FaceLike) -> "SimplicialComplex":
        w = _as_mask(subset)
        if not is_subset(w, full_set(self._n)):
            raise InvalidComplexError(f"{format_face(w)} is not a subset of [{self._n}]")
        return from_facets(self._n, [f & w for f in self._facets])

    def deletion(self, v: int) -> "SimplicialComplex":
        """The restriction to [n] minus the vertex ``v``."""
        return self.restriction(complement(singleton(v), self._n))

    @cached_property
    def free_faces(self) -> Tuple[VertexSet, ...]:
        """Nonempty non-facet faces lying in exactly one facet."""
        found = []
        for i, f in enumerate(self._facets):
            others = self._facets[:i] + self._facets[i + 1:]
            for g in all_subsets(f):
                if g == 0 or g == f:
                    continue
                if not any(is_subset(g, h) for h in others):
                    found.append(g)
        return tuple(sort_faces(found))

    def collapse(self, face: FaceLike) -> "SimplicialComplex":
        """Elementary collapse at the free face ``face``."""
        g = _as_mask(face)
        if g not in self.free_faces:
            raise InvalidComplexError(f"{format_face(g)} is not a free face")
        owner = next(f for f in self._facets if is_subset(g, f))
        remaining = [f for f in self._facets if f != owner]
        remaining.extend(owner & ~singleton(v) for v in vertices_of(g))
        return from_facets(self._n, remaining)

    def alexander_dual(self) -> "SimplicialComplex":
        nonfaces = self.minimal_nonfaces
        if not nonfaces:
            raise VoidComplexError("the Alexander dual of the full simplex is void")
        return from_facets(self._n, [complement(m, self._n) for m in nonfaces])

    def relabel(self, mapping: Sequence[int]) -> "SimplicialComplex":
        """Apply ``v -> mapping[v - 1]``; ``mapping`` must be a permutation of [n]."""
        if sorted(mapping) != list(range(1, self._n + 1)):
            raise InvalidComplexError(f"{list(mapping)} is not a permutation of [{self._n}]")
        return from_facets(
            self._n,
            [vertex_set(mapping[v - 1] for v in vertices_of(f)) for f in self._facets],
        )

    def facet_lists(self) -> List[List[int]]:
        return [list(vertices_of(f)) for f in self._facets]

    def sort_key(self) -> Tuple[int, Tuple[VertexSet, ...]]:
        return (self._n, self._facets)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._n == other._n and self._facets == other._facets

    def __hash__(self) -> int:
        return hash((self._n, self._facets))

    def __lt__(self, other: "SimplicialComplex") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self._n}, facets={self.facet_lists()})"

    def __str__(self) -> str:
        return f"[{self._n}] " + " ".join(format_face(f) for f in self._facets)


def from_facets(n: int, candidate_faces: Iterable[FaceLike]) -> SimplicialComplex:
    """The complex generated by ``candidate_faces``: maximal candidates become facets."""
    if not 0 <= n <= MAX_VERTICES:
        raise InvalidComplexError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    masks = {_as_mask(face) for face in candidate_faces}
    if not masks:
        raise InvalidComplexError("at least one face is required")
    universe = full_set(n)
    for mask in masks:
        if mask < 0:
            raise InvalidComplexError(f"negative vertex mask {mask}")
        if not is_subset(mask, universe):
            bad = vertices_of(mask & ~universe)[0]
            raise InvalidComplexError(f"vertex {bad} outside [1, {n}]")
    maximal: List[VertexSet] = []
    for mask in sorted(masks, key=lambda m: (-m.bit_count(), m)):
        if not any(is_subset(mask, kept) for kept in maximal):
            maximal.append(mask)
    return SimplicialComplex(n, sort_faces(maximal))


def full_simplex(n: int) -> SimplicialComplex:
    return from_facets(n, [full_set(n)])


def boundary_of_simplex(n: int) -> SimplicialComplex:
    """All (n-1)-subsets of [n]; for n = 1 this is the complex {∅}."""
    if n < 1:
        raise InvalidComplexError("the boundary of the empty simplex is void")
    return from_facets(n, [complement(singleton(v), n) for v in range(1, n + 1)])


def skeleton_faces(n: int, q: int) -> List[VertexSet]:
    """All q-subsets of [n] in canonical order."""
    bits = [singleton(v) for v in range(1, n + 1)]
    return sorted(sum(combo) for combo in combinations(bits, q))