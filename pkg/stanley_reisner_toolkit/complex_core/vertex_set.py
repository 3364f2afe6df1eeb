"""Faces and vertex subsets as integer bit masks.

Vertex ``i`` (1-based) lives at bit ``i - 1``. A ``VertexSet`` is a plain
``int`` so that union, intersection and subset tests are single machine
operations and sets hash and sort for free.
"""
from itertools import combinations
from typing import Iterable, Iterator, List, Tuple

VertexSet = int

MAX_VERTICES = 64
EMPTY: VertexSet = 0


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def singleton(v: int) -> VertexSet:
    return 1 << (v - 1)


def full_set(n: int) -> VertexSet:
    return (1 << n) - 1


def cardinality(mask: VertexSet) -> int:
    return mask.bit_count()


def vertices_of(mask: VertexSet) -> Tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def complement(mask: VertexSet, n: int) -> VertexSet:
    return full_set(n) & ~mask


def is_subset(a: VertexSet, b: VertexSet) -> bool:
    return a & ~b == 0


def top_vertex(mask: VertexSet) -> int:
    """Largest vertex of ``mask`` (0 for the empty set)."""
    return mask.bit_length()


def face_key(mask: VertexSet) -> Tuple[int, int]:
    """Canonical order: cardinality first, then numeric value of the mask."""
    return (mask.bit_count(), mask)


def sort_faces(masks: Iterable[VertexSet]) -> List[VertexSet]:
    return sorted(masks, key=face_key)


def subsets_of_size(universe: VertexSet, q: int) -> Iterator[VertexSet]:
    bits = [1 << (v - 1) for v in vertices_of(universe)]
    for combo in combinations(bits, q):
        yield sum(combo)


def all_subsets(universe: VertexSet) -> Iterator[VertexSet]:
    """Every submask of ``universe``, the empty set included."""
    sub = universe
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & universe


def format_face(mask: VertexSet) -> str:
    if mask == 0:
        return "{}"
    return "{" + ",".join(str(v) for v in vertices_of(mask)) + "}"
