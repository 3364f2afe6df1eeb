from typing import List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, field_serializer

from stanley_reisner_toolkit.betti_resolution import has_linear_resolution
from stanley_reisner_toolkit.complex_core.simplicial_complex import SimplicialComplex
from stanley_reisner_toolkit.complex_core.vertex_set import (
    VertexSet,
    face_key,
    full_set,
    subsets_of_size,
    vertices_of,
)
from stanley_reisner_toolkit.field_linalg import FieldSpec
from stanley_reisner_toolkit.homology import reduced_betti_numbers
from stanley_reisner_toolkit.utils.errors import ConsistencyError


class ReisnerWitness(BaseModel):
    """A face G whose link has H̃_index(link G) ≠ 0 below its top dimension."""

    model_config = ConfigDict(frozen=True)

    face: List[int]
    index: int


class RingStatus(BaseModel):
    model_config = ConfigDict(frozen=True)

    field: FieldSpec
    is_cm: bool
    is_buchsbaum: bool
    is_hypersurface: bool
    failing_witness: Optional[ReisnerWitness] = None
    d2_connected: Optional[bool] = None

    @field_serializer("field")
    def _serialize_field(self, field: FieldSpec) -> str:
        return field.label


def _link_failure(cx: SimplicialComplex, face: VertexSet, field: FieldSpec) -> Optional[int]:
    link = cx.link(face)
    d_link = link.dim_ring
    if d_link <= 1:
        return None
    betti = reduced_betti_numbers(link, field)
    for k in range(d_link):
        if betti[k]:
            return k - 1
    return None


def reisner_witness(
    cx: SimplicialComplex, field: FieldSpec, skip_empty: bool = False
) -> Optional[Tuple[VertexSet, int]]:
    """Canonically smallest face violating Reisner's criterion, or None."""
    for face in sorted(cx.face_set, key=face_key):
        if skip_empty and face == 0:
            continue
        index = _link_failure(cx, face, field)
        if index is not None:
            return face, index
    return None


def graph_is_connected(cx: SimplicialComplex) -> bool:
    """Connectivity of the 1-skeleton on the vertices of Δ."""
    graph = nx.Graph()
    graph.add_nodes_from(vertices_of(cx.support))
    graph.add_edges_from(vertices_of(edge) for edge in cx.faces(2))
    return graph.number_of_nodes() > 0 and nx.is_connected(graph)


def is_cm(cx: SimplicialComplex, field: FieldSpec) -> bool:
    if not cx.is_pure:
        return False
    return reisner_witness(cx, field) is None


def is_buchsbaum(cx: SimplicialComplex, field: FieldSpec) -> bool:
    """Pure, and every vertex link of Δ is Cohen-Macaulay."""
    if not cx.is_pure:
        return False
    return reisner_witness(cx, field, skip_empty=True) is None


def is_hypersurface(cx: SimplicialComplex) -> bool:
    return cx.mu == 1


def degree_d_height_at_least_two(cx: SimplicialComplex) -> bool:
    """No vertex lies in every missing d-subset of [n] (d = dim k[Δ])."""
    d = cx.dim_ring
    common = full_set(cx.n)
    missing = 0
    for candidate in subsets_of_size(full_set(cx.n), d):
        if candidate not in cx.face_set:
            common &= candidate
            missing += 1
    return missing > 0 and common == 0


def ring_status(cx: SimplicialComplex, field: FieldSpec) -> RingStatus:
    found = reisner_witness(cx, field)
    cm = found is None and cx.is_pure
    if cm:
        buchsbaum = True
    else:
        buchsbaum = is_buchsbaum(cx, field)
    witness = None
    if found is not None:
        witness = ReisnerWitness(face=list(vertices_of(found[0])), index=found[1])
    connected = None
    if cx.dim_ring == 2:
        connected = graph_is_connected(cx)
        if connected != cm:
            raise ConsistencyError(
                f"Reisner says CM={cm} but the graph connectivity is {connected} for {cx!r}"
            )
    return RingStatus(
        field=field,
        is_cm=cm,
        is_buchsbaum=buchsbaum,
        is_hypersurface=is_hypersurface(cx),
        failing_witness=witness,
        d2_connected=connected,
    )


def is_cohen_macaulay(cx: SimplicialComplex, field: FieldSpec) -> RingStatus:
    return ring_status(cx, field)


def eagon_reiner_agrees(cx: SimplicialComplex, field: FieldSpec) -> bool:
    """Reisner CM status of Δ equals linearity of the resolution of Δ*."""
    if cx.is_full_simplex:
        return True
    linear, _ = has_linear_resolution(cx.alexander_dual(), field)
    return is_cm(cx, field) == linear
