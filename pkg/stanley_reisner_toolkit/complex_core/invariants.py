import math
from typing import List, Union

from pydantic import BaseModel, ConfigDict, field_serializer

from stanley_reisner_toolkit.complex_core.simplicial_complex import SimplicialComplex

Degree = Union[int, float]


class InvariantSummary(BaseModel):
    """Combinatorial invariants of k[Δ]; ``indeg``/``rt`` are ``inf`` when I_Δ = 0."""

    model_config = ConfigDict(frozen=True)

    n: int
    num_facets: int
    dim_ring: int
    codim: int
    multiplicity: int
    f_vector: List[int]
    is_pure: bool
    indeg: Degree
    rt: Degree
    mu: int
    bight: int
    vertex_full: bool

    @field_serializer("indeg", "rt")
    def _serialize_degree(self, value: Degree):
        return "inf" if math.isinf(value) else int(value)


def invariants(cx: SimplicialComplex) -> InvariantSummary:
    return InvariantSummary(
        n=cx.n,
        num_facets=len(cx.facets),
        dim_ring=cx.dim_ring,
        codim=cx.codim,
        multiplicity=cx.multiplicity,
        f_vector=list(cx.f_vector),
        is_pure=cx.is_pure,
        indeg=cx.indeg,
        rt=cx.rt,
        mu=cx.mu,
        bight=cx.bight,
        vertex_full=cx.vertex_full,
    )


def format_degree(value: Degree) -> str:
    return "inf" if math.isinf(value) else str(int(value))
