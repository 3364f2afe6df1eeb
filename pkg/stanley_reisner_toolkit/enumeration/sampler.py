from typing import List, Optional

import numpy as np

from stanley_reisner_toolkit.complex_core.simplicial_complex import SimplicialComplex, from_facets
from stanley_reisner_toolkit.complex_core.vertex_set import full_set, singleton, vertices_of
from stanley_reisner_toolkit.utils.errors import InvalidComplexError

MAX_SAMPLE_VERTICES = 62


def sample_complexes(
    n: int,
    count: int,
    seed: int = 0,
    vertex_full: bool = True,
    max_facets: Optional[int] = None,
) -> List[SimplicialComplex]:
    """``count`` complexes generated by uniformly drawn nonempty subsets of [n].

    Each complex draws between 1 and ``max_facets`` (default n) generating
    sets; with ``vertex_full`` the vertices nobody drew are added as
    isolated points. Same seed, same list.
    """
    if not 1 <= n <= MAX_SAMPLE_VERTICES:
        raise InvalidComplexError(f"sampler supports 1 <= n <= {MAX_SAMPLE_VERTICES}, got {n}")
    rng = np.random.default_rng(seed)
    top = max_facets if max_facets is not None else n
    out = []
    for _ in range(count):
        k = int(rng.integers(1, top + 1))
        masks = [int(m) for m in rng.integers(1, 1 << n, size=k, dtype=np.int64)]
        if vertex_full:
            union = 0
            for m in masks:
                union |= m
            masks.extend(singleton(v) for v in vertices_of(full_set(n) & ~union))
        out.append(from_facets(n, masks))
    return out
