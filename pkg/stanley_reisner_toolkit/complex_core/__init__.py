from .simplicial_complex import (
    SimplicialComplex,
    boundary_of_simplex,
    from_facets,
    full_simplex,
    skeleton_faces,
)
from .invariants import InvariantSummary, format_degree, invariants
from .isomorphism import (
    CanonicalLabeling,
    automorphism_count,
    canonical_form,
    canonical_labeling,
    is_isomorphic,
)
from .src_format import (
    format_json,
    format_src,
    format_src_documents,
    parse_complex_text,
    parse_inline_facets,
    parse_json,
    parse_src,
    parse_src_documents,
)
from .vertex_set import VertexSet, vertex_set, vertices_of
