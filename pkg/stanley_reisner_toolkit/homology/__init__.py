from .chain_complex import (
    HomologyProfile,
    boundary_matrix,
    homology_cache_clear,
    reduced_betti_numbers,
    reduced_homology,
    top_homology_vanishes,
)
