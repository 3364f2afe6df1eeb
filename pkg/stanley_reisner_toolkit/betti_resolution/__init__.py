from .betti_table import BettiTable
from .hochster import (
    a_invariant_negative,
    has_linear_resolution,
    hochster_betti,
    regularity,
    regularity_by_restriction_scan,
    subset_count,
)
