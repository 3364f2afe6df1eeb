from .examples import EXAMPLE_BUILDERS, PURE_PAIRS, build_example
from .registry import (
    ClaimRecord,
    SweepOptions,
    SweepRange,
    claim_ids,
    claim_registry,
    get_claim,
)
from .verifier import VerificationReport, recheck_counterexample, verify
