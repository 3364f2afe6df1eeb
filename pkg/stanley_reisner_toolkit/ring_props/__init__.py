from .ring_status import (
    ReisnerWitness,
    RingStatus,
    degree_d_height_at_least_two,
    eagon_reiner_agrees,
    graph_is_connected,
    is_buchsbaum,
    is_cm,
    is_cohen_macaulay,
    is_hypersurface,
    reisner_witness,
    ring_status,
)
