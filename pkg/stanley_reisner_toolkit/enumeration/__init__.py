from .enum_filter import MAX_ENUM_VERTICES, EnumFilter
from .enumerator import (
    MAX_ANTICHAIN_VERTICES,
    count_complexes,
    enumerate_complexes,
    orbit_size,
)
from .sampler import sample_complexes
from .turan import (
    TuranRecord,
    empirical_f,
    f_from_turan,
    mantel_f,
    multiplicities_with_rt_d,
    turan,
)
