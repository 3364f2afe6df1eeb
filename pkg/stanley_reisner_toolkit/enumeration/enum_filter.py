import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from stanley_reisner_toolkit.complex_core.simplicial_complex import SimplicialComplex

MAX_ENUM_VERTICES = 10


class EnumFilter(BaseModel):
    """Which complexes on [n] an enumeration should produce.

    Every bound is inclusive. ``e_min``/``e_max`` bound the multiplicity (the
    number of facets of top cardinality), ``mu_min`` the number of minimal
    nonfaces. ``indeg_exact`` switches the enumerator to the forced-skeleton
    search, which is far smaller than the antichain search.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0, le=MAX_ENUM_VERTICES)
    require_vertex_full: bool = True
    dim_ring: Optional[int] = Field(default=None, ge=0)
    pure: Optional[bool] = None
    indeg_exact: Optional[int] = Field(default=None, ge=1)
    rt_max: Optional[int] = Field(default=None, ge=1)
    rt_exact: Optional[int] = Field(default=None, ge=1)
    e_min: Optional[int] = Field(default=None, ge=1)
    e_max: Optional[int] = Field(default=None, ge=1)
    mu_min: Optional[int] = Field(default=None, ge=0)
    up_to_iso: bool = False

    @model_validator(mode="after")
    def _check_consistency(self) -> "EnumFilter":
        if self.dim_ring is not None and self.dim_ring > self.n:
            raise ValueError(f"dim_ring={self.dim_ring} exceeds n={self.n}")
        if self.e_min is not None and self.e_max is not None and self.e_min > self.e_max:
            raise ValueError(f"e_min={self.e_min} exceeds e_max={self.e_max}")
        if self.rt_exact is not None and self.rt_max is not None and self.rt_exact > self.rt_max:
            raise ValueError(f"rt_exact={self.rt_exact} exceeds rt_max={self.rt_max}")
        if self.indeg_exact is not None:
            if self.indeg_exact > self.n:
                raise ValueError(f"indeg_exact={self.indeg_exact} exceeds n={self.n}")
            if self.dim_ring is not None and self.indeg_exact > self.dim_ring + 1:
                raise ValueError("indeg can be at most dim_ring + 1")
            if self.rt_exact is not None and self.rt_exact < self.indeg_exact:
                raise ValueError("rt_exact is below indeg_exact")
            if self.rt_max is not None and self.rt_max < self.indeg_exact:
                raise ValueError("rt_max is below indeg_exact")
        return self

    @property
    def rt_bound(self) -> Optional[int]:
        """Tightest upper bound on rt implied by the filter."""
        bounds = [b for b in (self.rt_max, self.rt_exact) if b is not None]
        return min(bounds) if bounds else None

    def admits(self, cx: SimplicialComplex) -> bool:
        if cx.n != self.n:
            return False
        if self.require_vertex_full and not cx.vertex_full:
            return False
        if self.dim_ring is not None and cx.dim_ring != self.dim_ring:
            return False
        if self.pure is not None and cx.is_pure != self.pure:
            return False
        e = cx.multiplicity
        if self.e_min is not None and e < self.e_min:
            return False
        if self.e_max is not None and e > self.e_max:
            return False
        if self.indeg_exact is not None and cx.indeg != self.indeg_exact:
            return False
        rt = cx.rt
        if self.rt_exact is not None and rt != self.rt_exact:
            return False
        if self.rt_max is not None and (math.isinf(rt) or rt > self.rt_max):
            return False
        if self.mu_min is not None and cx.mu < self.mu_min:
            return False
        return True

    def describe(self) -> str:
        parts = [f"n={self.n}"]
        for name in ("dim_ring", "pure", "indeg_exact", "rt_max", "rt_exact", "e_min", "e_max", "mu_min"):
            value = getattr(self, name)
            if value is not None:
                parts.append(f"{name}={value}")
        if not self.require_vertex_full:
            parts.append("vertex_full=any")
        if self.up_to_iso:
            parts.append("up_to_iso")
        return " ".join(parts)
