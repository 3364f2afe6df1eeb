"""The claim registry.

A claim is a hypothesis region (``sweep``), a per-complex check
(``violates``) and, for the existence and sharpness statements, a
``finish`` step that looks at the whole sweep at once.
"""
import math
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from stanley_reisner_toolkit.claims import checks
from stanley_reisner_toolkit.claims.examples import (
    PURE_DUAL_GRAPHS,
    PURE_PAIRS,
    buchsbaum_complex,
    notlin,
    omake_ex,
    pure_dual_complex,
    pure_dual_graph,
    pure_dual_printed,
    rt_jump,
    thm_sample,
)
from stanley_reisner_toolkit.complex_core.isomorphism import is_isomorphic
from stanley_reisner_toolkit.complex_core.simplicial_complex import SimplicialComplex
from stanley_reisner_toolkit.enumeration import (
    MAX_ENUM_VERTICES,
    EnumFilter,
    empirical_f,
    enumerate_complexes,
    f_from_turan,
    mantel_f,
    multiplicities_with_rt_d,
    sample_complexes,
)
from stanley_reisner_toolkit.field_linalg import VERIFY_FIELDS, FieldSpec
from stanley_reisner_toolkit.ring_props import is_buchsbaum, is_hypersurface
from stanley_reisner_toolkit.utils.errors import UnknownClaimError
from stanley_reisner_toolkit.utils.guards import DEFAULT_MAX_TURAN_SETS

Problem = Tuple[str, Optional[SimplicialComplex]]
FinishResult = Tuple[List[Problem], List[str]]


class SweepRange(BaseModel):
    """Inclusive vertex and dimension ranges of a sweep, plus random sampling knobs."""

    model_config = ConfigDict(frozen=True)

    n_min: int = Field(default=2, ge=1)
    n_max: int = Field(default=5, ge=1)
    d_min: int = Field(default=1, ge=0)
    d_max: int = Field(default=5, ge=0)
    samples: int = Field(default=0, ge=0)
    sample_sizes: List[int] = Field(default_factory=list)
    seed: int = 0

    @model_validator(mode="after")
    def _check_bounds(self) -> "SweepRange":
        if self.n_min > self.n_max:
            raise ValueError(f"n_min={self.n_min} exceeds n_max={self.n_max}")
        if self.d_min > self.d_max:
            raise ValueError(f"d_min={self.d_min} exceeds d_max={self.d_max}")
        return self

    def vertex_counts(self) -> range:
        return range(self.n_min, self.n_max + 1)

    def dimensions(self, low: int = 0, high: Optional[int] = None) -> range:
        top = self.d_max if high is None else min(self.d_max, high)
        return range(max(self.d_min, low), top + 1)


@dataclass(frozen=True)
class SweepOptions:
    jobs: int = 1
    max_families: Optional[int] = None
    progress: bool = False
    max_turan_sets: int = DEFAULT_MAX_TURAN_SETS


@dataclass(frozen=True)
class ClaimRecord:
    claim_id: str
    group: str
    summary: str
    anchor_label: str
    anchor: str
    default_range: SweepRange
    sweep: Callable[[SweepRange, SweepOptions], Iterator[SimplicialComplex]]
    violates: Callable[[SimplicialComplex, FieldSpec], Optional[str]]
    # empty: the claim does not depend on the field
    fields: Tuple[FieldSpec, ...] = ()
    finish: Optional[Callable[[List[SimplicialComplex], SweepRange, FieldSpec, SweepOptions], FinishResult]] = None
    sweep_notes: str = ""

    @property
    def field_free(self) -> bool:
        return not self.fields


def _enum(opts: SweepOptions, **kwargs) -> Iterator[SimplicialComplex]:
    flt = EnumFilter(**kwargs)
    return enumerate_complexes(flt, jobs=opts.jobs, max_families=opts.max_families, progress=opts.progress)


def _bounded(rng: SweepRange) -> range:
    return range(rng.n_min, min(rng.n_max, MAX_ENUM_VERTICES) + 1)


def _by_multiplicity_bound(slack: Callable[[int], int], pure: Optional[bool] = None):
    """All complexes with e >= C(n,c) - slack(c), up to isomorphism."""

    def sweep(rng: SweepRange, opts: SweepOptions) -> Iterator[SimplicialComplex]:
        for n in _bounded(rng):
            for d in rng.dimensions(2, n):
                c = n - d
                e_min = max(1, math.comb(n, c) - slack(c))
                yield from _enum(opts, n=n, dim_ring=d, pure=pure, e_min=e_min, up_to_iso=True)

    return sweep


def _all_complexes(rng: SweepRange, opts: SweepOptions) -> Iterator[SimplicialComplex]:
    for n in _bounded(rng):
        for d in rng.dimensions(1, n):
            yield from _enum(opts, n=n, dim_ring=d, up_to_iso=True)


def _proper_complexes(rng: SweepRange, opts: SweepOptions) -> Iterator[SimplicialComplex]:
    for n in _bounded(rng):
        for d in rng.dimensions(1, n - 1):
            yield from _enum(opts, n=n, dim_ring=d, up_to_iso=True)


def _codim_one(rng: SweepRange, opts: SweepOptions) -> Iterator[SimplicialComplex]:
    for n in _bounded(rng):
        d = n - 1
        if rng.d_min <= d <= rng.d_max:
            yield from _enum(opts, n=n, dim_ring=d, e_min=max(1, d), up_to_iso=True)


def _eagon_reiner(rng: SweepRange, opts: SweepOptions) -> Iterator[SimplicialComplex]:
    yield from _all_complexes(rng, opts)
    for n in rng.sample_sizes:
        yield from sample_complexes(n, rng.samples, seed=rng.seed + n)


def _forced(**extra):
    """Complexes with indeg = d (forced (d-1)-skeleton), filtered further by ``extra``."""

    def sweep(rng: SweepRange, opts: SweepOptions) -> Iterator[SimplicialComplex]:
        for n in _bounded(rng):
            for d in rng.dimensions(2, n - 1):
                kwargs = {key: value(n, d) if callable(value) else value for key, value in extra.items()}
                yield from _enum(opts, n=n, dim_ring=d, indeg_exact=d, up_to_iso=True, **kwargs)

    return sweep


def _low_relation_type(rng: SweepRange, opts: SweepOptions) -> Iterator[SimplicialComplex]:
    for n in _bounded(rng):
        for d in rng.dimensions(2, n):
            yield from _enum(opts, n=n, dim_ring=d, rt_max=d, up_to_iso=True)


def _many_generators(rng: SweepRange, opts: SweepOptions) -> Iterator[SimplicialComplex]:
    for n in _bounded(rng):
        for d in rng.dimensions(3, n):
            mu_min = max(0, math.comb(n, d - 1) - 2 * d + 3)
            yield from _enum(
                opts, n=n, dim_ring=d, indeg_exact=d - 1, rt_exact=d - 1, mu_min=mu_min, up_to_iso=True,
            )


def _omake_family(rng: SweepRange, opts: SweepOptions) -> Iterator[SimplicialComplex]:
    for d in rng.dimensions(3):
        for n in rng.vertex_counts():
            if n < d + 1:
                continue
            for rho in range(d - 2):
                yield omake_ex(d, rho, n)


def _bbm_region(rng: SweepRange, opts: SweepOptions) -> Iterator[SimplicialComplex]:
    for n in _bounded(rng):
        for d in rng.dimensions(3, n - 1):
            c = n - d
            e_min = max(1, math.comb(n, c) - 2 * c)
            yield from _enum(
                opts, n=n, dim_ring=d, pure=True, indeg_exact=d, e_min=e_min, up_to_iso=True,
            )


def _sample_family(rng: SweepRange, opts: SweepOptions) -> Iterator[SimplicialComplex]:
    for n in rng.vertex_counts():
        for d in rng.dimensions(2, n - 2):
            c = n - d
            for e in range(1, c * d + 1):
                yield thm_sample(c, d, e)


def _notlin_family(rng: SweepRange, opts: SweepOptions) -> Iterator[SimplicialComplex]:
    for d in rng.dimensions(2):
        yield notlin(d)


def _rt_family(rng: SweepRange, opts: SweepOptions) -> Iterator[SimplicialComplex]:
    for n in rng.vertex_counts():
        for d in rng.dimensions(2, n - 2):
            for e in range(d + 1, math.comb(n, d)):
                yield rt_jump(n, d, e)


def _turan_vertex_limit(d: int) -> int:
    return 8 if d == 2 else d + 3


def _turan_scan(rng: SweepRange, opts: SweepOptions) -> Iterator[SimplicialComplex]:
    for d in rng.dimensions(2):
        for n in rng.vertex_counts():
            if d + 2 <= n <= min(_turan_vertex_limit(d), 6):
                yield from _enum(opts, n=n, dim_ring=d, indeg_exact=d, up_to_iso=True)


def _pure_vertex_limit(d: int) -> int:
    # at d = 2 the pair list holds but n = d + 2 is not forced
    return d + 5 if d == 2 else d + 3


def _pure_small(low_offset: int):
    def sweep(rng: SweepRange, opts: SweepOptions) -> Iterator[SimplicialComplex]:
        for d in rng.dimensions(2):
            for n in _bounded(rng):
                if d + low_offset <= n <= _pure_vertex_limit(d):
                    yield from _enum(
                        opts, n=n, dim_ring=d, pure=True, indeg_exact=d, e_max=2 * d - 1,
                    )

    return sweep


def _pure_vertex_region(rng: SweepRange, opts: SweepOptions) -> Iterator[SimplicialComplex]:
    for n in _bounded(rng):
        for d in rng.dimensions(3, n - 1):
            yield from _enum(opts, n=n, dim_ring=d, pure=True, indeg_exact=d, up_to_iso=True)


def _pure_dual_graphs(rng: SweepRange, opts: SweepOptions) -> Iterator[SimplicialComplex]:
    for n, edges in sorted(PURE_DUAL_GRAPHS):
        if rng.n_min <= n <= rng.n_max:
            yield pure_dual_graph(n, edges)


def _finish_ad_main1(instances, rng: SweepRange, fld: FieldSpec, opts: SweepOptions) -> FinishResult:
    problems: List[Problem] = []
    notes = []
    for d in rng.dimensions(2):
        n = d + 2
        if n > rng.n_max:
            continue
        witness = rt_jump(n, d, d + 1)
        detail = checks.rt_jump_witness_violation(witness, fld)
        if detail:
            problems.append((f"sharpness at e = d + 1: {detail}", witness))
        else:
            notes.append(f"e = d + 1 = {d + 1} at n = {n}: rt = d + 1 and not {d}-linear")
    return problems, notes


def _finish_ad_main2(instances, rng: SweepRange, fld: FieldSpec, opts: SweepOptions) -> FinishResult:
    problems: List[Problem] = []
    notes = []
    for d in rng.dimensions(2):
        witness = notlin(d)
        detail = checks.not_linear_witness_violation(witness, fld)
        if detail:
            problems.append((f"sharpness at e = 2d: {detail}", witness))
        else:
            notes.append(f"e = 2d = {2 * d}: indeg = rt = {d} and not {d}-linear")
    return problems, notes


def _finish_key(instances, rng: SweepRange, fld: FieldSpec, opts: SweepOptions) -> FinishResult:
    both = sum(1 for cx in instances if all(checks.regularity_sides(cx, fld)))
    return [], [f"reg <= d - 1 and top homology vanishing agree on all instances; {both} satisfy both"]


def _finish_turan(instances, rng: SweepRange, fld: FieldSpec, opts: SweepOptions) -> FinishResult:
    problems: List[Problem] = []
    notes = []
    for d in rng.dimensions(2):
        for n in rng.vertex_counts():
            if not d + 2 <= n <= _turan_vertex_limit(d):
                continue
            f_value = f_from_turan(n, d, opts.max_turan_sets)
            observed = empirical_f(n, d, opts.max_families)
            if observed != f_value:
                problems.append((f"n={n} d={d}: empirical f = {observed} but T(n,d+1,d) + 1 = {f_value}", None))
            if d == 2 and f_value != mantel_f(n):
                problems.append((f"n={n}: f(n,2) = {f_value} differs from floor(n^2/4) + 1", None))
            c = n - d
            if f_value < c * d + 1:
                problems.append((f"n={n} d={d}: f = {f_value} below cd + 1 = {c * d + 1}", None))
            seen = multiplicities_with_rt_d(n, d, opts.max_families)
            missing = sorted(set(range(1, f_value)) - seen)
            if missing:
                problems.append((f"n={n} d={d}: no rt = d complex with e in {missing}", None))
            notes.append(f"f({n},{d}) = {f_value}")
    return problems, notes


def _finish_pure(instances, rng: SweepRange, fld: FieldSpec, opts: SweepOptions) -> FinishResult:
    problems: List[Problem] = []
    notes = []
    witnessed = {(cx.dim_ring, cx.multiplicity) for cx in instances if cx.n == cx.dim_ring + 2}
    for d, e in PURE_PAIRS:
        if d in rng.dimensions(2) and rng.n_min <= d + 2 <= rng.n_max and (d, e) not in witnessed:
            problems.append((f"no witness for the pair ({d}, {e}) at n = {d + 2}", None))
    found = sorted(witnessed)
    notes.append(f"pairs witnessed at n = d + 2: {found}")
    other = sorted({(cx.n, cx.multiplicity) for cx in instances if cx.dim_ring == 2 and cx.n != 4})
    if other:
        notes.append(f"d = 2 witnesses at n > 4 (n, e): {other}")
    return problems, notes


def _finish_bbm_pure(instances, rng: SweepRange, fld: FieldSpec, opts: SweepOptions) -> FinishResult:
    problems: List[Problem] = []
    notes = []
    target = buchsbaum_complex()
    if is_hypersurface(target) or not is_buchsbaum(target, fld):
        problems.append((f"the listed complex is not a Buchsbaum non-hypersurface over {fld.label}", target))
    if 3 in rng.dimensions(3) and rng.n_min <= 5 <= rng.n_max:
        hits = [
            cx for cx in instances
            if cx.dim_ring == 3 and not is_hypersurface(cx) and is_buchsbaum(cx, fld)
        ]
        if not hits:
            problems.append(("the sweep found no Buchsbaum non-hypersurface at d = 3", None))
        else:
            notes.append(f"{len(hits)} labeled Buchsbaum non-hypersurfaces at d = 3, all isomorphic to the listed complex")
    t35 = pure_dual_complex(3, 5)
    notes.append(
        f"T_{{3,5}} isomorphic to the listed complex: {is_isomorphic(t35, target)}; "
        f"T_{{3,5}} Buchsbaum over {fld.label}: {is_buchsbaum(t35, fld)}"
    )
    return problems, notes


def _finish_pure_dual(instances, rng: SweepRange, fld: FieldSpec, opts: SweepOptions) -> FinishResult:
    printed = pure_dual_printed(4, 6)
    return [], [
        f"the printed T_{{4,6}} family has indeg {printed.indeg}; "
        f"the dual of S_{{6,9}} is {pure_dual_complex(4, 6)}"
    ]


_REGISTRY: Sequence[ClaimRecord] = (
    ClaimRecord(
        claim_id="thm-main1",
        group="multiplicity bounds",
        summary="d >= 2 and e >= C(n,c) - c imply Cohen-Macaulay",
        anchor_label="Thm. Main1",
        anchor=r"then $A$ is Cohen--Macaulay",
        default_range=SweepRange(n_min=2, n_max=6, d_min=2, d_max=6),
        sweep=_by_multiplicity_bound(lambda c: c),
        violates=checks.large_multiplicity_cm_violation,
        fields=VERIFY_FIELDS,
    ),
    ClaimRecord(
        claim_id="lem-indeg",
        group="multiplicity bounds",
        summary="e >= C(n,c) - c implies indeg >= d",
        anchor_label="Lemma Indeg",
        anchor=r"then $\mathrm{indeg}\, A \ge d$",
        default_range=SweepRange(n_min=2, n_max=6, d_min=2, d_max=6),
        sweep=_by_multiplicity_bound(lambda c: c),
        violates=checks.large_multiplicity_indeg_violation,
    ),
    ClaimRecord(
        claim_id="lem-indeghigh",
        group="multiplicity bounds",
        summary="indeg = d+1, e = C(n,d), I generated by all (d+1)-sets and (d+1)-linearity are equivalent",
        anchor_label="Lemma IndegHigh",
        anchor=r"$A$ has $(d+1)$-linear resolution",
        default_range=SweepRange(n_min=3, n_max=6, d_min=2, d_max=5),
        sweep=_proper_complexes,
        violates=checks.top_degree_equivalence_violation,
        fields=VERIFY_FIELDS,
    ),
    ClaimRecord(
        claim_id="lem-hyper",
        group="multiplicity bounds",
        summary="codimension one with e >= d is a hypersurface",
        anchor_label="Lemma Hyper",
        anchor=r"then $A$ is a hypersurface",
        default_range=SweepRange(n_min=3, n_max=6, d_min=2, d_max=5),
        sweep=_codim_one,
        violates=checks.codim_one_hypersurface_violation,
    ),
    ClaimRecord(
        claim_id="prop-adual",
        group="duality",
        summary="indeg, rt, purity, dimension and multiplicity read off the Alexander dual",
        anchor_label="Prop. A-dualProp",
        anchor=r"$\mathrm{indeg}\, k[\Delta^{*}]+\dim k[\Delta] = n$",
        default_range=SweepRange(n_min=2, n_max=6, d_min=1, d_max=6),
        sweep=_all_complexes,
        violates=checks.dual_properties_violation,
    ),
    ClaimRecord(
        claim_id="thm-eagon-reiner",
        group="duality",
        summary="Cohen-Macaulay exactly when the dual's ideal has a linear resolution",
        anchor_label="Thm. Eagon–Reiner",
        anchor=r"has linear resolution",
        default_range=SweepRange(n_min=2, n_max=6, d_min=1, d_max=6, samples=2000, sample_sizes=[7, 8]),
        sweep=_eagon_reiner,
        violates=checks.eagon_reiner_violation,
        fields=VERIFY_FIELDS,
        sweep_notes="plus seeded random complexes at the sample sizes",
    ),
    ClaimRecord(
        claim_id="thm-ad-main1",
        group="duality",
        summary="indeg = d and e <= d imply d-linear resolution and rt = d",
        anchor_label="Thm. AD-Main1",
        anchor=r"then $A$ has $d$-linear resolution",
        default_range=SweepRange(n_min=4, n_max=7, d_min=2, d_max=4),
        sweep=_forced(e_max=lambda n, d: d),
        violates=checks.small_multiplicity_linear_violation,
        fields=VERIFY_FIELDS,
        finish=_finish_ad_main1,
    ),
    ClaimRecord(
        claim_id="thm-main2",
        group="second bound",
        summary="pure with e >= C(n,c) - 2c + 1 implies Cohen-Macaulay",
        anchor_label="Thm. Main2",
        anchor=r"If $e(A) \ge \sbinom{n}{c} - 2c+1$",
        default_range=SweepRange(n_min=2, n_max=6, d_min=2, d_max=6),
        sweep=_by_multiplicity_bound(lambda c: 2 * c - 1, pure=True),
        violates=checks.pure_second_bound_cm_violation,
        fields=VERIFY_FIELDS,
    ),
    ClaimRecord(
        claim_id="lem-indeg2",
        group="second bound",
        summary="e >= C(n,c) - 2c + 1 implies indeg >= d - 1",
        anchor_label="Lemma Indeg2",
        anchor=r"then $\mathrm{indeg}\, k[\Delta] \ge d-1$",
        default_range=SweepRange(n_min=2, n_max=6, d_min=2, d_max=6),
        sweep=_by_multiplicity_bound(lambda c: 2 * c - 1),
        violates=checks.second_bound_indeg_violation,
    ),
    ClaimRecord(
        claim_id="thm-ad-main2",
        group="second bound",
        summary="indeg = rt = d and e <= 2d - 1 imply d-linear resolution and a(A) < 0",
        anchor_label="Thm. AD-Main2",
        anchor=r"In particular, $a(A)< 0$",
        default_range=SweepRange(n_min=4, n_max=7, d_min=2, d_max=4),
        sweep=_forced(rt_exact=lambda n, d: d, e_max=lambda n, d: 2 * d - 1),
        violates=checks.equigenerated_small_multiplicity_violation,
        fields=VERIFY_FIELDS,
        finish=_finish_ad_main2,
    ),
    ClaimRecord(
        claim_id="thm-key",
        group="second bound",
        summary="rt <= d and e <= 2d - 1 give reg <= d - 1, equivalently vanishing top homology",
        anchor_label="Thm. Key",
        anchor=r"equivalently, $\widetilde{H}_{d-1}(\Delta) = 0$",
        default_range=SweepRange(n_min=3, n_max=5, d_min=2, d_max=4),
        sweep=_low_relation_type,
        violates=checks.low_relation_type_regularity_violation,
        fields=VERIFY_FIELDS,
        finish=_finish_key,
    ),
    ClaimRecord(
        claim_id="prop-omake",
        group="second bound",
        summary="indeg = rt = d - 1 with mu >= C(n,d-1) - 2d + 3 is (d-1)-linear with e = 1",
        anchor_label="Prop. Omake",
        anchor=r"has $(d-1)$-linear resolution with $e(A) =1$",
        default_range=SweepRange(n_min=4, n_max=6, d_min=3, d_max=4),
        sweep=_many_generators,
        violates=checks.many_generators_linear_violation,
        fields=VERIFY_FIELDS,
    ),
    ClaimRecord(
        claim_id="ex-omake",
        group="examples",
        summary="the complex spanned by [d] and rho further (d-1)-sets has many generators and a linear resolution",
        anchor_label="Example OmakeEx",
        anchor=r"satisfies the assumption of the above proposition",
        default_range=SweepRange(n_min=4, n_max=8, d_min=3, d_max=5),
        sweep=_omake_family,
        violates=checks.many_generators_example_violation,
        fields=VERIFY_FIELDS,
    ),
    ClaimRecord(
        claim_id="prop-bbm",
        group="Buchsbaum",
        summary="pure, indeg = d, e >= C(n,c) - 2c: link bound, and height >= 2 or rt = d give Buchsbaum",
        anchor_label="Prop. Bbm",
        anchor=r"then $A$ is Buchsbaum",
        default_range=SweepRange(n_min=4, n_max=6, d_min=3, d_max=4),
        sweep=_bbm_region,
        violates=checks.buchsbaum_criteria_violation,
        fields=VERIFY_FIELDS,
    ),
    ClaimRecord(
        claim_id="ex-thm-sample",
        group="examples",
        summary="the sets [d] - i + j realize every 1 <= e <= cd with indeg = rt = d",
        anchor_label="Example Thm-sample",
        anchor=r"which is a simplicial join",
        default_range=SweepRange(n_min=4, n_max=7, d_min=2, d_max=4),
        sweep=_sample_family,
        violates=checks.sample_family_violation,
        fields=VERIFY_FIELDS,
    ),
    ClaimRecord(
        claim_id="ex-notlin",
        group="examples",
        summary="e = 2d with indeg = rt = d need not be d-linear",
        anchor_label="Example Exam-notlin",
        anchor=r"does not have $d$-linear resolution",
        default_range=SweepRange(n_min=4, n_max=6, d_min=2, d_max=4),
        sweep=_notlin_family,
        violates=checks.not_linear_witness_violation,
        fields=VERIFY_FIELDS,
    ),
    ClaimRecord(
        claim_id="ex-rt",
        group="examples",
        summary="every d + 1 <= e <= C(n,d) - 1 is realized with rt = d + 1",
        anchor_label="Example Exam-rt",
        anchor=r"$\mathrm{rt}\,(k[\Delta]) = d+1$",
        default_range=SweepRange(n_min=5, n_max=6, d_min=3, d_max=3),
        sweep=_rt_family,
        violates=checks.rt_jump_witness_violation,
        fields=VERIFY_FIELDS,
    ),
    ClaimRecord(
        claim_id="rem-turan",
        group="Turán",
        summary="rt = d for e < f(n,d) is attainable, with f(n,d) = T(n,d+1,d) + 1",
        anchor_label="Remark TuranNum + Eq. (5.1)",
        anchor=r"by Turan's theorem",
        default_range=SweepRange(n_min=4, n_max=8, d_min=2, d_max=3),
        sweep=_turan_scan,
        violates=checks.relation_type_range_violation,
        finish=_finish_turan,
        sweep_notes="instances up to n = 6; the threshold f up to n = 8 at d = 2 and n = d + 3 above",
    ),
    ClaimRecord(
        claim_id="prop-pure",
        group="Buchsbaum",
        summary="pure with indeg = d and e <= 2d - 1 forces n = d + 2 and a listed (d, e)",
        anchor_label="Prop. Pure",
        anchor=r"is one of the following pairs",
        default_range=SweepRange(n_min=4, n_max=8, d_min=2, d_max=5),
        sweep=_pure_small(2),
        violates=checks.pure_pair_violation,
        finish=_finish_pure,
    ),
    ClaimRecord(
        claim_id="lem-purevertex",
        group="Buchsbaum",
        summary="a pure non-hypersurface with indeg = d has a vertex whose deletion has e >= 2",
        anchor_label="Lemma PureVertex",
        anchor=r"$e(k[\Delta_{V \setminus \{i\}}]) \ge 2$",
        default_range=SweepRange(n_min=4, n_max=6, d_min=3, d_max=4),
        sweep=_pure_vertex_region,
        violates=checks.pure_vertex_violation,
    ),
    ClaimRecord(
        claim_id="ex-puredual",
        group="examples",
        summary="the triangle-free graphs S and their pure duals T",
        anchor_label="Example PureDual",
        anchor=r"T_{2,2} = \{[13],[24]\}",
        default_range=SweepRange(n_min=4, n_max=7, d_min=2, d_max=2),
        sweep=_pure_dual_graphs,
        violates=checks.pure_dual_violation,
        fields=VERIFY_FIELDS,
        finish=_finish_pure_dual,
    ),
    ClaimRecord(
        claim_id="cor-bbm-pure",
        group="Buchsbaum",
        summary="a Buchsbaum non-hypersurface with indeg = d and e <= 2d - 1 is the listed d = 3 complex",
        anchor_label="Cor. Bbm-Pure",
        anchor=r"spanned by $\{[124],[134],[135],[235],[245]\}$",
        default_range=SweepRange(n_min=4, n_max=8, d_min=3, d_max=5),
        sweep=_pure_small(1),
        violates=checks.buchsbaum_classification_violation,
        fields=VERIFY_FIELDS,
        finish=_finish_bbm_pure,
    ),
)

_BY_ID: Dict[str, ClaimRecord] = {record.claim_id: record for record in _REGISTRY}


def claim_registry() -> List[ClaimRecord]:
    return list(_REGISTRY)


def claim_ids() -> List[str]:
    return [record.claim_id for record in _REGISTRY]


def get_claim(claim_id: str) -> ClaimRecord:
    try:
        return _BY_ID[claim_id]
    except KeyError:
        raise UnknownClaimError(claim_id, _BY_ID) from None
