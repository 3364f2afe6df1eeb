import time
from typing import Dict, List, Literal, Optional, Sequence, Union

from pydantic import BaseModel, ValidationError

from stanley_reisner_toolkit.claims.registry import (
    ClaimRecord,
    SweepOptions,
    SweepRange,
    get_claim,
)
from stanley_reisner_toolkit.complex_core.simplicial_complex import SimplicialComplex
from stanley_reisner_toolkit.complex_core.src_format import format_src, parse_src
from stanley_reisner_toolkit.field_linalg import DEFAULT_FIELD, FieldSpec
from stanley_reisner_toolkit.homology import homology_cache_clear
from stanley_reisner_toolkit.utils.errors import ConsistencyError, GuardExceededError
from stanley_reisner_toolkit.utils.guards import DEFAULT_MAX_TURAN_SETS
from stanley_reisner_toolkit.utils.schemas import ClaimResult, ClaimSummaryRow
from stanley_reisner_toolkit.utils.logger import logger

FIELD_FREE_LABEL = "any"


class VerificationReport(BaseModel):
    claim_id: str
    group: str
    ranges: SweepRange
    fields: List[str]
    instances_checked: int = 0
    result: ClaimResult
    detail: str = ""
    counterexample: Optional[str] = None
    counterexample_field: Optional[str] = None
    found_by: Optional[Literal["instance", "summary"]] = None
    notes: List[str] = []
    wall_time: float = 0.0

    def to_text(self) -> str:
        lines = [
            f"claim     {self.claim_id} ({self.group})",
            f"ranges    n={self.ranges.n_min}..{self.ranges.n_max} d={self.ranges.d_min}..{self.ranges.d_max}",
            f"fields    {', '.join(self.fields)}",
            f"instances {self.instances_checked}",
            f"result    {self.result}",
        ]
        if self.ranges.sample_sizes:
            lines.insert(2, f"samples   {self.ranges.samples} per n in {self.ranges.sample_sizes} (seed {self.ranges.seed})")
        if self.detail:
            lines.append(f"detail    {self.detail}")
        if self.counterexample_field:
            lines.append(f"field     {self.counterexample_field}")
        for note in self.notes:
            lines.append(f"note      {note}")
        lines.append(f"time      {self.wall_time:.2f}s")
        if self.counterexample:
            lines.append("counterexample:")
            lines.append(self.counterexample.rstrip("\n"))
        return "\n".join(lines) + "\n"

    def summary_row(self) -> ClaimSummaryRow:
        return ClaimSummaryRow(
            claim_id=self.claim_id,
            group=self.group,
            result=self.result,
            instances_checked=self.instances_checked,
            wall_time=self.wall_time,
        )


def _resolve_range(record: ClaimRecord, ranges: Union[None, SweepRange, Dict]) -> SweepRange:
    if ranges is None:
        return record.default_range
    if isinstance(ranges, SweepRange):
        return ranges
    merged = record.default_range.model_dump()
    merged.update({key: value for key, value in ranges.items() if value is not None})
    return SweepRange.model_validate(merged)


def _fields_for(record: ClaimRecord, fields: Optional[Sequence[FieldSpec]]) -> List[FieldSpec]:
    if record.field_free:
        return [DEFAULT_FIELD]
    return list(fields) if fields else list(record.fields)


def verify(
    claim_id: str,
    ranges: Union[None, SweepRange, Dict] = None,
    fields: Optional[Sequence[FieldSpec]] = None,
    jobs: int = 1,
    max_families: Optional[int] = None,
    max_turan_sets: int = DEFAULT_MAX_TURAN_SETS,
    progress: bool = False,
) -> VerificationReport:
    """Sweep the claim's hypothesis region and check every instance over every field.

    The sweep is enumerated once; each instance is checked over all fields
    before the next one is produced, so the first counterexample stops the run.
    """
    record = get_claim(claim_id)
    started = time.monotonic()
    try:
        rng = _resolve_range(record, ranges)
    except ValidationError as exc:
        return VerificationReport(
            claim_id=record.claim_id, group=record.group, ranges=record.default_range,
            fields=[], result="SKIPPED", detail=f"invalid sweep range: {exc.errors()[0]['msg']}",
        )
    swept = _fields_for(record, fields)
    report = VerificationReport(
        claim_id=record.claim_id,
        group=record.group,
        ranges=rng,
        fields=[FIELD_FREE_LABEL] if record.field_free else [f.label for f in swept],
        result="PASS",
    )
    opts = SweepOptions(jobs=jobs, max_families=max_families, progress=progress, max_turan_sets=max_turan_sets)
    logger.info(f"Verifying {record.claim_id} over {', '.join(report.fields)}")

    instances: List[SimplicialComplex] = []
    try:
        for cx in record.sweep(rng, opts):
            report.instances_checked += 1
            instances.append(cx)
            for fld in swept:
                detail = record.violates(cx, fld)
                if detail:
                    return _counterexample(report, started, detail, cx, fld, "instance", record)
        if record.finish is not None:
            for fld in swept:
                problems, notes = record.finish(instances, rng, fld, opts)
                report.notes.extend(notes if len(swept) == 1 else [f"[{fld.label}] {note}" for note in notes])
                if problems:
                    detail, cx = problems[0]
                    return _counterexample(report, started, detail, cx, fld, "summary", record)
    except GuardExceededError as exc:
        logger.warning(f"{record.claim_id} skipped: {exc}")
        report.result = "SKIPPED"
        report.detail = str(exc)
    except ConsistencyError as exc:
        return _counterexample(report, started, str(exc), None, swept[0], "summary", record)
    report.wall_time = time.monotonic() - started
    logger.info(f"{record.claim_id}: {report.result} after {report.instances_checked} instances")
    return report


def _counterexample(
    report: VerificationReport,
    started: float,
    detail: str,
    cx: Optional[SimplicialComplex],
    fld: FieldSpec,
    found_by: str,
    record: ClaimRecord,
) -> VerificationReport:
    serialized = format_src(cx) if cx is not None else None
    if found_by == "instance" and serialized is not None:
        _recheck_instance(record, serialized, fld, detail)
        report.notes.append("counterexample re-verified from its serialized form with a cold homology cache")
    report.result = "COUNTEREXAMPLE"
    report.detail = detail
    report.counterexample = serialized
    report.counterexample_field = FIELD_FREE_LABEL if record.field_free else fld.label
    report.found_by = found_by
    report.wall_time = time.monotonic() - started
    logger.warning(f"{record.claim_id}: counterexample: {detail}")
    return report


def _recheck_instance(record: ClaimRecord, serialized: str, fld: FieldSpec, detail: str) -> None:
    """Re-run the predicate on the parsed-back complex; raise when the failure does not reproduce."""
    homology_cache_clear()
    if record.violates(parse_src(serialized), fld) is None:
        raise ConsistencyError(
            f"reported violation did not reproduce after re-parsing over {fld.label}: {detail}"
        )


def recheck_counterexample(report: VerificationReport) -> bool:
    """True when the reported failure reproduces."""
    if report.result != "COUNTEREXAMPLE":
        return False
    record = get_claim(report.claim_id)
    if report.found_by == "instance" and report.counterexample:
        cx = parse_src(report.counterexample)
        if record.field_free or report.counterexample_field is None:
            fld = DEFAULT_FIELD
        else:
            fld = FieldSpec.parse(report.counterexample_field)
        return record.violates(cx, fld) is not None
    fields = None
    if report.counterexample_field and not record.field_free:
        fields = [FieldSpec.parse(report.counterexample_field)]
    again = verify(report.claim_id, report.ranges, fields)
    return again.result == "COUNTEREXAMPLE"
