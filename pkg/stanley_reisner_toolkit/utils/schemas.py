from typing import List, Literal

from pydantic import BaseModel


class ComplexSchema(BaseModel):
    n: int
    facets: List[List[int]]


class BettiEntrySchema(BaseModel):
    i: int
    j: int
    value: int


class BettiTableSchema(BaseModel):
    field: str
    entries: List[BettiEntrySchema]
    # Macaulay layout: grid[j - i][i]
    grid: List[List[int]]
    regularity: int
    projective_dimension: int


ClaimResult = Literal["PASS", "COUNTEREXAMPLE", "SKIPPED"]


class ClaimSummaryRow(BaseModel):
    claim_id: str
    group: str
    result: ClaimResult
    instances_checked: int
    wall_time: float


class ReproduceSummary(BaseModel):
    rows: List[ClaimSummaryRow]
    passed: int
    counterexamples: int
    skipped: int
