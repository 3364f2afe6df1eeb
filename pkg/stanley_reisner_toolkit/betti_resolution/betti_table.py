import math
from typing import Dict, Tuple, Union

import numpy as np

from stanley_reisner_toolkit.field_linalg import FieldSpec
from stanley_reisner_toolkit.utils.schemas import BettiEntrySchema, BettiTableSchema


class BettiTable:
    def __init__(self, field: FieldSpec, entries: Dict[Tuple[int, int], int]):
        """Graded Betti numbers β_{i,j} of k[Δ] over ``field``.

        Following the Macaulay2 convention, ``table[j - i, i]`` holds β_{i,j},
        so row r lists the generators of the i-th syzygy module sitting in
        degree i + r. β_{0,0} = 1 is always present.
        """
        self.field = field
        self.entries = {(i, j): v for (i, j), v in entries.items() if v}
        self.entries[(0, 0)] = 1
        max_row = max(j - i for i, j in self.entries)
        max_col = max(i for i, _ in self.entries)
        self.table = np.zeros((max_row + 1, max_col + 1), dtype=np.int64)
        for (i, j), value in self.entries.items():
            self.table[j - i, i] = value

    def beta(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    @property
    def regularity(self) -> int:
        return max(j - i for i, j in self.entries)

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def totals(self) -> np.ndarray:
        return self.table.sum(axis=0)

    def first_syzygy_degrees(self) -> Dict[int, int]:
        """{j: β_{1,j}}, the degrees of the minimal generators of I_Δ."""
        return {j: v for (i, j), v in sorted(self.entries.items()) if i == 1}

    @property
    def indeg(self) -> Union[int, float]:
        degrees = self.first_syzygy_degrees()
        return min(degrees) if degrees else math.inf

    @property
    def rt(self) -> Union[int, float]:
        degrees = self.first_syzygy_degrees()
        return max(degrees) if degrees else math.inf

    @property
    def is_linear(self) -> bool:
        indeg = self.indeg
        return not math.isinf(indeg) and self.regularity == indeg - 1

    def to_schema(self) -> BettiTableSchema:
        return BettiTableSchema(
            field=self.field.label,
            entries=[
                BettiEntrySchema(i=i, j=j, value=v) for (i, j), v in sorted(self.entries.items())
            ],
            grid=self.table.tolist(),
            regularity=self.regularity,
            projective_dimension=self.projective_dimension,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __repr__(self) -> str:
        return f"BettiTable(field={self.field.label}, entries={dict(sorted(self.entries.items()))})"

    def __str__(self):
        totals = self.totals
        widths = [6] + [
            max(len(str(i)), len(str(totals[i])), max(len(str(v)) for v in self.table[:, i]))
            for i in range(self.table.shape[1])
        ]
        header = [f"{'':>{widths[0]}}"] + [f"{i:>{widths[i + 1]}}" for i in range(self.table.shape[1])]
        total_row = [f"{'total:':>{widths[0]}}"] + [
            f"{totals[i]:>{widths[i + 1]}}" for i in range(self.table.shape[1])
        ]
        lines = [" ".join(header), " ".join(total_row)]
        cells = self.table.astype(str)
        cells[cells == "0"] = "."
        for row in range(self.table.shape[0]):
            lines.append(
                " ".join(
                    [f"{str(row) + ':':>{widths[0]}}"]
                    + [f"{cells[row, i]:>{widths[i + 1]}}" for i in range(self.table.shape[1])]
                )
            )
        return "\n".join(lines)
