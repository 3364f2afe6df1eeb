from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from stanley_reisner_toolkit.field_linalg.field_spec import FieldSpec, Scalar
from stanley_reisner_toolkit.utils.errors import FieldMismatchError

Entry = Tuple[int, int, Scalar]


class SparseMatrix:
    """Immutable sparse matrix over a FieldSpec.

    Entries are normalized into the field on construction; zeros are never
    stored and a repeated (row, col) position is rejected.
    """

    def __init__(self, rows: int, cols: int, entries: Iterable[Entry], field: FieldSpec):
        if rows < 0 or cols < 0:
            raise ValueError(f"negative shape ({rows}, {cols})")
        self.rows = rows
        self.cols = cols
        self.field = field
        data: Dict[Tuple[int, int], Scalar] = {}
        for r, c, value in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry ({r}, {c}) outside shape ({rows}, {cols})")
            if (r, c) in data:
                raise ValueError(f"duplicate entry at ({r}, {c})")
            value = field.normalize(value)
            if value:
                data[(r, c)] = value
        self._data = data

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> List[Entry]:
        return [(r, c, v) for (r, c), v in sorted(self._data.items())]

    @property
    def nnz(self) -> int:
        return len(self._data)

    def get(self, r: int, c: int) -> Scalar:
        return self._data.get((r, c), 0)

    def is_zero(self) -> bool:
        return not self._data

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, ((c, r, v) for (r, c), v in self._data.items()), self.field)

    def permuted(self, row_order: Sequence[int], col_order: Sequence[int]) -> "SparseMatrix":
        """Row ``k`` of the result is row ``row_order[k]`` of this matrix (same for columns)."""
        row_pos = {old: new for new, old in enumerate(row_order)}
        col_pos = {old: new for new, old in enumerate(col_order)}
        return SparseMatrix(
            self.rows,
            self.cols,
            ((row_pos[r], col_pos[c], v) for (r, c), v in self._data.items()),
            self.field,
        )

    def to_domain_matrix(self, field: Optional[FieldSpec] = None) -> DomainMatrix:
        field = field or self.field
        K = field.domain()
        nested: Dict[int, Dict[int, object]] = {}
        for (r, c), v in self._data.items():
            nested.setdefault(r, {})[c] = field.to_domain(v)
        return DomainMatrix(nested, (self.rows, self.cols), K)

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field.label} times {other.field.label}")
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        by_row: Dict[int, List[Tuple[int, Scalar]]] = {}
        for (r, c), v in other._data.items():
            by_row.setdefault(r, []).append((c, v))
        acc: Dict[Tuple[int, int], Scalar] = {}
        for (r, k), v in self._data.items():
            for c, w in by_row.get(k, ()):
                acc[(r, c)] = acc.get((r, c), 0) + v * w
        return SparseMatrix(self.rows, other.cols, ((r, c, v) for (r, c), v in acc.items()), self.field)

    def to_dense(self) -> List[List[Scalar]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self._data.items():
            dense[r][c] = v
        return dense

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.field == other.field and self._data == other._data

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz}, field={self.field.label})"


def rank(matrix: SparseMatrix, field: FieldSpec) -> int:
    """Exact rank over ``field`` via sympy's DomainMatrix elimination."""
    if matrix.field.characteristic != field.characteristic:
        raise FieldMismatchError(
            f"matrix entries live in {matrix.field.label}, rank requested over {field.label}"
        )
    if matrix.rows == 0 or matrix.cols == 0 or matrix.is_zero():
        return 0
    return int(matrix.to_domain_matrix(field).rank())
