"""Independent dense rank computation, used to cross-check ``rank``."""
import numpy as np

from stanley_reisner_toolkit.field_linalg.field_spec import FieldSpec
from stanley_reisner_toolkit.field_linalg.sparse_matrix import SparseMatrix


def _rank_mod_p(array: np.ndarray, p: int) -> int:
    a = array.astype(np.int64) % p
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        pivot_rows = np.nonzero(a[rank:, col])[0]
        if pivot_rows.size == 0:
            continue
        pivot = rank + pivot_rows[0]
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = (a[rank] * inv) % p
        for r in range(rows):
            if r != rank and a[r, col]:
                a[r] = (a[r] - a[r, col] * a[rank]) % p
        rank += 1
        if rank == rows:
            break
    return rank


def dense_rank(matrix: SparseMatrix, field: FieldSpec) -> int:
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    if field.is_rational:
        array = np.array(
            [[float(v) for v in row] for row in matrix.to_dense()], dtype=np.float64
        )
        return int(np.linalg.matrix_rank(array))
    # int64 products stay exact for p < 2^31
    return _rank_mod_p(np.array(matrix.to_dense(), dtype=np.int64), field.characteristic)
