from fractions import Fraction

import numpy as np
import pytest

from stanley_reisner_toolkit.field_linalg import (
    GF2,
    GF3,
    RATIONALS,
    FieldSpec,
    SparseMatrix,
    dense_rank,
    rank,
)
from stanley_reisner_toolkit.utils.errors import FieldMismatchError


def random_matrix(rng, rows, cols, field, density=0.4):
    entries = []
    for r in range(rows):
        for c in range(cols):
            if rng.random() < density:
                entries.append((r, c, int(rng.integers(-3, 4))))
    return SparseMatrix(rows, cols, entries, field)


@pytest.mark.parametrize("text, label", [("2", "GF(2)"), ("GF(3)", "GF(3)"), ("q", "QQ"), ("0", "QQ"), ("7", "GF(7)")])
def test_field_parse(text, label):
    assert FieldSpec.parse(text).label == label


@pytest.mark.parametrize("text", ["4", "-3", "reals"])
def test_field_parse_rejects_non_fields(text):
    with pytest.raises((FieldMismatchError, ValueError)):
        FieldSpec.parse(text)


def test_normalize():
    assert GF3.normalize(-1) == 2
    assert GF3.normalize(Fraction(1, 2)) == 2
    assert RATIONALS.normalize(3) == Fraction(3)
    with pytest.raises(FieldMismatchError):
        GF2.normalize(Fraction(1, 2))


def test_zeros_are_dropped_and_duplicates_rejected():
    m = SparseMatrix(2, 2, [(0, 0, 2), (1, 1, 1)], GF2)
    assert m.nnz == 1
    with pytest.raises(ValueError):
        SparseMatrix(2, 2, [(0, 0, 1), (0, 0, 1)], GF2)
    with pytest.raises(IndexError):
        SparseMatrix(2, 2, [(2, 0, 1)], GF2)


def test_rank_depends_on_characteristic():
    # det = 2, singular exactly in characteristic 2
    entries = [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, -1)]
    assert rank(SparseMatrix(2, 2, entries, GF2), GF2) == 1
    assert rank(SparseMatrix(2, 2, entries, GF3), GF3) == 2
    assert rank(SparseMatrix(2, 2, entries, RATIONALS), RATIONALS) == 2


def test_rank_of_empty_shapes():
    assert rank(SparseMatrix(0, 5, [], GF2), GF2) == 0
    assert rank(SparseMatrix(3, 0, [], RATIONALS), RATIONALS) == 0
    assert rank(SparseMatrix(3, 3, [], GF3), GF3) == 0


def test_rank_rejects_field_mismatch():
    with pytest.raises(FieldMismatchError):
        rank(SparseMatrix(1, 1, [(0, 0, 1)], GF2), GF3)


def test_rank_matches_dense_oracle(field):
    rng = np.random.default_rng(7)
    for _ in range(40):
        rows, cols = int(rng.integers(1, 9)), int(rng.integers(1, 9))
        m = random_matrix(rng, rows, cols, field)
        assert rank(m, field) == dense_rank(m, field)


def test_rank_is_invariant_under_permutation_and_transpose(field):
    rng = np.random.default_rng(19)
    for _ in range(20):
        m = random_matrix(rng, 6, 7, field)
        rows = [int(i) for i in rng.permutation(6)]
        cols = [int(i) for i in rng.permutation(7)]
        expected = rank(m, field)
        assert rank(m.permuted(rows, cols), field) == expected
        assert rank(m.transpose(), field) == expected


def test_matmul():
    a = SparseMatrix(2, 2, [(0, 0, 1), (0, 1, 1), (1, 1, 1)], GF2)
    product = a.matmul(a)
    assert product.to_dense() == [[1, 0], [0, 1]]
    with pytest.raises(FieldMismatchError):
        a.matmul(SparseMatrix(2, 2, [], GF3))
    with pytest.raises(ValueError):
        a.matmul(SparseMatrix(3, 1, [], GF2))


def from_integers(array, field):
    entries = [(r, c, int(v)) for (r, c), v in np.ndenumerate(array) if v]
    return SparseMatrix(array.shape[0], array.shape[1], entries, field)


@pytest.mark.parametrize("seed", [3, 5, 8])
def test_rational_rank_bounds_every_prime_rank(seed):
    rng = np.random.default_rng(seed)
    primes = [FieldSpec.parse(p) for p in ("2", "3", "5", "7", "101")]
    for _ in range(30):
        shape = (int(rng.integers(1, 8)), int(rng.integers(1, 8)))
        array = rng.integers(-4, 5, size=shape)
        over_q = rank(from_integers(array, RATIONALS), RATIONALS)
        assert over_q == int(np.linalg.matrix_rank(array.astype(float)))
        for fld in primes:
            m = from_integers(array, fld)
            over_p = rank(m, fld)
            assert over_p <= over_q
            assert over_p == dense_rank(m, fld)
