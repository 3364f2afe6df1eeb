from .field_spec import DEFAULT_FIELD, GF2, GF3, RATIONALS, VERIFY_FIELDS, FieldSpec
from .sparse_matrix import SparseMatrix, rank
from .dense_oracle import dense_rank
