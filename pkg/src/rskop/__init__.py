"""The RSK correspondence as a linear operator on weight spaces of the
coordinate ring of matrices."""

from .analysis import (
    classify_diagonalizable,
    count_Cd,
    det_rsk,
    trace_perm,
    trace_rsk,
)
from .bitableau import bitableau_of, expand
from .contingency import canonical_table, count_tables, enumerate_tables
from .estimators import RSKOperator, RSKTransformer
from .exceptions import (
    CapacityError,
    ConsistencyError,
    InvalidInputError,
    RSKError,
    VerificationError,
)
from .operators import build_inverse, build_matrix, matrix_A_d, matrix_M_pi
from .tableaux import TableauPair, inverse_rsk, rsk
from .weights import block_multiplicities, normalize, reduce

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ConsistencyError",
    "InvalidInputError",
    "RSKError",
    "RSKOperator",
    "RSKTransformer",
    "TableauPair",
    "VerificationError",
    "bitableau_of",
    "block_multiplicities",
    "build_inverse",
    "build_matrix",
    "canonical_table",
    "classify_diagonalizable",
    "count_Cd",
    "count_tables",
    "det_rsk",
    "enumerate_tables",
    "expand",
    "inverse_rsk",
    "matrix_A_d",
    "matrix_M_pi",
    "normalize",
    "reduce",
    "rsk",
    "trace_perm",
    "trace_rsk",
]
