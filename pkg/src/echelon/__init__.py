"""Exact-arithmetic linear algebra toolkit.

Computes reduced row echelon forms two independent ways: a left-to-right
column sweep that never touches a row, and classical Gauss-Jordan with a
replayable row-operation log. On top of the reduced form it exposes the
null space as a graph over the free coordinates, span and independence
tests for column selections, null-space-based row-equivalence checks, and
exact solving of linear systems, all over Q or GF(p).
"""

from .errors import (
    EchelonError,
    FieldMismatchError,
    InconsistentSystemError,
    InvalidOperationError,
    ParseError,
    ShapeError,
)
from .gauche import (
    GaucheResult,
    Keeper,
    KeeperState,
    LLQAnswer,
    Subordinate,
    gauche_basis,
    gauche_rref,
    journal_vector,
)
from .matrices import Matrix, Vector, std_basis
from .nullspace import (
    GraphRelations,
    NullBasis,
    column_in_span,
    columns_independent,
    graph_relations,
    null_basis,
    null_contains,
    null_equal,
)
from .rowops import (
    Axpy,
    ReductionResult,
    RowOp,
    RREF_CONDITIONS,
    Scale,
    Swap,
    apply_ops,
    equivalence_script,
    format_op,
    gauss_jordan,
    is_rref,
    parse_ops,
    rref_violation,
)
from .scalars import GF, QQ, FieldKind, FieldSpec, Scalar, as_scalar, parse_scalar
from .systems import (
    Affine,
    Inconsistent,
    LinearSystem,
    SolutionSet,
    row_equivalent,
    solution_equivalent,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "Affine",
    "Axpy",
    "EchelonError",
    "FieldKind",
    "FieldMismatchError",
    "FieldSpec",
    "GF",
    "GaucheResult",
    "GraphRelations",
    "Inconsistent",
    "InconsistentSystemError",
    "InvalidOperationError",
    "Keeper",
    "KeeperState",
    "LLQAnswer",
    "LinearSystem",
    "Matrix",
    "NullBasis",
    "ParseError",
    "QQ",
    "RREF_CONDITIONS",
    "ReductionResult",
    "RowOp",
    "Scalar",
    "Scale",
    "ShapeError",
    "SolutionSet",
    "Subordinate",
    "Swap",
    "Vector",
    "apply_ops",
    "as_scalar",
    "column_in_span",
    "columns_independent",
    "equivalence_script",
    "format_op",
    "gauche_basis",
    "gauche_rref",
    "gauss_jordan",
    "graph_relations",
    "is_rref",
    "journal_vector",
    "null_basis",
    "null_contains",
    "null_equal",
    "parse_ops",
    "parse_scalar",
    "row_equivalent",
    "rref_violation",
    "solution_equivalent",
    "solve",
    "std_basis",
]
