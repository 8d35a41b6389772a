"""Shared builders for the tests: the worked-example fixtures and seeded
random generators for matrices, vectors, row operations, and systems."""
from __future__ import annotations

from echelon import (
    GF,
    QQ,
    Axpy,
    LinearSystem,
    Matrix,
    Scale,
    Swap,
    Vector,
    as_scalar,
)

GF7 = GF(7)
FIELDS = (QQ, GF7)

# the running worked example: a 3x5 matrix with pivots in columns 1, 2, 5
T_ROWS = [
    [2, 1, 7, -7, 2],
    [-3, 4, -5, -6, 3],
    [1, 1, 4, -5, 2],
]
# its reduced row echelon form
J_ROWS = [
    [1, 0, 3, -2, 0],
    [0, 1, 1, -3, 0],
    [0, 0, 0, 0, 1],
]


def mat(rows, field=QQ) -> Matrix:
    return Matrix.from_rows(rows, field)


def vec(values, field=QQ) -> Vector:
    return Vector.from_values(values, field)


def sc(value, field=QQ):
    return as_scalar(value, field)


def matrix_t(field=QQ) -> Matrix:
    return mat(T_ROWS, field)


def matrix_j(field=QQ) -> Matrix:
    return mat(J_ROWS, field)


def random_matrix(rng, rows, cols, field) -> Matrix:
    return mat([[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)], field)


def random_shape(rng, max_rows=8, max_cols=10) -> tuple[int, int]:
    return rng.randint(1, max_rows), rng.randint(1, max_cols)


def random_vector(rng, dim, field) -> Vector:
    return vec([rng.randint(-5, 5) for _ in range(dim)], field)


def random_ops(rng, rows, field, max_len=20) -> list:
    """A random sequence of legal row operations for a `rows`-row matrix.

    Scale coefficients stay in {-4..4} minus zero, which is nonzero in every
    field used here.
    """
    ops = []
    for _ in range(rng.randint(0, max_len)):
        kind = rng.choice(["scale"] if rows == 1 else ["swap", "scale", "axpy", "axpy"])
        if kind == "swap":
            i, j = rng.sample(range(1, rows + 1), 2)
            ops.append(Swap(i, j))
        elif kind == "scale":
            c = rng.choice([-4, -3, -2, -1, 1, 2, 3, 4])
            ops.append(Scale(rng.randint(1, rows), sc(c, field)))
        else:
            t, s = rng.sample(range(1, rows + 1), 2)
            ops.append(Axpy(t, s, sc(rng.randint(-4, 4), field)))
    return ops


def random_consistent_system(rng, rows, cols, field) -> LinearSystem:
    """Consistency by construction: the right-hand side is a known image."""
    m = random_matrix(rng, rows, cols, field)
    x = random_vector(rng, cols, field)
    return LinearSystem(m, m @ x)


def system_from_augmented(aug: Matrix) -> LinearSystem:
    """Split an augmented matrix back into coefficient part and RHS column."""
    coeff = aug.take_columns(range(1, aug.cols))
    return LinearSystem(coeff, aug.column(aug.cols))
