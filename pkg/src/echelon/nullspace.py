"""Null-space views of a matrix.

The null space is read straight off the reduced form: nonpivot columns name
free variables, pivot columns name dependent ones, and each pivot variable is
a fixed linear expression in the free variables. That makes the null space
the graph of a linear map from the free coordinates to the pivot coordinates,
and gives a canonical basis with one vector per free index. The same reduced
data answers the column/null-space dictionary questions: span membership of a
column and linear independence of a column selection.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .gauche import Keeper, KeeperState, gauche_rref
from .matrices import Matrix, Vector
from .scalars import FieldSpec, Scalar


@dataclass(frozen=True)
class NullBasis:
    """One basis vector per free index, graph-normalized: entry 1 at its own
    free slot, 0 at every other free slot."""

    free_indices: tuple[int, ...]
    basis: tuple[Vector, ...]


@dataclass(frozen=True)
class GraphRelations:
    """x_pivot = sum(coefficient * x_free) rows, read off the reduced form.

    Every free variable is listed in every expression, zero coefficients
    included, so the textual form is stable.
    """

    free_indices: tuple[int, ...]
    pivot_exprs: tuple[tuple[int, tuple[Scalar, ...]], ...]
    field: FieldSpec

    def lines(self) -> list[str]:
        out = []
        for pivot, coeffs in self.pivot_exprs:
            if not self.free_indices:
                out.append(f"x{pivot} = 0")
            else:
                terms = " + ".join(
                    f"{c}*x{n}" for c, n in zip(coeffs, self.free_indices)
                )
                out.append(f"x{pivot} = {terms}")
        return out

    def solution_for(self, free_values: Sequence[Scalar]) -> Vector:
        """The full null-space vector with the given free-variable values."""
        if len(free_values) != len(self.free_indices):
            raise ValueError(
                f"expected {len(self.free_indices)} free values, got {len(free_values)}"
            )
        dim = len(self.free_indices) + len(self.pivot_exprs)
        entries = [self.field.zero()] * dim
        for n, value in zip(self.free_indices, free_values):
            entries[n - 1] = value
        for pivot, coeffs in self.pivot_exprs:
            acc = self.field.zero()
            for c, value in zip(coeffs, free_values):
                acc = acc + c * value
            entries[pivot - 1] = acc
        return Vector(tuple(entries), self.field)


def null_basis(m: Matrix) -> NullBasis:
    """Graph-normalized basis of the null space, one vector per free index.

    The basis vector for free index n carries 1 at slot n and, at each pivot
    slot, the negated reduced-form entry of column n in that pivot's row.
    """
    res = gauche_rref(m)
    pivots = res.pivot_set
    free = tuple(n for n in range(1, m.cols + 1) if n not in pivots)
    vectors = []
    for n in free:
        entries = [m.field.zero()] * m.cols
        entries[n - 1] = m.field.one()
        for i, s in enumerate(pivots, start=1):
            entries[s - 1] = -res.rref.entry(i, n)
        vectors.append(Vector(tuple(entries), m.field))
    return NullBasis(free_indices=free, basis=tuple(vectors))


def graph_relations(m: Matrix) -> GraphRelations:
    """Express each pivot variable over the free variables."""
    res = gauche_rref(m)
    free = tuple(n for n in range(1, m.cols + 1) if n not in res.pivot_set)
    exprs = tuple(
        (s, tuple(-res.rref.entry(i, n) for n in free))
        for i, s in enumerate(res.pivot_set, start=1)
    )
    return GraphRelations(free_indices=free, pivot_exprs=exprs, field=m.field)


def null_contains(m: Matrix, v: Vector) -> bool:
    """True exactly when m times v is the zero vector."""
    return (m @ v).is_zero()


def null_equal(a: Matrix, b: Matrix) -> bool:
    """Do the two matrices have the same null space?

    Differently shaped (or differently fielded) matrices live over different
    coordinate spaces and compare unequal. Equality of spans follows from
    mutual basis membership because both sides are bases; no orthogonality
    is involved.
    """
    if a.rows != b.rows or a.cols != b.cols or a.field != b.field:
        return False
    for w in null_basis(a).basis:
        if not (b @ w).is_zero():
            return False
    for w in null_basis(b).basis:
        if not (a @ w).is_zero():
            return False
    return True


def _check_selection(m: Matrix, js: Sequence[int]) -> None:
    for j in js:
        if not 1 <= j <= m.cols:
            raise IndexError(f"column index {j} out of range 1..{m.cols}")
    if len(set(js)) != len(js):
        raise ValueError("selected column indices must be pairwise distinct")


def column_in_span(m: Matrix, k: int, js: Sequence[int]) -> tuple[Scalar, ...] | None:
    """Coefficients writing column k over columns js, or None if impossible.

    Found by a restricted column sweep over the selected columns; selected
    columns that are themselves dependent on earlier ones get coefficient
    zero. An empty selection spans only the zero vector.
    """
    if not 1 <= k <= m.cols:
        raise IndexError(f"column index {k} out of range 1..{m.cols}")
    _check_selection(m, js)
    if k in js:
        raise ValueError(f"target column {k} is among the selected columns")
    state = KeeperState(m.field, m.rows)
    kept_slots = []
    for slot, j in enumerate(js):
        col = m.column(j)
        if isinstance(state.llq(col), Keeper):
            state.admit(col, j)
            kept_slots.append(slot)
    answer = state.llq(m.column(k))
    if isinstance(answer, Keeper):
        return None
    coeffs = [m.field.zero()] * len(js)
    for c, slot in zip(answer.coefficients, kept_slots):
        coeffs[slot] = c
    return tuple(coeffs)


def columns_independent(m: Matrix, js: Sequence[int]) -> bool:
    """Do the selected columns form a linearly independent set?

    Decided by the rank of the selected submatrix; the empty selection is
    independent.
    """
    _check_selection(m, js)
    if not js:
        return True
    sub = m.take_columns(js)
    return len(gauche_rref(sub).pivot_set) == len(js)
