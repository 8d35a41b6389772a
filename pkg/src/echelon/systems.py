"""Linear systems M x = b: exact solving and solution-set comparison.

A system is solved through the reduced form of its augmented matrix; it is
inconsistent exactly when the right-hand-side column earns a pivot of its
own. Consistent solution sets are affine: one particular solution (free
variables pinned to zero) plus the null space of the coefficient matrix.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldMismatchError, InconsistentSystemError, ShapeError
from .gauche import gauche_rref
from .matrices import Matrix, Vector
from .nullspace import NullBasis, null_basis, null_equal


@dataclass(frozen=True)
class LinearSystem:
    coeff: Matrix
    rhs: Vector

    def __post_init__(self) -> None:
        if self.rhs.dim != self.coeff.rows:
            raise ShapeError(
                f"{self.coeff.rows}-row system with a {self.rhs.dim}-entry right-hand side"
            )
        if self.rhs.field != self.coeff.field:
            raise FieldMismatchError(
                f"right-hand side in {self.rhs.field} against {self.coeff.field}"
            )

    def augmented(self) -> Matrix:
        return self.coeff.augment(self.rhs)


@dataclass(frozen=True)
class Inconsistent:
    """No solution: the reduced augmented matrix has a pivot in the RHS column."""


@dataclass(frozen=True)
class Affine:
    """All solutions: particular plus any combination of the homogeneous basis."""

    particular: Vector
    homogeneous: NullBasis


SolutionSet = Inconsistent | Affine


def solve(system: LinearSystem) -> SolutionSet:
    """Solve exactly. The particular solution pins every free variable to
    zero and reads the pivot variables off the reduced right-hand side."""
    q = system.coeff.cols
    res = gauche_rref(system.augmented())
    if res.pivot_set and res.pivot_set[-1] == q + 1:
        return Inconsistent()
    reduced_rhs = res.journals[q]
    entries = [system.coeff.field.zero()] * q
    for i, s in enumerate(res.pivot_set):
        entries[s - 1] = reduced_rhs.entries[i]
    particular = Vector(tuple(entries), system.coeff.field)
    return Affine(particular=particular, homogeneous=null_basis(system.coeff))


def solution_equivalent(a: LinearSystem, b: LinearSystem) -> bool:
    """Do two consistent systems of the same size have the same solutions?

    True iff each system's particular solution solves the other and the
    coefficient matrices share a null space: two affine sets with a common
    point and equal direction spaces coincide. Inconsistent inputs are
    rejected; empty solution sets of mismatched systems are not "equal".
    """
    if a.coeff.rows != b.coeff.rows or a.coeff.cols != b.coeff.cols:
        raise ShapeError("solution equivalence needs systems of the same size")
    if a.coeff.field != b.coeff.field:
        raise FieldMismatchError("solution equivalence needs a common field")
    sol_a = solve(a)
    sol_b = solve(b)
    if isinstance(sol_a, Inconsistent) or isinstance(sol_b, Inconsistent):
        raise InconsistentSystemError(
            "solution equivalence is only defined for consistent systems"
        )
    return (
        (b.coeff @ sol_a.particular) == b.rhs
        and (a.coeff @ sol_b.particular) == a.rhs
        and null_equal(a.coeff, b.coeff)
    )


def row_equivalent(a: Matrix, b: Matrix) -> bool:
    """Are two same-shaped matrices related by row operations?

    Decided by comparing canonical reduced forms, which characterize the
    row-equivalence class.
    """
    if a.rows != b.rows or a.cols != b.cols:
        raise ShapeError("row equivalence needs matrices of the same shape")
    if a.field != b.field:
        raise FieldMismatchError("row equivalence needs a common field")
    return gauche_rref(a).rref == gauche_rref(b).rref
