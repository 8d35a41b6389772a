"""RREF by a left-to-right column sweep, with one journal vector per column.

Each column is classified against the keeper columns to its left: a column
inside their span is subordinate and journaled with its unique combination
coefficients, while a column outside the span becomes the next keeper and is
journaled with the next standard basis vector. The journals, concatenated in
column order, are exactly the reduced row echelon form, so no row operation
is ever performed. The keeper columns of the input form a basis (the Gauche
basis) for its column space, indexed by the pivot set.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldMismatchError, ShapeError
from .matrices import Matrix, Vector, std_basis
from .scalars import FieldSpec, Scalar


@dataclass(frozen=True)
class Keeper:
    """The column lies outside the span of the keepers to its left."""


@dataclass(frozen=True)
class Subordinate:
    """The column equals the keeper combination with these coefficients."""

    coefficients: tuple[Scalar, ...]


LLQAnswer = Keeper | Subordinate


class KeeperState:
    """Keeper columns admitted so far, plus an eliminated copy of them.

    The eliminated copy holds one normalized vector per keeper, with pairwise
    distinct leading slots; each is tagged with its expression over the
    original keepers. One forward pass against the copy, O(dim * keepers),
    settles whether a candidate column lies in the keeper span and recovers
    the exact combination coefficients. Those coefficients are unique because
    the keeper set stays linearly independent by construction: a column is
    only admitted when it falls outside the current span.
    """

    def __init__(self, field: FieldSpec, dim: int):
        self.field = field
        self.dim = dim
        self.keeper_indices: list[int] = []
        self._leads: list[int] = []
        self._reduced: list[list[Scalar]] = []
        self._over_keepers: list[list[Scalar]] = []

    def __len__(self) -> int:
        return len(self.keeper_indices)

    def _check(self, col: Vector) -> None:
        if col.dim != self.dim:
            raise ShapeError(f"column of dimension {col.dim}, keeper state expects {self.dim}")
        if col.field != self.field:
            raise FieldMismatchError(f"column in {col.field} against a {self.field} state")

    def _eliminate(self, col: Vector) -> tuple[list[Scalar], list[Scalar]]:
        """Residual of col against the reduced keepers, and the coefficients
        expressing the eliminated part over the original keepers."""
        residual = list(col.entries)
        coeffs = [self.field.zero()] * len(self._reduced)
        for i, lead in enumerate(self._leads):
            factor = residual[lead]
            if not factor:
                continue
            u = self._reduced[i]
            for r in range(self.dim):
                if u[r]:
                    residual[r] = residual[r] - factor * u[r]
            for j, a in enumerate(self._over_keepers[i]):
                if a:
                    coeffs[j] = coeffs[j] + factor * a
        return residual, coeffs

    def llq(self, col: Vector) -> LLQAnswer:
        """Can this column be written over the keepers to its left?

        With no keepers yet the span is the zero space, so the answer is
        Subordinate(()) exactly when the column is zero.
        """
        self._check(col)
        residual, coeffs = self._eliminate(col)
        if any(residual):
            return Keeper()
        return Subordinate(tuple(coeffs))

    def admit(self, col: Vector, index: int) -> None:
        """Record column `index` of the source matrix as the next keeper."""
        self._check(col)
        residual, coeffs = self._eliminate(col)
        lead = None
        for r, entry in enumerate(residual):
            if entry:
                lead = r
                break
        assert lead is not None, "cannot admit a column inside the keeper span"
        scale = residual[lead].inv()
        self.keeper_indices.append(index)
        self._leads.append(lead)
        self._reduced.append([scale * e for e in residual])
        self._over_keepers.append([-(scale * c) for c in coeffs] + [scale])


def journal_vector(answer: LLQAnswer, keepers_before: int, dim: int, field: FieldSpec) -> Vector:
    """The per-column record: e_{l+1} for the (l+1)th keeper, or the
    subordinate coefficients padded with zeros to the full dimension."""
    if isinstance(answer, Keeper):
        assert keepers_before + 1 <= dim, "more keepers than rows is impossible"
        return std_basis(dim, keepers_before + 1, field)
    coeffs = answer.coefficients
    assert len(coeffs) == keepers_before <= dim
    return Vector(coeffs + (field.zero(),) * (dim - len(coeffs)), field)


@dataclass(frozen=True)
class GaucheResult:
    rref: Matrix
    pivot_set: tuple[int, ...]
    journals: tuple[Vector, ...]

    @property
    def basis_indices(self) -> tuple[int, ...]:
        """Pivot columns, read as the column-space basis indices of the input."""
        return self.pivot_set


def gauche_rref(m: Matrix) -> GaucheResult:
    """Sweep the columns once, left to right, and assemble the RREF."""
    state = KeeperState(m.field, m.rows)
    journals: list[Vector] = []
    pivots: list[int] = []
    for n in range(1, m.cols + 1):
        col = m.column(n)
        answer = state.llq(col)
        journals.append(journal_vector(answer, len(state), m.rows, m.field))
        if isinstance(answer, Keeper):
            state.admit(col, n)
            pivots.append(n)
    return GaucheResult(
        rref=Matrix.from_columns(journals),
        pivot_set=tuple(pivots),
        journals=tuple(journals),
    )


def gauche_basis(m: Matrix) -> tuple[int, ...]:
    """Indices of the keeper columns: a basis for the column space of m."""
    return gauche_rref(m).pivot_set
