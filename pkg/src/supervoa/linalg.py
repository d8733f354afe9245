"""Exact rational scalars and deterministic sparse linear algebra.

Scalars are ``fractions.Fraction`` throughout: always stored in lowest
terms with positive denominator, and ``str()`` already produces the
``"p/q"`` wire format (``"p"`` when the denominator is 1).  Vectors are
sparse maps ``index -> Fraction`` over a fixed finite ordered basis;
subspaces are kept in reduced row-echelon form with pivots at the
smallest possible column indices, which makes every result of this
module canonical and byte-reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar_from_str(s: str) -> Fraction:
    """Parse the "p/q" wire format (q omitted when 1)."""
    return Fraction(s)


def scalar_to_str(x: Fraction) -> str:
    return str(x)


class DimensionError(ValueError):
    """Raised when vectors of different ambient dimensions are mixed."""


class SparseVec:
    """Sparse exact vector over a fixed ambient dimension.

    No explicit zero entries are ever stored.
    """

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries: Mapping[int, Fraction] | None = None):
        self.dim = dim
        self.entries: dict[int, Fraction] = {}
        if entries:
            for i, c in entries.items():
                if not 0 <= i < dim:
                    raise DimensionError(f"index {i} outside ambient dimension {dim}")
                if c:
                    self.entries[i] = Fraction(c)

    def is_zero(self) -> bool:
        return not self.entries

    def get(self, i: int) -> Fraction:
        return self.entries.get(i, ZERO)

    def scaled(self, c: Fraction) -> "SparseVec":
        if not c:
            return SparseVec(self.dim)
        v = SparseVec(self.dim)
        v.entries = {i: c * x for i, x in self.entries.items()}
        return v

    def plus(self, other: "SparseVec", coeff: Fraction = ONE) -> "SparseVec":
        if self.dim != other.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
        out = dict(self.entries)
        for i, x in other.entries.items():
            c = out.get(i, ZERO) + coeff * x
            if c:
                out[i] = c
            else:
                out.pop(i, None)
        v = SparseVec(self.dim)
        v.entries = out
        return v

    def leading_index(self) -> int | None:
        return min(self.entries) if self.entries else None

    def to_list(self) -> list[Fraction]:
        return [self.entries.get(i, ZERO) for i in range(self.dim)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparseVec)
            and self.dim == other.dim
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self.entries.items()))))

    def __repr__(self):
        terms = ", ".join(f"{i}: {c}" for i, c in sorted(self.entries.items()))
        return f"SparseVec({self.dim}, {{{terms}}})"


def vec_from_list(values: Iterable[Fraction | int]) -> SparseVec:
    vals = [Fraction(v) for v in values]
    return SparseVec(len(vals), {i: v for i, v in enumerate(vals) if v})


class Echelon:
    """Incremental row-echelon builder over sparse rational rows.

    Rows are stored with unit leading coefficient, reduced against all
    previously accepted rows (and previously accepted rows against new
    ones), so the internal state is always a reduced row-echelon basis.
    Pivot selection is the smallest column index, rows processed in
    insertion order; the result is therefore deterministic.
    """

    __slots__ = ("dim", "rows", "pivots")

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[dict[int, Fraction]] = []
        self.pivots: dict[int, int] = {}  # pivot column -> row index

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, entries: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Residue of a vector modulo the current row space.

        Columns are processed in ascending order dynamically, since an
        elimination step can fill in later pivot columns.
        """
        work = {i: c for i, c in entries.items() if c}
        processed = -1
        while True:
            col = min(
                (j for j in work if j > processed and j in self.pivots), default=None
            )
            if col is None:
                return work
            f = work.pop(col)
            for j, c in self.rows[self.pivots[col]].items():
                if j == col:
                    continue
                x = work.get(j, ZERO) - f * c
                if x:
                    work[j] = x
                else:
                    work.pop(j, None)
            processed = col

    def insert(self, entries: Mapping[int, Fraction]) -> bool:
        """Insert a row; returns True when it enlarged the span."""
        return self.insert_get(entries) is not None

    def insert_get(self, entries: Mapping[int, Fraction]) -> dict[int, Fraction] | None:
        """Insert a row and return its normalized residue (None if dependent)."""
        work = self.reduce(entries)
        if not work:
            return None
        lead = min(work)
        inv = ONE / work[lead]
        row = {j: inv * c for j, c in work.items()}
        # keep reduced form: clear the new pivot column from earlier rows
        for other in self.rows:
            f = other.get(lead)
            if f:
                for j, c in row.items():
                    x = other.get(j, ZERO) - f * c
                    if x:
                        other[j] = x
                    else:
                        other.pop(j, None)
        self.rows.append(row)
        self.pivots[lead] = len(self.rows) - 1
        return row

    def contains(self, entries: Mapping[int, Fraction]) -> bool:
        return not self.reduce(entries)

    def sorted_rows(self) -> list[dict[int, Fraction]]:
        return [self.rows[self.pivots[c]] for c in sorted(self.pivots)]


class Subspace:
    """Row space in reduced echelon form; pivots strictly increasing."""

    __slots__ = ("dim", "basis")

    def __init__(self, dim: int, basis: list[SparseVec]):
        self.dim = dim
        self.basis = basis

    @property
    def rank(self) -> int:
        return len(self.basis)

    def pivot_columns(self) -> list[int]:
        return [v.leading_index() for v in self.basis]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.dim == other.dim
            and self.basis == other.basis
        )

    def __repr__(self):
        return f"Subspace(dim={self.dim}, rank={self.rank})"


def echelonize(rows: Iterable[SparseVec], dim: int | None = None) -> Subspace:
    """Reduced row-echelon span of the given rows.

    The ambient dimension is taken from the rows when not supplied;
    an empty row list then requires an explicit ``dim``.
    """
    rows = list(rows)
    if dim is None:
        if not rows:
            raise DimensionError("ambient dimension required for an empty span")
        dim = rows[0].dim
    ech = Echelon(dim)
    for v in rows:
        if v.dim != dim:
            raise DimensionError(f"dimension mismatch: {v.dim} vs {dim}")
        ech.insert(v.entries)
    basis = []
    for row in ech.sorted_rows():
        v = SparseVec(dim)
        v.entries = dict(row)
        basis.append(v)
    return Subspace(dim, basis)


def contains(s: Subspace, v: SparseVec) -> bool:
    """Exact membership of v in the span of s."""
    if v.dim != s.dim:
        raise DimensionError(f"dimension mismatch: {v.dim} vs {s.dim}")
    work = dict(v.entries)
    for row in s.basis:
        lead = row.leading_index()
        f = work.get(lead)
        if f:
            for j, c in row.entries.items():
                x = work.get(j, ZERO) - f * c
                if x:
                    work[j] = x
                else:
                    work.pop(j, None)
    return not work


def quotient_dim(ambient_dim: int, s: Subspace) -> int:
    if s.dim != ambient_dim:
        raise DimensionError(f"subspace lives in dimension {s.dim}, not {ambient_dim}")
    return ambient_dim - s.rank


def solve_dense(mat: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve a square exact linear system; None when singular."""
    n = len(mat)
    a = [list(map(Fraction, row)) + [Fraction(rhs[i])] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = ONE / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def invert_dense(mat: list[list[Fraction]]) -> list[list[Fraction]] | None:
    """Exact inverse of a square matrix; None when singular."""
    n = len(mat)
    a = [list(map(Fraction, row)) + [ONE if i == j else ZERO for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = ONE / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]
