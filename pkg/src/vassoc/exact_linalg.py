"""Dense linear algebra over the rationals.

Everything here works on :class:`fractions.Fraction` entries, so no rounding
ever happens.  Matrices are small (at most a few thousand rows by a few dozen
columns in this package) and plain Gaussian elimination is fast enough.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Vector = tuple  # tuple of Fraction


def q(x) -> Fraction:
    """Coerce ints, strings like ``"3/4"`` and Fractions to a Fraction."""
    return x if isinstance(x, Fraction) else Fraction(x)


def qvec(xs: Iterable) -> Vector:
    return tuple(q(x) for x in xs)


@dataclass(frozen=True)
class QMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "QMatrix":
        rows = [qvec(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: Optional[int] = None) -> "QMatrix":
        columns = [qvec(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)],
                             cols=len(columns))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "QMatrix":
        return QMatrix.from_rows([self.column(j) for j in range(self.cols)], cols=self.rows)

    def matvec(self, x: Sequence) -> Vector:
        if len(x) != self.cols:
            raise ValueError(f"vector of length {len(x)} for {self.rows}x{self.cols} matrix")
        x = qvec(x)
        return tuple(sum((a * b for a, b in zip(self.row(i), x)), Fraction(0))
                     for i in range(self.rows))

    def __str__(self) -> str:
        cells = [[str(x) for x in r] for r in self.to_rows()]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)


def _eliminate(rows: list, ncols: int) -> list:
    """In-place reduction of ``rows`` (lists of Fractions) to RREF over the
    first ``ncols`` columns.  Returns the pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f != 0:
                    rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: QMatrix) -> tuple:
    """Reduced row echelon form and pivot columns.

    >>> rref(QMatrix.from_rows([[1, 2], [2, 4]]))[1]
    [0]
    """
    rows = [list(r) for r in m.to_rows()]
    pivots = _eliminate(rows, m.cols)
    return QMatrix.from_rows(rows, cols=m.cols) if rows else m, pivots


def rank(m: QMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: QMatrix) -> list:
    """Right null space, one vector per free column (in column order) with
    that free variable set to 1 and the other free variables to 0."""
    red, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * m.cols
        x[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            x[pc] = -red[r, f]
        basis.append(tuple(x))
    return basis


def solve(m: QMatrix, b: Sequence) -> Optional[Vector]:
    """Some ``x`` with ``m x = b`` (free variables set to 0), or ``None``
    when ``b`` is not in the column space of ``m``."""
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {m.rows} rows")
    b = qvec(b)
    rows = [list(m.row(i)) + [b[i]] for i in range(m.rows)]
    pivots = _eliminate(rows, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][m.cols]
    return tuple(x)


def span_rank(vectors: Sequence[Sequence]) -> int:
    vectors = [v for v in vectors]
    if not vectors:
        return 0
    return rank(QMatrix.from_rows(vectors))


def span_contains(generators: Sequence[Sequence], u: Sequence) -> bool:
    """True iff ``u`` is a linear combination of ``generators``."""
    if not any(x != 0 for x in u):
        return True
    if not generators:
        return False
    return solve(QMatrix.from_columns(generators, rows=len(u)), u) is not None


def span_basis(vectors: Sequence[Sequence]) -> list:
    """Nonzero rows of the RREF of ``vectors``: a canonical basis of their span."""
    vectors = list(vectors)
    if not vectors:
        return []
    red, pivots = rref(QMatrix.from_rows(vectors))
    return [red.row(i) for i in range(len(pivots))]
