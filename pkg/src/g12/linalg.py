"""Dense exact linear algebra over cyclotomic fields.

Matrices are lists of rows of :class:`CycNum`.  Elimination uses the first
non-zero entry as pivot; exact arithmetic makes pivot selection a matter of
speed only.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .cyclotomic import CycNum
from .errors import InconsistencyError

__all__ = [
    "ExactMatrix",
    "uniform",
    "matmul",
    "rref",
    "rank",
    "rank_nullspace",
    "zeros",
    "identity",
    "kron",
    "transpose",
]


def uniform(rows, conductor: int | None = None) -> list[list[CycNum]]:
    """Copy ``rows`` converting every entry to a CycNum of one common conductor."""
    rows = [list(r) for r in rows]
    if conductor is None:
        conductor = 1
        for r in rows:
            for x in r:
                if isinstance(x, CycNum):
                    conductor = lcm(conductor, x.conductor)
    out = []
    for r in rows:
        out.append([x.embed(conductor) if isinstance(x, CycNum) else CycNum(x, conductor)
                    for x in r])
    return out


def zeros(nrows: int, ncols: int, conductor: int = 1) -> list[list[CycNum]]:
    z = CycNum(0, conductor)
    return [[z] * ncols for _ in range(nrows)]


def identity(n: int, conductor: int = 1) -> list[list[CycNum]]:
    z, one = CycNum(0, conductor), CycNum(1, conductor)
    return [[one if i == j else z for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def matmul(a, b):
    """Product of two list-of-rows matrices, skipping zero entries."""
    if not a:
        return []
    ncols = len(b[0]) if b else 0
    zero = b[0][0] * 0 if b and ncols else CycNum(0)
    out = []
    for row in a:
        acc = [zero] * ncols
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                for j in range(ncols):
                    y = brow[j]
                    if y:
                        acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def kron(a, b):
    """Kronecker product, with index (i, j) of the result at i * len(b) + j."""
    out = []
    for arow in a:
        for brow in b:
            out.append([x * y for x in arow for y in brow])
    return out


def rref(rows, ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(reduced, pivots)`` where ``reduced`` holds only the non-zero
    rows (pivot entries equal to 1) and ``pivots`` their pivot columns.
    The input is not modified.
    """
    work = [list(r) for r in rows if any(r)]
    if ncols is None:
        ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        p = None
        for i in range(r, len(work)):
            if work[i][col]:
                p = i
                break
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        prow = work[r]
        inv = prow[col].inverse()
        nz = [k for k in range(col, ncols) if prow[k]]
        for k in nz:
            prow[k] = prow[k] * inv
        for i in range(r + 1, len(work)):
            row = work[i]
            f = row[col]
            if f:
                for k in nz:
                    row[k] = row[k] - f * prow[k]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    work = work[:r]
    # back substitution
    for idx in range(r - 1, -1, -1):
        col = pivots[idx]
        prow = work[idx]
        nz = [k for k in range(col, ncols) if prow[k]]
        for i in range(idx):
            row = work[i]
            f = row[col]
            if f:
                for k in nz:
                    row[k] = row[k] - f * prow[k]
    return work, pivots


def rank(rows) -> int:
    """Rank via forward elimination only."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        p = None
        for i in range(r, len(work)):
            if work[i][col]:
                p = i
                break
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        prow = work[r]
        inv = prow[col].inverse()
        nz = [k for k in range(col + 1, ncols) if prow[k]]
        for i in range(r + 1, len(work)):
            row = work[i]
            f = row[col]
            if f:
                f = f * inv
                for k in nz:
                    row[k] = row[k] - f * prow[k]
        r += 1
        if r == len(work):
            break
    return r


def nullspace_from_rref(reduced, pivots, ncols: int):
    """Kernel basis read off an RREF: one vector per free column, 1 there."""
    if reduced:
        zero = reduced[0][pivots[0]] * 0
        one = zero + 1
    else:
        zero, one = CycNum(0), CycNum(1)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [zero] * ncols
        v[free] = one
        for row, p in zip(reduced, pivots):
            if row[free]:
                v[p] = -row[free]
        basis.append(v)
    return basis


def rank_nullspace(rows, ncols: int | None = None):
    """Exact rank and a reduced-echelon basis of the right nullspace."""
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    reduced, pivots = rref(rows, ncols)
    basis = nullspace_from_rref(reduced, pivots, ncols)
    for v in basis:
        for row in rows:
            acc = sum((x * y for x, y in zip(row, v) if x and y), CycNum(0))
            if acc:
                raise InconsistencyError("nullspace vector failed verification")
    return len(pivots), basis


class ExactMatrix:
    """Immutable matrix of exact cyclotomic entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols: int | None = None):
        ents = uniform(entries)
        self.rows = len(ents)
        self.cols = cols if cols is not None else (len(ents[0]) if ents else 0)
        self.entries = tuple(tuple(r) for r in ents)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def tolist(self):
        return [list(r) for r in self.entries]

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        return ExactMatrix(matmul(uniform(self.entries), uniform(other.entries)), other.cols)

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    __hash__ = None

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(transpose(self.entries), self.rows)

    def rank(self) -> int:
        return rank(self.entries)

    def rank_nullspace(self):
        return rank_nullspace(self.entries, self.cols)

    def rref(self):
        return rref(self.entries, self.cols)

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[x.to_json() for x in r] for r in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> ExactMatrix:
        ents = [[CycNum.from_json(x) for x in r] for r in data["entries"]]
        return cls(ents, data["cols"])

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"


def fraction_matrix(rows) -> list[list[Fraction]]:
    """Rational entries of a matrix known to be rational."""
    return [[x.to_fraction() if isinstance(x, CycNum) else Fraction(x) for x in r] for r in rows]
