"""The finiteness-test matrix A at a rational parameter c.

Rows are indexed by a conjugacy class g together with a root t of
det_{h*}(1 - g t); columns by the irreps.  The entry is
t^{h_c(sigma)} chi_sigma(g), the fractional power taken on exponents
(t = exp(2 pi i a) with a in [0, 1), t^h = exp(2 pi i a h)).  The class of a
finite-dimensional simple module, written in the basis of standard modules,
must lie in the right nullspace of A.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .characters import hstar_eigenvalues, irreducible
from .cyclotomic import UnityRoot
from .group import CLASS_LABELS, IRREP_LABELS
from .linalg import ExactMatrix, rank_nullspace
from .cherednik import lowest_weight

__all__ = ["ARow", "AMatrix", "build_a_matrix", "a_nullspace"]


@dataclass(frozen=True)
class ARow:
    class_label: str
    root_index: int
    t: UnityRoot


@dataclass(frozen=True)
class AMatrix:
    c: Fraction
    rows: tuple[ARow, ...]
    entries: ExactMatrix

    def to_json(self) -> dict:
        return {
            "c": str(self.c),
            "columns": list(IRREP_LABELS),
            "rows": [{"class": r.class_label, "root": r.root_index, "t": str(r.t.exponent)}
                     for r in self.rows],
            "matrix": self.entries.to_json(),
        }


def build_a_matrix(c) -> AMatrix:
    c = Fraction(c)
    weights = [lowest_weight(label, c) for label in IRREP_LABELS]
    chars = [irreducible(label).values for label in IRREP_LABELS]
    rows, grid = [], []
    for k, (label, eigs) in enumerate(zip(CLASS_LABELS, hstar_eigenvalues())):
        roots = sorted((lam.inverse() for lam in eigs), key=lambda u: u.exponent)
        for i, t in enumerate(roots, start=1):
            rows.append(ARow(label, i, t))
            grid.append([(t ** h).value() * chi[k] for h, chi in zip(weights, chars)])
    return AMatrix(c, tuple(rows), ExactMatrix(grid, len(IRREP_LABELS)))


def _primitive(vec):
    fracs = [x.to_fraction() for x in vec]
    den = lcm(*(f.denominator for f in fracs))
    ints = [int(f * den) for f in fracs]
    g = gcd(*ints)
    ints = [a // g for a in ints]
    lead = next(a for a in ints if a)
    return tuple(-a for a in ints) if lead < 0 else tuple(ints)


def a_nullspace(c) -> list:
    """Reduced-echelon basis of the right nullspace of A.

    Rational vectors are returned as primitive integer tuples; otherwise as
    tuples of CycNum.
    """
    A = build_a_matrix(c)
    _, basis = rank_nullspace(A.entries.tolist(), A.entries.cols)
    out = []
    for v in basis:
        if all(x.is_rational() for x in v):
            out.append(_primitive(v))
        else:
            out.append(tuple(v))
    return out
