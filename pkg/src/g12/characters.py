"""Class functions on G12: decomposition, symmetric powers, parabolic branching."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import CycNum, UnityRoot, conj
from .errors import DomainError
from .group import CLASS_LABELS, IRREP_LABELS, g12

__all__ = [
    "ClassFunction",
    "GrothVector",
    "irreducible",
    "decompose",
    "hstar_eigenvalues",
    "hstar_det",
    "sym_power_character",
    "sym_power_decompose",
    "restrict_to_parabolic",
    "induce_from_parabolic",
    "tensor_sign",
]

NCLASSES = len(CLASS_LABELS)


@dataclass(frozen=True)
class ClassFunction:
    values: tuple[CycNum, ...]

    def __post_init__(self):
        if len(self.values) != NCLASSES:
            raise ValueError(f"class function needs {NCLASSES} values")
        object.__setattr__(self, "values", tuple(
            v if isinstance(v, CycNum) else CycNum(v) for v in self.values))

    @classmethod
    def zero(cls) -> ClassFunction:
        return cls((CycNum(0),) * NCLASSES)

    def __add__(self, other: ClassFunction) -> ClassFunction:
        return ClassFunction(tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        return ClassFunction(tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> ClassFunction:
        return ClassFunction(tuple(-a for a in self.values))

    def __mul__(self, other) -> ClassFunction:
        if isinstance(other, ClassFunction):
            return ClassFunction(tuple(a * b for a, b in zip(self.values, other.values)))
        return ClassFunction(tuple(a * other for a in self.values))

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.values)

    def degree(self) -> CycNum:
        return self.values[0]

    def inner(self, other: ClassFunction) -> CycNum:
        G = g12()
        total = CycNum(0)
        for cl, a, b in zip(G.classes, self.values, other.values):
            total = total + a * conj(b) * cl.size
        return total / G.order

    def to_json(self) -> list:
        return [v.to_json() for v in self.values]


@dataclass(frozen=True)
class GrothVector:
    """Integer combination of classes indexed by the irreps in IRREP_LABELS order."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def basis(cls, label: str) -> GrothVector:
        return cls(tuple(1 if lab == label else 0 for lab in IRREP_LABELS))

    def __add__(self, other):
        return GrothVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return GrothVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __getitem__(self, label: str) -> int:
        return self.coeffs[IRREP_LABELS.index(label)]

    def as_dict(self) -> dict[str, int]:
        return {lab: c for lab, c in zip(IRREP_LABELS, self.coeffs) if c}

    def format(self, symbol: str = "M") -> str:
        parts = []
        for lab, c in zip(IRREP_LABELS, self.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}"
            parts.append((sign, f"{mag}{symbol}({lab})"))
        if not parts:
            return "0"
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


@lru_cache(maxsize=None)
def irreducible(label: str) -> ClassFunction:
    G = g12()
    return ClassFunction(tuple(G.table[IRREP_LABELS.index(label)]))


def decompose(chi: ClassFunction, virtual: bool = False) -> tuple[int, ...]:
    """Multiplicities of each irrep in ``chi``, in IRREP_LABELS order.

    Raises :class:`DomainError` for non-integral (or, unless ``virtual``,
    negative) multiplicities.
    """
    out = []
    for label in IRREP_LABELS:
        m = chi.inner(irreducible(label))
        if not m.is_rational() or m.to_fraction().denominator != 1:
            raise DomainError(f"non-integral multiplicity {m!r} of {label}")
        k = m.to_fraction().numerator
        if k < 0 and not virtual:
            raise DomainError(f"negative multiplicity {k} of {label}")
        out.append(k)
    return tuple(out)


def compose(mults) -> ClassFunction:
    """The class function sum_sigma mults[sigma] * chi_sigma."""
    total = ClassFunction.zero()
    for label, m in zip(IRREP_LABELS, mults):
        if m:
            total = total + irreducible(label) * m
    return total


@lru_cache(maxsize=None)
def hstar_trace_det() -> tuple[tuple[CycNum, CycNum], ...]:
    """(trace, determinant) of each class representative acting on h*."""
    G = g12()
    out = []
    for cl in G.classes:
        m = G.hstar(cl.representative)
        out.append((m[0][0] + m[1][1], m[0][0] * m[1][1] - m[0][1] * m[1][0]))
    return tuple(out)


def hstar_det(k: int) -> CycNum:
    return hstar_trace_det()[k][1]


@lru_cache(maxsize=None)
def hstar_eigenvalues() -> tuple[tuple[UnityRoot, UnityRoot], ...]:
    """Eigenvalues of each class representative on h*, as roots of unity.

    Sorted by exponent; they are found among the 24th roots of unity.
    """
    out = []
    for tr, det in hstar_trace_det():
        roots = []
        for k in range(24):
            z = CycNum.zeta(24, k)
            if z * z - tr * z + det == 0:
                roots.append(UnityRoot(Fraction(k, 24)))
        if len(roots) == 1:
            roots = roots * 2
        if len(roots) != 2:
            raise ArithmeticError("class eigenvalues are not 24th roots of unity")
        out.append(tuple(roots))
    return tuple(out)


@lru_cache(maxsize=None)
def sym_power_character(n: int) -> ClassFunction:
    """Character of S^n h*, via h_n = tr * h_{n-1} - det * h_{n-2}."""
    if n < 0:
        raise DomainError("symmetric power degree must be non-negative")
    if n == 0:
        return ClassFunction((CycNum(1),) * NCLASSES)
    prev = sym_power_character(n - 1).values
    prev2 = sym_power_character(n - 2).values if n >= 2 else (CycNum(0),) * NCLASSES
    vals = tuple(tr * a - det * b for (tr, det), a, b in zip(hstar_trace_det(), prev, prev2))
    return ClassFunction(vals)


def sym_power_decompose(n: int, label: str) -> dict[str, int]:
    """Irreducible constituents of S^n h* (x) tau, as a label -> multiplicity map."""
    mults = decompose(sym_power_character(n) * irreducible(label))
    return {lab: m for lab, m in zip(IRREP_LABELS, mults) if m}


def restrict_to_parabolic(label: str) -> tuple[int, int]:
    """Multiplicities of the trivial and sign characters of <e> in tau."""
    chi = irreducible(label)
    dim = chi.values[0].to_fraction()
    at_e = chi.values[CLASS_LABELS.index("e")].to_fraction()
    plus, minus = (dim + at_e) / 2, (dim - at_e) / 2
    return int(plus), int(minus)


def induce_from_parabolic(eps: str) -> GrothVector:
    """Class of Ind M(eps) in the standard basis, by Frobenius reciprocity.

    ``eps`` is ``"+"`` (trivial) or ``"-"`` (sign) of the rank-one parabolic.
    """
    if eps not in ("+", "-"):
        raise DomainError("eps must be '+' or '-'")
    k = 0 if eps == "+" else 1
    return GrothVector(tuple(restrict_to_parabolic(lab)[k] for lab in IRREP_LABELS))


_SIGN_TWIST = {"1+": "1-", "1-": "1+", "2": "2", "2+": "2-", "2-": "2+",
               "3+": "3-", "3-": "3+", "4": "4"}


def tensor_sign(label: str) -> str:
    """The irrep 1- (x) tau, read off from characters."""
    chi = irreducible("1-") * irreducible(label)
    mults = decompose(chi)
    (idx,) = [i for i, m in enumerate(mults) if m]
    out = IRREP_LABELS[idx]
    assert out == _SIGN_TWIST[label]
    return out
