"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) modulo the
N-th cyclotomic polynomial, as a tuple of integer numerators over one common
positive denominator.  Elements of different conductors are combined by
embedding both into Q(zeta_lcm).

>>> s = root_of_unity(Fraction(1, 8)) + root_of_unity(Fraction(3, 8))
>>> s * s
CycNum(-2)
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from numbers import Rational

__all__ = [
    "CycNum",
    "UnityRoot",
    "cyclotomic_polynomial",
    "root_of_unity",
    "galois_apply",
    "conj",
    "as_cyc",
    "euler_phi",
]


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _exact_divide(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic; coefficients low -> high
    num = list(num)
    dq = len(den) - 1
    out = [0] * (len(num) - dq)
    for k in range(len(out) - 1, -1, -1):
        q = num[k + dq]
        out[k] = q
        if q:
            for i, d in enumerate(den):
                num[k + i] -= q * d
    if any(num[:dq]):
        raise ArithmeticError("non-zero remainder in cyclotomic division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the n-th cyclotomic polynomial.

    Computed as (x^n - 1) divided by the product of Phi_d over the proper
    divisors d of n.
    """
    if n < 1:
        raise ValueError(f"cyclotomic_polynomial needs n >= 1, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _exact_divide(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class _Field:
    """Reduction tables for Q(zeta_N)."""

    def __init__(self, n: int):
        self.n = n
        self.phi = cyclotomic_polynomial(n)
        self.deg = len(self.phi) - 1
        deg = self.deg
        # powers[k] = z^k mod Phi_N for 0 <= k < max(N, 2 deg - 1)
        size = max(n, 2 * deg - 1)
        powers = []
        cur = [1] + [0] * (deg - 1)
        for _ in range(size):
            powers.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(deg):
                    cur[i] -= top * self.phi[i]
        self.powers = powers
        # sparse rows used when folding high-degree products back
        self.fold = [
            [(t, v) for t, v in enumerate(powers[k]) if v] for k in range(size)
        ]

    def power(self, k: int) -> tuple[int, ...]:
        return self.powers[k % self.n]


@lru_cache(maxsize=None)
def _field(n: int) -> _Field:
    return _Field(n)


@lru_cache(maxsize=None)
def _embedding(n: int, m: int) -> tuple[tuple[int, ...], ...]:
    """Images of z_n^i in the power basis of Q(zeta_m), for n | m."""
    src, dst = _field(n), _field(m)
    step = m // n
    return tuple(dst.power(i * step) for i in range(src.deg))


@lru_cache(maxsize=None)
def _galois_table(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    f = _field(n)
    return tuple(f.power(i * k) for i in range(f.deg))


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-a for a in num]
        den = -den
    g = gcd(den, *num)
    if g != 1:
        num = [a // g for a in num]
        den //= g
    return tuple(num), den


class CycNum:
    """An element of the cyclotomic field Q(zeta_N).

    ``coeffs`` are the rational coordinates in the power basis of
    Q(zeta_N) modulo Phi_N.
    """

    __slots__ = ("conductor", "num", "den")

    def __init__(self, value=0, conductor: int = 1, coeffs=None):
        if coeffs is None:
            if isinstance(value, CycNum):
                self.conductor, self.num, self.den = value.conductor, value.num, value.den
                return
            q = Fraction(value)
            deg = _field(conductor).deg
            num = [q.numerator] + [0] * (deg - 1)
            self.conductor, self.num, self.den = conductor, tuple(num), q.denominator
            return
        deg = _field(conductor).deg
        coeffs = [Fraction(a) for a in coeffs]
        if len(coeffs) > deg:
            raise ValueError(f"too many coefficients for conductor {conductor}")
        coeffs += [Fraction(0)] * (deg - len(coeffs))
        den = lcm(*(a.denominator for a in coeffs))
        num = [a.numerator * (den // a.denominator) for a in coeffs]
        self.conductor = conductor
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _make(cls, conductor: int, num, den: int) -> CycNum:
        obj = object.__new__(cls)
        obj.conductor = conductor
        obj.num, obj.den = _normalize(num, den)
        return obj

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> CycNum:
        """zeta_n ** k with zeta_n = exp(2 pi i / n)."""
        f = _field(n)
        obj = object.__new__(cls)
        obj.conductor, obj.num, obj.den = n, f.power(k), 1
        return obj

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.den) for a in self.num)

    # -- conductor juggling --------------------------------------------------

    def embed(self, m: int) -> CycNum:
        """The same number viewed in Q(zeta_m); requires conductor | m."""
        n = self.conductor
        if n == m:
            return self
        if m % n:
            raise ValueError(f"cannot embed conductor {n} into {m}")
        table = _embedding(n, m)
        deg = _field(m).deg
        out = [0] * deg
        for a, row in zip(self.num, table):
            if a:
                for t in range(deg):
                    if row[t]:
                        out[t] += a * row[t]
        obj = object.__new__(CycNum)
        obj.conductor, obj.num, obj.den = m, tuple(out), self.den
        return obj

    def minimal(self) -> CycNum:
        """Re-express in the smallest conductor whose field contains self."""
        for d in _divisors(self.conductor):
            cand = self._restrict(d)
            if cand is not None:
                return cand
        return self  # pragma: no cover - d == conductor always succeeds

    def _restrict(self, d: int) -> CycNum | None:
        if d == self.conductor:
            return self
        table = _embedding(d, self.conductor)
        deg = len(table)
        # solve sum_i a_i table[i] = num with the images as an integer basis
        rows = [[Fraction(table[i][t]) for i in range(deg)] + [Fraction(self.num[t])]
                for t in range(len(self.num))]
        sol = _solve_overdetermined(rows, deg)
        if sol is None:
            return None
        return CycNum(coeffs=[s / self.den for s in sol], conductor=d)

    def is_rational(self) -> bool:
        # 1 is the first power-basis vector, so rationals have no other part
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if any(self.num[1:]):
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> tuple[CycNum, CycNum] | None:
        if isinstance(other, CycNum):
            if other.conductor == self.conductor:
                return self, other
            m = lcm(self.conductor, other.conductor)
            return self.embed(m), other.embed(m)
        if isinstance(other, (int, Rational)):
            return self, CycNum(other, self.conductor)
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.den == b.den:
            num = [x + y for x, y in zip(a.num, b.num)]
            return CycNum._make(a.conductor, num, a.den)
        num = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
        return CycNum._make(a.conductor, num, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(CycNum)
        obj.conductor, obj.num, obj.den = self.conductor, tuple(-a for a in self.num), self.den
        return obj

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.den == b.den:
            num = [x - y for x, y in zip(a.num, b.num)]
            return CycNum._make(a.conductor, num, a.den)
        num = [x * b.den - y * a.den for x, y in zip(a.num, b.num)]
        return CycNum._make(a.conductor, num, a.den * b.den)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, CycNum):
            q = Fraction(other)
            return CycNum._make(self.conductor, [a * q.numerator for a in self.num],
                                self.den * q.denominator)
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return _mul_same(a, b)

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        n = self.conductor
        if not any(self.num[1:]):
            return CycNum._make(n, [self.den] + [0] * (len(self.num) - 1), self.num[0])
        # product of the other Galois conjugates; self * cofactor is the norm
        cofactor = CycNum(1, n)
        for k in range(2, n):
            if gcd(k, n) == 1:
                cofactor = _mul_same(cofactor, galois_apply(k, self))
        norm = _mul_same(self, cofactor)
        return cofactor / Fraction(norm.num[0], norm.den)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, CycNum):
            q = Fraction(other)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return CycNum._make(self.conductor, [a * q.denominator for a in self.num],
                                self.den * q.numerator)
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return _mul_same(a, b.inverse())

    def __rtruediv__(self, other):
        return CycNum(other, self.conductor) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycNum(1, self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.num)

    def __eq__(self, other):
        if isinstance(other, CycNum):
            if other.conductor == self.conductor:
                return self.den == other.den and self.num == other.num
        elif not isinstance(other, (int, Rational)):
            return NotImplemented
        pair = self._coerce(other)
        a, b = pair
        return a.den == b.den and a.num == b.num

    def __hash__(self):
        if self.is_rational():
            return hash(self.to_fraction())
        return _minimal_hash(self.conductor, self.num, self.den)

    def __repr__(self):
        if not any(self.num[1:]):
            return f"CycNum({Fraction(self.num[0], self.den)})"
        terms = []
        for i, a in enumerate(self.coeffs):
            if a:
                terms.append(f"{a}" if i == 0 else f"{a}*z{self.conductor}^{i}")
        return "CycNum(" + " + ".join(terms) + ")"

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [str(a) for a in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> CycNum:
        return cls(coeffs=[Fraction(a) for a in data["coeffs"]], conductor=data["conductor"])


@lru_cache(maxsize=1 << 16)
def _minimal_hash(conductor: int, num: tuple[int, ...], den: int) -> int:
    m = CycNum._make(conductor, num, den).minimal()
    return hash((m.conductor, m.num, m.den))


def _mul_same(a: CycNum, b: CycNum) -> CycNum:
    f = _field(a.conductor)
    deg = f.deg
    na, nb = a.num, b.num
    if deg == 1:
        return CycNum._make(a.conductor, [na[0] * nb[0]], a.den * b.den)
    prod = [0] * (2 * deg - 1)
    for i, x in enumerate(na):
        if x:
            for j, y in enumerate(nb):
                if y:
                    prod[i + j] += x * y
    res = prod[:deg]
    fold = f.fold
    for k in range(deg, 2 * deg - 1):
        ck = prod[k]
        if ck:
            for t, v in fold[k]:
                res[t] += ck * v
    return CycNum._make(a.conductor, res, a.den * b.den)


def _solve_overdetermined(rows: list[list[Fraction]], nvars: int):
    """Solve an augmented consistent system exactly; None when inconsistent."""
    rows = [list(r) for r in rows]
    piv_cols = []
    r = 0
    for col in range(nvars):
        p = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(col)
        r += 1
    if any(row[-1] for row in rows[r:]):
        return None
    sol = [Fraction(0)] * nvars
    for i, col in enumerate(piv_cols):
        sol[col] = rows[i][-1]
    return sol


def as_cyc(x, conductor: int = 1) -> CycNum:
    if isinstance(x, CycNum):
        return x
    return CycNum(x, conductor)


def root_of_unity(a) -> CycNum:
    """exp(2 pi i a) for rational a, as an element of Q(zeta_denominator(a))."""
    a = Fraction(a) % 1
    return CycNum.zeta(a.denominator, a.numerator)


def galois_apply(k: int, x: CycNum) -> CycNum:
    """The automorphism zeta_N -> zeta_N^k applied to x."""
    n = x.conductor
    if gcd(k, n) != 1:
        raise ValueError(f"galois_apply: k={k} is not coprime to conductor {n}")
    table = _galois_table(n, k % n)
    deg = len(table)
    out = [0] * deg
    for a, row in zip(x.num, table):
        if a:
            for t in range(deg):
                if row[t]:
                    out[t] += a * row[t]
    return CycNum._make(n, out, x.den)


def conj(x: CycNum) -> CycNum:
    """Complex conjugation, i.e. galois_apply(N - 1)."""
    if x.conductor <= 2:
        return x
    return galois_apply(x.conductor - 1, x)


class UnityRoot:
    """A root of unity exp(2 pi i * exponent), exponent reduced into [0, 1).

    Powers by rationals multiply the reduced exponent; this fixes the branch
    used for fractional powers.
    """

    __slots__ = ("exponent",)

    def __init__(self, exponent):
        self.exponent = Fraction(exponent) % 1

    def __mul__(self, other: UnityRoot) -> UnityRoot:
        return UnityRoot(self.exponent + other.exponent)

    def __pow__(self, h) -> UnityRoot:
        return UnityRoot(self.exponent * Fraction(h))

    def inverse(self) -> UnityRoot:
        return UnityRoot(-self.exponent)

    def __eq__(self, other):
        return isinstance(other, UnityRoot) and self.exponent == other.exponent

    def __hash__(self):
        return hash(("UnityRoot", self.exponent))

    def __repr__(self):
        return f"UnityRoot({self.exponent})"

    @property
    def order(self) -> int:
        return self.exponent.denominator

    def value(self) -> CycNum:
        return root_of_unity(self.exponent)
