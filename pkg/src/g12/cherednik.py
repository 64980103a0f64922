"""Standard modules M_c(tau) = S(h*) (x) tau, Dunkl operators and the contravariant form.

Degree n of M_c(tau) has basis ``x1^(n-i) x2^i (x) v_j`` stored at index
``i * dim(tau) + j``.  Dunkl operators are matrices from degree n to degree
n - 1 acting on column vectors.

The rank of the form in degree n is computed by a tower of row spaces:
with Q_0 the identity on tau, Q_n is the reduced row echelon basis of the
rows of Q_{n-1} D_1 and Q_{n-1} D_2.  Its row space is the span of the
functionals ``u -> f(D^beta u)``, which is exactly the image of the form,
so rank B_n = rows(Q_n) and the radical in degree n is the nullspace of Q_n.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .characters import ClassFunction, decompose, irreducible
from .cyclotomic import CycNum, conj
from .errors import DomainError, InconsistencyError
from .group import CLASS_LABELS, IRREP_LABELS, central_reflection_sum, g12
from .linalg import ExactMatrix, kron, matmul, nullspace_from_rref, rank, rref

__all__ = [
    "ModuleContext",
    "PolyVec",
    "lowest_weight",
    "dunkl_matrices",
    "dunkl_apply",
    "x_multiply",
    "group_act",
    "b_matrix",
    "b_rank",
    "singular_subspace",
    "form_tower",
    "FormTower",
]

CONDUCTOR = 8


def as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


@dataclass(frozen=True)
class ModuleContext:
    tau: str
    c: Fraction

    def __post_init__(self):
        if self.tau not in IRREP_LABELS:
            raise DomainError(f"unknown irrep label {self.tau!r}")
        object.__setattr__(self, "c", as_fraction(self.c))

    @property
    def dim(self) -> int:
        return g12().irrep(self.tau).dim

    @property
    def lowest_weight(self) -> Fraction:
        return lowest_weight(self.tau, self.c)

    def graded_dim(self, n: int) -> int:
        return (n + 1) * self.dim


@dataclass(frozen=True)
class PolyVec:
    """A homogeneous element of degree ``degree`` in S(h*) (x) tau."""

    degree: int
    coeffs: tuple[CycNum, ...]

    @classmethod
    def from_terms(cls, degree: int, dim: int, terms: dict) -> PolyVec:
        """Build from ``{(a, b): vector}`` with a + b = degree (monomial x1^a x2^b)."""
        zero = CycNum(0, CONDUCTOR)
        out = [zero] * ((degree + 1) * dim)
        for (a, b), vec in terms.items():
            if a + b != degree:
                raise DomainError("monomial degree mismatch")
            for j, x in enumerate(vec):
                out[b * dim + j] = out[b * dim + j] + x
        return cls(degree, tuple(out))

    def terms(self, dim: int) -> dict:
        out = {}
        for i in range(self.degree + 1):
            vec = self.coeffs[i * dim:(i + 1) * dim]
            if any(vec):
                out[(self.degree - i, i)] = vec
        return out

    def __add__(self, other: PolyVec) -> PolyVec:
        return PolyVec(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: PolyVec) -> PolyVec:
        return PolyVec(self.degree, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, k) -> PolyVec:
        return PolyVec(self.degree, tuple(a * k for a in self.coeffs))

    def __bool__(self):
        return any(self.coeffs)


def lowest_weight(tau: str, c) -> Fraction:
    """h_c(tau) = 1 - c * (scalar of the reflection sum on tau)."""
    return 1 - as_fraction(c) * central_reflection_sum(tau)


# -- polynomial plumbing ------------------------------------------------------


def _poly_mul(p, q):
    out = [CycNum(0, CONDUCTOR)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] = out[i + j] + a * b
    return out


@lru_cache(maxsize=None)
def poly_action(element: int, n: int) -> tuple[tuple[CycNum, ...], ...]:
    """Matrix of a group element on S^n h* in the monomial basis (columns are images)."""
    G = g12()
    H = G.hstar(element)
    img = [[H[0][k], H[1][k]] for k in range(2)]  # w.x_k in coefficients of (x1, x2)
    cols = []
    for i in range(n + 1):
        p = [CycNum(1, CONDUCTOR)]
        for _ in range(n - i):
            p = _poly_mul(p, img[0])
        for _ in range(i):
            p = _poly_mul(p, img[1])
        cols.append([x.embed(CONDUCTOR) for x in p])
    return tuple(tuple(cols[j][i] for j in range(n + 1)) for i in range(n + 1))


def _divide_by_linear(g, a1: CycNum, a2: CycNum):
    """Exact quotient of a binary form g (x1-descending coefficients) by a1 x1 + a2 x2."""
    n = len(g) - 1
    if a1:
        inv = a1.inverse()
        q = []
        prev = CycNum(0, CONDUCTOR)
        for i in range(n):
            prev = (g[i] - a2 * prev) * inv
            q.append(prev)
        rem = g[n] - a2 * prev
    else:
        inv = a2.inverse()
        q = [x * inv for x in g[1:]]
        rem = g[0]
    if rem:
        raise InconsistencyError("division by a root left a non-zero remainder")
    return q


@lru_cache(maxsize=None)
def delta_matrix(refl: int, n: int) -> tuple[tuple[CycNum, ...], ...]:
    """Matrix (n x (n+1)) of f -> (f - s.f)/alpha_s on S^n h*, for reflection number ``refl``."""
    G = g12()
    r = G.reflections[refl]
    S = poly_action(r.element, n)
    a1, a2 = r.alpha
    cols = []
    for i in range(n + 1):
        g = [(CycNum(1, CONDUCTOR) if k == i else CycNum(0, CONDUCTOR)) - S[k][i]
             for k in range(n + 1)]
        cols.append(_divide_by_linear(g, a1, a2) if n else [])
    return tuple(tuple(cols[j][i] for j in range(n + 1)) for i in range(n))


@lru_cache(maxsize=None)
def reflection_parts(tau: str, n: int):
    """T_k = sum_s alpha_s(y_k) Delta_s (x) R(s), k = 1, 2, from degree n to n - 1."""
    G = g12()
    R = G.irrep(tau)
    d = R.dim
    zero = CycNum(0, CONDUCTOR)
    size_out, size_in = n * d, (n + 1) * d
    T = [[[zero] * size_in for _ in range(size_out)] for _ in range(2)]
    for idx, r in enumerate(G.reflections):
        K = kron(delta_matrix(idx, n), R.matrices[r.element])
        for k in range(2):
            a = r.alpha[k]
            if not a:
                continue
            Tk = T[k]
            for i, row in enumerate(K):
                trow = Tk[i]
                for j, x in enumerate(row):
                    if x:
                        trow[j] = trow[j] + a * x
    return tuple(tuple(tuple(row) for row in Tk) for Tk in T)


def derivative_matrix(k: int, n: int, d: int):
    """d/dx_k (x) id from degree n to n - 1."""
    zero = CycNum(0, CONDUCTOR)
    M = [[zero] * ((n + 1) * d) for _ in range(n * d)]
    for i in range(n + 1):
        # x1^(n-i) x2^i
        if k == 0 and n - i > 0:
            target, factor = i, n - i
        elif k == 1 and i > 0:
            target, factor = i - 1, i
        else:
            continue
        for j in range(d):
            M[target * d + j][i * d + j] = CycNum(factor, CONDUCTOR)
    return M


@lru_cache(maxsize=256)
def dunkl_matrices(tau: str, c, n: int):
    """(D_{y1}, D_{y2}) from degree n to degree n - 1 of M_c(tau)."""
    if n < 1:
        raise DomainError("Dunkl matrices need degree >= 1")
    c = as_fraction(c)
    d = g12().irrep(tau).dim
    out = []
    for k in range(2):
        P = derivative_matrix(k, n, d)
        T = reflection_parts(tau, n)[k]
        if c:
            M = [[p - t * c if t else p for p, t in zip(prow, trow)] for prow, trow in zip(P, T)]
        else:
            M = P
        out.append(tuple(tuple(r) for r in M))
    return tuple(out)


def _apply(M, vec):
    out = []
    for row in M:
        acc = CycNum(0, CONDUCTOR)
        for x, y in zip(row, vec):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return tuple(out)


def dunkl_apply(k: int, u: PolyVec, ctx: ModuleContext) -> PolyVec:
    """D_{y_k} u (k = 0 or 1); degree-zero input maps to zero."""
    if u.degree == 0:
        return PolyVec(0, tuple(CycNum(0, CONDUCTOR) for _ in range(ctx.dim)))
    D = dunkl_matrices(ctx.tau, ctx.c, u.degree)[k]
    return PolyVec(u.degree - 1, _apply(D, u.coeffs))


def x_multiply(k: int, u: PolyVec, d: int) -> PolyVec:
    """Multiplication by x_{k+1}, degree n to n + 1."""
    zero = CycNum(0, CONDUCTOR)
    out = [zero] * ((u.degree + 2) * d)
    for i in range(u.degree + 1):
        t = i if k == 0 else i + 1
        for j in range(d):
            out[t * d + j] = u.coeffs[i * d + j]
    return PolyVec(u.degree + 1, tuple(out))


@lru_cache(maxsize=None)
def element_matrix(tau: str, element: int, n: int):
    """Matrix of a group element on degree n of M_c(tau)."""
    G = g12()
    return tuple(tuple(r) for r in kron(poly_action(element, n), G.irrep(tau).matrices[element]))


def group_act(element: int, u: PolyVec, tau: str) -> PolyVec:
    return PolyVec(u.degree, _apply(element_matrix(tau, element, u.degree), u.coeffs))


# -- the contravariant form ---------------------------------------------------


def _cache_path(ctx: ModuleContext, n: int) -> str | None:
    root = os.environ.get("G12_CACHE_DIR")
    if not root:
        return None
    key = json.dumps({"c": str(ctx.c), "tau": ctx.tau, "degree": n}, sort_keys=True)
    digest = hashlib.sha256(key.encode()).hexdigest()[:32]
    return os.path.join(root, f"b-{digest}.json")


def b_matrix(ctx: ModuleContext, n: int) -> ExactMatrix:
    """The form B_n as a square matrix.

    Row ``i * d + l`` is the dual element ``y1^(n-i) y2^i (x) f_l``;
    column ``i * d + j`` is the basis vector of degree n.  Row (beta, l) is
    built from degree n - 1 by peeling off one y; whenever both y1 and y2
    can be peeled, the two results must agree.
    """
    if n < 0:
        raise DomainError("degree must be non-negative")
    path = _cache_path(ctx, n)
    if path and os.path.exists(path):
        with open(path) as fh:
            return ExactMatrix.from_json(json.load(fh))
    d = ctx.dim
    one, zero = CycNum(1, CONDUCTOR), CycNum(0, CONDUCTOR)
    B = [[one if i == j else zero for j in range(d)] for i in range(d)]
    for m in range(1, n + 1):
        D1, D2 = dunkl_matrices(ctx.tau, ctx.c, m)
        new = []
        for i in range(m + 1):  # y1^(m-i) y2^i
            via = []
            if m - i > 0:  # peel y1: previous monomial index i
                via.append(matmul(B[i * d:(i + 1) * d], D1))
            if i > 0:  # peel y2: previous monomial index i - 1
                via.append(matmul(B[(i - 1) * d:i * d], D2))
            if len(via) == 2 and via[0] != via[1]:
                raise InconsistencyError("contravariant form recursion is inconsistent")
            new.extend(via[0])
        B = new
    result = ExactMatrix(B, (n + 1) * d)
    if path:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w") as fh:
            json.dump(result.to_json(), fh, sort_keys=True)
    return result


class FormTower:
    """Row-space bases Q_n of the form, built degree by degree."""

    def __init__(self, tau: str, c):
        self.ctx = ModuleContext(tau, as_fraction(c))
        d = self.ctx.dim
        one, zero = CycNum(1, CONDUCTOR), CycNum(0, CONDUCTOR)
        self.rows = [[[one if i == j else zero for j in range(d)] for i in range(d)]]
        self.pivots = [list(range(d))]

    def extend(self, n: int) -> None:
        while len(self.rows) <= n:
            m = len(self.rows)
            prev = self.rows[-1]
            if not prev:
                self.rows.append([])
                self.pivots.append([])
                continue
            D1, D2 = dunkl_matrices(self.ctx.tau, self.ctx.c, m)
            stacked = _times(prev, self.pivots[-1], D1) + _times(prev, self.pivots[-1], D2)
            reduced, piv = rref(stacked, (m + 1) * self.ctx.dim)
            self.rows.append(reduced)
            self.pivots.append(piv)

    def rank(self, n: int) -> int:
        self.extend(n)
        return len(self.rows[n])

    def radical_basis(self, n: int):
        self.extend(n)
        return nullspace_from_rref(self.rows[n], self.pivots[n], self.ctx.graded_dim(n))

    def character(self, n: int) -> ClassFunction:
        """W-character of L_c(tau) in degree n (trace on the row space)."""
        self.extend(n)
        Q, piv = self.rows[n], self.pivots[n]
        vals = []
        for cl in g12().classes:
            W = element_matrix(self.ctx.tau, cl.representative, n)
            acc = CycNum(0, CONDUCTOR)
            for row, p in zip(Q, piv):
                for k, x in enumerate(row):
                    if x:
                        w = W[k][p]
                        if w:
                            acc = acc + x * w
            vals.append(acc)
        return ClassFunction(tuple(vals))

    def multiplicities(self, n: int) -> tuple[int, ...]:
        return decompose(self.character(n))


def _times(Q, pivots, D):
    """Q @ D; identity Q (all pivots, no other entries) is short-circuited."""
    if len(Q) == len(D) and pivots == list(range(len(D))):
        return [list(r) for r in D]
    return matmul(Q, D)


@lru_cache(maxsize=None)
def form_tower(tau: str, c) -> FormTower:
    return FormTower(tau, as_fraction(c))


def _class_sums(tau: str, n: int):
    G = g12()
    size = (n + 1) * G.irrep(tau).dim
    sums = []
    for cl in G.classes:
        acc = [[CycNum(0, CONDUCTOR)] * size for _ in range(size)]
        for w in cl.members:
            W = element_matrix(tau, w, n)
            for i in range(size):
                Wi, Ai = W[i], acc[i]
                for j in range(size):
                    if Wi[j]:
                        Ai[j] = Ai[j] + Wi[j]
        sums.append(acc)
    return sums


def isotypic_projector(tau: str, n: int, sigma: str):
    """e_sigma = (dim sigma / |W|) sum_w conj(chi_sigma(w)) w on degree n."""
    G = g12()
    chi = irreducible(sigma).values
    dim_sigma = G.irrep(sigma).dim
    sums = _class_sums(tau, n)
    size = len(sums[0])
    E = [[CycNum(0, CONDUCTOR)] * size for _ in range(size)]
    for K, x in zip(sums, chi):
        coef = conj(x) * Fraction(dim_sigma, G.order)
        if not coef:
            continue
        for i in range(size):
            for j in range(size):
                if K[i][j]:
                    E[i][j] = E[i][j] + coef * K[i][j]
    return E


def b_rank(ctx: ModuleContext, n: int, sigma: str | None = None) -> int:
    """Rank of B_n, optionally restricted to the sigma-isotypic component."""
    if n < 0:
        raise DomainError("degree must be non-negative")
    tower = form_tower(ctx.tau, ctx.c)
    if sigma is None:
        return tower.rank(n)
    tower.extend(n)
    Q = tower.rows[n]
    if not Q:
        return 0
    r = rank(matmul(Q, isotypic_projector(ctx.tau, n, sigma)))
    if r % g12().irrep(sigma).dim:
        raise InconsistencyError("isotypic rank is not a multiple of dim sigma")
    return r


def singular_subspace(ctx: ModuleContext, n: int) -> ClassFunction:
    """W-character of the singular vectors (killed by both Dunkl operators) in degree n."""
    if n < 1:
        raise DomainError("singular vectors are sought in degree >= 1")
    D1, D2 = dunkl_matrices(ctx.tau, ctx.c, n)
    size = ctx.graded_dim(n)
    reduced, piv = rref([list(r) for r in D1] + [list(r) for r in D2], size)
    basis = nullspace_from_rref(reduced, piv, size)
    free = [j for j in range(size) if j not in set(piv)]
    vals = []
    for cl in g12().classes:
        W = element_matrix(ctx.tau, cl.representative, n)
        acc = CycNum(0, CONDUCTOR)
        for f, v in zip(free, basis):
            row = W[f]
            for x, y in zip(row, v):
                if x and y:
                    acc = acc + x * y
        vals.append(acc)
    return ClassFunction(tuple(vals))


def character_labels() -> tuple[str, ...]:
    return CLASS_LABELS
