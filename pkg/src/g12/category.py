"""Category O at a rational parameter: characters, decomposition matrices, transports.

Graded characters are stored as multiplicity vectors per h-weight.  The
decomposition matrix at c is found by peeling: the deficit between M_c(tau)
and L_c(tau), read weight by weight from the bottom, must be a non-negative
combination of simple characters whose lowest weight is the current weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .amatrix import a_nullspace
from .characters import (
    ClassFunction,
    GrothVector,
    compose,
    decompose,
    hstar_trace_det,
    induce_from_parabolic,
    irreducible,
    sym_power_character,
    tensor_sign,
)
from .cherednik import as_fraction, form_tower, lowest_weight
from .cyclotomic import CycNum, conj, galois_apply
from .errors import DomainError, InconsistencyError
from .group import IRREP_LABELS
from .hecke import is_semisimple
from .linalg import rank

__all__ = [
    "CharacterSeries",
    "DecompositionMatrix",
    "TransportMap",
    "blocks",
    "graded_l_character",
    "m_character",
    "decomposition_matrix",
    "finite_dimensionals",
    "negate_c_transport",
    "scaling_permutation",
    "transport_character",
    "closed_form_character",
    "decomposition_matrix_at",
    "aspherical_scan",
    "is_aspherical",
    "induction_check",
    "report",
]

DEFAULT_DEPTH = 12
N = len(IRREP_LABELS)


@dataclass(frozen=True)
class CharacterSeries:
    """Truncated graded W-character: weight -> multiplicities of each irrep."""

    tau: str
    c: Fraction
    lowest: Fraction
    depth: int | None  # None for an exact (finite) character
    terms: dict = field(default_factory=dict)

    def at(self, weight) -> tuple[int, ...]:
        return self.terms.get(Fraction(weight), (0,) * N)

    def nonzero(self) -> dict:
        return {w: v for w, v in sorted(self.terms.items()) if any(v)}

    def dimension(self) -> int:
        from .group import g12
        dims = [g12().irrep(lab).dim for lab in IRREP_LABELS]
        return sum(m * d for v in self.terms.values() for m, d in zip(v, dims))

    def class_function(self, weight) -> ClassFunction:
        return compose(self.at(weight))

    def to_json(self) -> dict:
        return {
            str(w): {lab: m for lab, m in zip(IRREP_LABELS, v) if m}
            for w, v in self.nonzero().items()
        }


@dataclass(frozen=True)
class DecompositionMatrix:
    """n_hat[tau][sigma] = [M(tau) : L(sigma)];  n = n_hat^{-1} gives L in terms of M."""

    c: Fraction
    depth: int
    n_hat: tuple[tuple[int, ...], ...]
    n: tuple[tuple[int, ...], ...]

    def l_row(self, tau: str) -> GrothVector:
        return GrothVector(self.n[IRREP_LABELS.index(tau)])

    def m_row(self, tau: str) -> GrothVector:
        return GrothVector(self.n_hat[IRREP_LABELS.index(tau)])


@dataclass(frozen=True)
class TransportMap:
    kind: str  # "sign-flip" or "scaling"
    d: int | None
    r: int | None
    permutation: dict
    conjugate: bool  # whether characters are complex conjugated (gamma)

    def __call__(self, label: str) -> str:
        return self.permutation[label]


def blocks(c) -> list[list[str]]:
    """Irreps grouped by integrality of lowest-weight differences."""
    c = as_fraction(c)
    h = {lab: lowest_weight(lab, c) for lab in IRREP_LABELS}
    out: list[list[str]] = []
    for lab in IRREP_LABELS:
        for blk in out:
            if (h[blk[0]] - h[lab]).denominator == 1:
                blk.append(lab)
                break
        else:
            out.append([lab])
    return out


@lru_cache(maxsize=None)
def _sym_mults(n: int, tau: str) -> tuple[int, ...]:
    return decompose(sym_power_character(n) * irreducible(tau))


def m_character(tau: str, c, depth: int = DEFAULT_DEPTH) -> CharacterSeries:
    c = as_fraction(c)
    h = lowest_weight(tau, c)
    terms = {h + n: _sym_mults(n, tau) for n in range(depth + 1)}
    return CharacterSeries(tau, c, h, depth, terms)


@lru_cache(maxsize=None)
def _l_terms(tau: str, c: Fraction, depth: int) -> tuple[tuple[int, ...], ...]:
    tower = form_tower(tau, c)
    out = []
    for n in range(depth + 1):
        if tower.rank(n) == 0:
            out.extend([(0,) * N] * (depth + 1 - n))
            break
        out.append(tower.multiplicities(n))
    return tuple(out)


def graded_l_character(tau: str, c, depth: int = DEFAULT_DEPTH) -> CharacterSeries:
    """Graded character of L_c(tau) to the given depth, from isotypic ranks of the form."""
    c = as_fraction(c)
    h = lowest_weight(tau, c)
    if depth < 0:
        raise DomainError("depth must be non-negative")
    terms = {h + n: v for n, v in enumerate(_l_terms(tau, c, depth))}
    return CharacterSeries(tau, c, h, depth, terms)


def _sub(a, b, k=1):
    return tuple(x - k * y for x, y in zip(a, b))


def _invert_unitriangular(m):
    """Inverse of an integer matrix that is unitriangular after ordering by weight."""
    size = len(m)
    # Gauss-Jordan over the integers; pivots are 1, so everything stays integral.
    aug = [list(row) + [1 if i == j else 0 for j in range(size)] for i, row in enumerate(m)]
    used = set()
    for _ in range(size):
        # a row with a single nonzero off-diagonal-free pattern: pick the row whose
        # remaining support (excluding its diagonal) is already eliminated
        for i in range(size):
            if i in used:
                continue
            if all(aug[i][j] == 0 for j in range(size) if j != i and j not in used):
                break
        else:
            raise InconsistencyError("decomposition matrix is not unitriangular")
        if aug[i][i] != 1:
            raise InconsistencyError("decomposition matrix diagonal is not 1")
        for k in range(size):
            if k != i and aug[k][i]:
                f = aug[k][i]
                aug[k] = [x - f * y for x, y in zip(aug[k], aug[i])]
        used.add(i)
    return tuple(tuple(row[size:]) for row in aug)


@lru_cache(maxsize=None)
def decomposition_matrix(c, depth: int = DEFAULT_DEPTH) -> DecompositionMatrix:
    """n_hat and n at c from graded characters, validated by reconstruction to depth."""
    c = as_fraction(c)
    h = {lab: lowest_weight(lab, c) for lab in IRREP_LABELS}
    if is_semisimple(c):
        ident = tuple(tuple(1 if i == j else 0 for j in range(N)) for i in range(N))
        return DecompositionMatrix(c, depth, ident, ident)
    block_of = {lab: i for i, blk in enumerate(blocks(c)) for lab in blk}
    lchars = {lab: graded_l_character(lab, c, depth) for lab in IRREP_LABELS}
    n_hat = []
    for tau in IRREP_LABELS:
        top = h[tau] + depth
        M = m_character(tau, c, depth)
        deficit = {w: _sub(M.at(w), lchars[tau].at(w)) for w in M.terms}
        row = [0] * N
        row[IRREP_LABELS.index(tau)] = 1
        for w in sorted(deficit):
            v = deficit[w]
            if not any(v):
                continue
            if any(x < 0 for x in v):
                raise InconsistencyError(
                    f"truncation insufficient or data inconsistent: negative deficit for "
                    f"M({tau}) at weight {w}")
            for idx, mult in enumerate(v):
                if not mult:
                    continue
                sigma = IRREP_LABELS[idx]
                if h[sigma] != w or sigma == tau or block_of[sigma] != block_of[tau]:
                    raise InconsistencyError(
                        f"truncation insufficient or data inconsistent: {sigma} at weight {w} "
                        f"in M({tau})")
                row[idx] += mult
                for w2, vec in lchars[sigma].terms.items():
                    if w2 <= top and any(vec):
                        deficit[w2] = _sub(deficit[w2], vec, mult)
        n_hat.append(tuple(row))
    n_hat = tuple(n_hat)
    return DecompositionMatrix(c, depth, n_hat, _invert_unitriangular(n_hat))


def _in_span(vec, basis) -> bool:
    rows = [[CycNum(x) for x in b] for b in basis]
    return rank(rows + [[CycNum(x) for x in vec]]) == rank(rows) if rows else not any(vec)


def finite_dimensionals(c, depth: int = DEFAULT_DEPTH) -> dict[str, int]:
    """Finite-dimensional simples at c (computed directly) with their dimensions."""
    c = as_fraction(c)
    if is_semisimple(c):
        return {}
    dm = decomposition_matrix(c, depth)
    null = a_nullspace(c)
    out = {}
    for tau in IRREP_LABELS:
        terms = _l_terms(tau, c, depth)
        zeros = [n for n, v in enumerate(terms) if not any(v)]
        if not zeros or zeros[0] > depth - 2:
            continue
        row = dm.l_row(tau).coeffs
        if not _in_span(row, [b for b in null if all(isinstance(x, int) for x in b)]):
            raise InconsistencyError(
                f"L({tau}) vanishes in high degree but its class is not in the A-matrix nullspace")
        out[tau] = graded_l_character(tau, c, depth).dimension()
    return out


# -- transports ---------------------------------------------------------------

def sign_permutation() -> dict[str, str]:
    return {lab: tensor_sign(lab) for lab in IRREP_LABELS}


def _permute_matrix(m, perm: dict[str, str]):
    idx = {lab: i for i, lab in enumerate(IRREP_LABELS)}
    out = [[0] * N for _ in range(N)]
    for a in IRREP_LABELS:
        for b in IRREP_LABELS:
            out[idx[perm[a]]][idx[perm[b]]] = m[idx[a]][idx[b]]
    return tuple(tuple(r) for r in out)


def negate_c_transport(dm: DecompositionMatrix) -> DecompositionMatrix:
    """Matrices at -c from those at c, relabelling tau -> 1- (x) tau."""
    perm = sign_permutation()
    return DecompositionMatrix(-dm.c, dm.depth, _permute_matrix(dm.n_hat, perm),
                               _permute_matrix(dm.n, perm))


def _galois_on_irreps(k: int) -> dict[str, str]:
    """Permutation of irreps induced by zeta_8 -> zeta_8^k on character values."""
    out = {}
    for lab in IRREP_LABELS:
        vals = tuple(galois_apply(k % 8, v.embed(8)) for v in irreducible(lab).values)
        (match,) = [m for m in IRREP_LABELS if irreducible(m).values == vals]
        out[lab] = match
    return out


def scaling_permutation(d: int, r: int) -> TransportMap:
    """phi_{1/d, r/d}: Galois action on characters, twisted by (2+ 2-) when eta = -1.

    The Galois element zeta_M -> zeta_M^k (M = lcm(2d, 8)) is the least k
    coprime to M with k = r mod d; eta = exp(2 pi i (k - r) / 2d) = +-1.
    For d = 2 the equivalence comes from shift functors and phi is the identity.
    """
    if d not in (2, 3, 4, 12):
        raise DomainError("scaling permutations are defined for d in {2, 3, 4, 12}")
    if r <= 0 or gcd(r, d) != 1:
        raise DomainError("r must be positive and coprime to d")
    ident = {lab: lab for lab in IRREP_LABELS}
    if d == 2:
        return TransportMap("scaling", d, r, ident, False)
    modulus = 2 * d * 8 // gcd(2 * d, 8)
    k = next(k for k in range(1, modulus + 1) if gcd(k, modulus) == 1 and (k - r) % d == 0)
    eta = 1 if ((k - r) // d) % 2 == 0 else -1
    perm = _galois_on_irreps(k)
    if eta == -1:
        swap = {"2+": "2-", "2-": "2+"}
        perm = {lab: swap.get(img, img) for lab, img in perm.items()}
    return TransportMap("scaling", d, r, perm, perm["2+"] == "2-")


def _reduced(c: Fraction) -> tuple[int, int]:
    return abs(c.numerator), c.denominator


def base_decomposition(d: int, depth: int = DEFAULT_DEPTH) -> DecompositionMatrix:
    return decomposition_matrix(Fraction(1, d), depth)


@lru_cache(maxsize=None)
def decomposition_matrix_at(c, depth: int = DEFAULT_DEPTH) -> DecompositionMatrix:
    """Decomposition matrix at any rational c, by transport from c = 1/d.

    Semisimple parameters give the identity; negative parameters use the sign flip.
    """
    c = as_fraction(c)
    if is_semisimple(c):
        ident = tuple(tuple(1 if i == j else 0 for j in range(N)) for i in range(N))
        return DecompositionMatrix(c, depth, ident, ident)
    if c < 0:
        return negate_c_transport(decomposition_matrix_at(-c, depth))
    r, d = _reduced(c)
    base = base_decomposition(d, depth)
    phi = scaling_permutation(d, r).permutation
    return DecompositionMatrix(c, depth, _permute_matrix(base.n_hat, phi),
                               _permute_matrix(base.n, phi))


# -- class-function series ----------------------------------------------------
# A series here maps rational exponents of t to tuples of 8 CycNum (one per class).

def _series_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, v in b.items():
        out[e] = tuple(x + y for x, y in zip(out[e], v)) if e in out else v
    return out


def _det_poly(space: str, r: int) -> dict:
    """det_V(1 - w t^r) per class, for V = h* (space "h*") or its dual h (space "h")."""
    one = CycNum(1)
    trs, dets = [], []
    for tr, det in hstar_trace_det():
        if space == "h":
            tr, det = conj(tr), conj(det)
        trs.append(-tr)
        dets.append(det)
    return {Fraction(0): (one,) * 8, Fraction(r): tuple(trs), Fraction(2 * r): tuple(dets)}


def _series_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, v1 in a.items():
        for e2, v2 in b.items():
            prod = tuple(x * y for x, y in zip(v1, v2))
            e = e1 + e2
            out[e] = tuple(x + y for x, y in zip(out[e], prod)) if e in out else prod
    return out


def _divide_by_hstar_det(num: dict, depth: int | None):
    """num / det_{h*}(1 - w t), exact when the division terminates.

    Coefficients satisfy a_n = p_n + tr a_{n-1} - det a_{n-2} per class.
    Returns (series, exact).  Exponents in one coset of Z are assumed.
    """
    if not num:
        return {}, True
    lo = min(num)
    hi = max(num)
    trdet = hstar_trace_det()
    zero = tuple(CycNum(0) for _ in range(8))
    out = {}
    prev1, prev2 = zero, zero
    n = 0
    limit = int(hi - lo) + (depth if depth is not None else 10 ** 6)
    while True:
        e = lo + n
        p = num.get(e, zero)
        cur = tuple(pi + tr * a - det * b for pi, (tr, det), a, b in zip(p, trdet, prev1, prev2))
        out[e] = cur
        prev2, prev1 = prev1, cur
        n += 1
        if e >= hi and not any(prev1) and not any(prev2):
            return {k: v for k, v in out.items() if any(v)}, True
        if n > limit:
            return out, False


def _to_series(ch: CharacterSeries) -> dict:
    return {w: compose(v).values for w, v in ch.terms.items() if any(v)}


def _from_series(series: dict, tau: str, c: Fraction, depth, exact: bool) -> CharacterSeries:
    terms = {}
    for w, vals in series.items():
        terms[w] = decompose(ClassFunction(vals))
    lowest = min((w for w, v in terms.items() if any(v)), default=lowest_weight(tau, c))
    return CharacterSeries(tau, c, lowest, None if exact else depth, terms)


def transport_character(tau: str, d: int, r: int, depth: int = DEFAULT_DEPTH,
                        source: CharacterSeries | None = None) -> CharacterSeries:
    """Character of L_{r/d}(phi(tau)) from that of L_{1/d}(tau).

    ch_{r/d}(t, w) = det_{phi(h*)}(1 - w t^r) / det_{h*}(1 - w t) * t^{1-r}
                     * gamma(ch_{1/d}(t^r, w)).
    Exact (finite) when the source is finite-dimensional; otherwise truncated.
    """
    phi = scaling_permutation(d, r)
    if source is None:
        source = graded_l_character(tau, Fraction(1, d), depth)
    finite = not any(source.terms[max(source.terms)]) if source.terms else True
    src = _to_series(source)
    if phi.conjugate:
        src = {w: tuple(conj(x) for x in v) for w, v in src.items()}
    stretched = {w * r + 1 - r: v for w, v in src.items()}
    space = "h" if phi.conjugate else "h*"
    num = _series_mul(_det_poly(space, r), stretched)
    num = {e: v for e, v in num.items() if any(v)}
    series, exact = _divide_by_hstar_det(num, None if finite else depth)
    target = phi(tau)
    c = Fraction(r, d)
    out = _from_series(series, target, c, depth, exact and finite)
    if not (exact and finite):
        top = lowest_weight(target, c) + depth
        out = CharacterSeries(target, c, out.lowest, depth,
                              {w: v for w, v in out.terms.items() if w <= top})
    return out


# Closed-form finite characters: (d, family) -> {tau: (space, [(irrep, a, b)])},
# term chi_irrep * t^(a + b r); "space" names the module in the numerator determinant.
_CLOSED_FORMS = {
    (12, "id"): {"1+": ("h*", [("1+", 1, -1)])},
    (12, "swap"): {"1+": ("h", [("1+", 1, -1)])},
    (4, "id"): {
        "1+": ("h*", [("1+", 1, -3), ("2-", 1, -2)]),
        "2+": ("h*", [("2+", 1, 0), ("1+", 1, 1)]),
        "3+": ("h*", [("3+", 1, -1)]),
    },
    (4, "swap"): {
        "1+": ("h", [("1+", 1, -3), ("2+", 1, -2)]),
        "2-": ("h", [("2-", 1, 0), ("1+", 1, 1)]),
        "3+": ("h", [("3+", 1, -1)]),
    },
    (3, "id"): {
        "1+": ("h*", [("1+", 1, -4), ("2-", 1, -3), ("3+", 1, -2), ("4", 1, -1),
                      ("3+", 1, 0), ("2+", 1, 1), ("1+", 1, 2)]),
    },
    (2, "id"): {
        "1+": ("h*", [("1+", 1, -6), ("2-", 1, -5), ("3+", 1, -4), ("4", 1, -3),
                      ("2", 1, -2)]),
        # printed with exponents 1 - k r; the lowest weight of L(2) is 1, so 1 + k r
        "2": ("h*", [("2", 1, 0), ("4", 1, 1), ("3+", 1, 2), ("2+", 1, 3), ("1+", 1, 4)]),
    },
}


def _family(d: int, r: int) -> str:
    if d == 12:
        return "id" if r % 24 in (1, 11, 17, 19) else "swap"
    if d == 4:
        return "id" if r % 8 in (1, 3) else "swap"
    if d in (2, 3):
        return "id"
    raise DomainError("no closed forms for this d")


def closed_form_character(d: int, r: int, tau: str) -> CharacterSeries:
    """The closed-form finite character of L_{r/d}(tau) from the main theorem."""
    table = _CLOSED_FORMS[(d, _family(d, r))]
    if tau not in table:
        raise DomainError(f"no closed form for L_{r}/{d}({tau})")
    space, terms = table[tau]
    poly = {}
    for lab, a, b in terms:
        e = Fraction(a + b * r)
        vals = irreducible(lab).values
        poly[e] = tuple(x + y for x, y in zip(poly[e], vals)) if e in poly else vals
    num = _series_mul(_det_poly(space, r), poly)
    num = {e: v for e, v in num.items() if any(v)}
    series, exact = _divide_by_hstar_det(num, None)
    if not exact:
        raise InconsistencyError("closed-form character is not a polynomial")
    return _from_series(series, tau, Fraction(r, d), None, True)


# -- asphericity --------------------------------------------------------------


@lru_cache(maxsize=None)
def _invariant_counts(label: str, bound: int) -> tuple[int, ...]:
    return tuple(_sym_mults(n, label)[0] for n in range(bound + 1))


def trivial_isotypic_series(row: GrothVector, c: Fraction, bound: int) -> dict:
    """Multiplicity of the trivial irrep in sum_sigma row[sigma] M_c(sigma), by weight."""
    out: dict = {}
    for lab, coeff in zip(IRREP_LABELS, row.coeffs):
        if not coeff:
            continue
        h = lowest_weight(lab, c)
        for n, k in enumerate(_invariant_counts(lab, bound)):
            if k:
                out[h + n] = out.get(h + n, 0) + coeff * k
    return {w: v for w, v in out.items() if v}


def is_aspherical(c, depth: int = DEFAULT_DEPTH) -> tuple[bool, list[str]]:
    """Whether some simple module at c has no W-invariants, and which ones.

    The invariant series of L is sum_sigma n_{tau,sigma} t^{h(sigma)} P_sigma(t)
    with Molien denominator (1 - t^6)(1 - t^8); its numerator has degree at most
    (weight spread) + 12, so vanishing through that many terms is decisive.
    """
    c = as_fraction(c)
    dm = decomposition_matrix_at(c, depth)
    witnesses = []
    for tau in IRREP_LABELS:
        row = dm.l_row(tau)
        support = [lab for lab, x in zip(IRREP_LABELS, row.coeffs) if x]
        hs = [lowest_weight(lab, c) for lab in support]
        spread = int(max(hs) - min(hs))
        bound = max(48, spread + 12)
        series = trivial_isotypic_series(row, c, bound)
        top = min(hs) + bound
        if not any(v for w, v in series.items() if w <= top):
            witnesses.append(tau)
    return bool(witnesses), witnesses


def aspherical_scan(candidates, depth: int = DEFAULT_DEPTH) -> set[Fraction]:
    return {as_fraction(c) for c in candidates if is_aspherical(as_fraction(c), depth)[0]}


# -- induction from the rank-one parabolic ------------------------------------


def rank_one_simple(eps: str, c: Fraction) -> GrothVector:
    """[L(eps)] for the rational Cherednik algebra of Z/2 at c, in the M-basis (eps order +, -)."""
    c = as_fraction(c)
    plus_red = (c - Fraction(1, 2)) >= 0 and (c - Fraction(1, 2)).denominator == 1
    minus_red = (-c - Fraction(1, 2)) >= 0 and (-c - Fraction(1, 2)).denominator == 1
    if eps == "+":
        return GrothVector((1, -1)) if plus_red else GrothVector((1, 0))
    return GrothVector((-1, 1)) if minus_red else GrothVector((0, 1))


def induction_check(c, depth: int = DEFAULT_DEPTH) -> dict:
    """Classes of Ind L(eps) in both bases; L-coefficients must be non-negative."""
    c = as_fraction(c)
    dm = decomposition_matrix_at(c, depth)
    ind = {"+": induce_from_parabolic("+"), "-": induce_from_parabolic("-")}
    report = {}
    for eps in ("+", "-"):
        a, b = rank_one_simple(eps, c).coeffs
        m_vec = tuple(a * x + b * y for x, y in zip(ind["+"].coeffs, ind["-"].coeffs))
        l_vec = tuple(sum(m_vec[t] * dm.n_hat[t][s] for t in range(N)) for s in range(N))
        if any(x < 0 for x in l_vec):
            raise InconsistencyError(f"Ind L({eps}) has a negative L-coefficient at c={c}")
        report[eps] = {"M": GrothVector(m_vec), "L": GrothVector(l_vec)}
    return report


# -- report -------------------------------------------------------------------


def report(c, depth: int = DEFAULT_DEPTH) -> dict:
    """JSON-ready summary of category O at c."""
    c = as_fraction(c)
    semisimple = is_semisimple(c)
    dm = decomposition_matrix_at(c, depth)
    direct = c > 0 and c.numerator == 1 and not semisimple
    chars = {}
    finite = {}
    if direct:
        finite = finite_dimensionals(c, depth)
        for tau in IRREP_LABELS:
            chars[tau] = graded_l_character(tau, c, depth).to_json()
    else:
        finite = finite_dimensionals_at(c, depth)
    asph, witnesses = is_aspherical(c, depth)
    return {
        "c": f"{c.numerator}/{c.denominator}",
        "depth": depth,
        "semisimple": semisimple,
        "blocks": blocks(c),
        "irreps": list(IRREP_LABELS),
        "n": [list(r) for r in dm.n],
        "n_hat": [list(r) for r in dm.n_hat],
        "l_in_m": {tau: dm.l_row(tau).format("M") for tau in IRREP_LABELS},
        "finite_dimensional": finite,
        "characters": chars,
        "aspherical": asph,
        "aspherical_witnesses": witnesses,
    }


def finite_dimensionals_at(c, depth: int = DEFAULT_DEPTH) -> dict[str, int]:
    """Finite-dimensional simples at any c, via transport of the base case."""
    c = as_fraction(c)
    if is_semisimple(c):
        return {}
    if c < 0:
        flip = sign_permutation()
        return {flip[t]: v for t, v in finite_dimensionals_at(-c, depth).items()}
    r, d = _reduced(c)
    base = finite_dimensionals(Fraction(1, d), depth)
    phi = scaling_permutation(d, r)
    return {phi(t): transport_character(t, d, r, depth).dimension() for t in base}
