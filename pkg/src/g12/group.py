"""The complex reflection group G12 as an explicit matrix group over Q(zeta_8).

Everything here is built once (see :func:`g12`) and treated as immutable.
Elements are indexed by their position in the closure order, which is
breadth-first by word length and then lexicographic in the letters e, f, g.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import CycNum, conj
from .errors import InconsistencyError

__all__ = [
    "GroupElement",
    "ConjugacyClass",
    "ReflectionData",
    "Irrep",
    "GroupData",
    "IRREP_LABELS",
    "CLASS_LABELS",
    "generator_matrices",
    "generate_group",
    "conjugacy_classes",
    "reflections",
    "build_irreps",
    "central_reflection_sum",
    "character_table",
    "g12",
]

CONDUCTOR = 8
ZETA = CycNum.zeta(CONDUCTOR, 1)
SQRT_M2 = ZETA + ZETA ** 3  # a square root of -2

IRREP_LABELS = ("1+", "1-", "2", "2+", "2-", "3+", "3-", "4")
CLASS_LABELS = ("1", "(efg)^4", "e", "eg", "ef", "fg", "efg", "egf")

# (size, element order, trace on h) for each labelled class.
_CLASS_INVARIANTS = (
    (1, 1, CycNum(2)),
    (1, 2, CycNum(-2)),
    (12, 2, CycNum(0)),
    (8, 3, CycNum(-1)),
    (6, 4, CycNum(0)),
    (8, 6, CycNum(1)),
    (6, 8, SQRT_M2),
    (6, 8, -SQRT_M2),
)

_s = SQRT_M2
# Reference character table; rows in IRREP_LABELS order, columns in CLASS_LABELS order.
REFERENCE_TABLE = (
    (1, 1, 1, 1, 1, 1, 1, 1),
    (1, 1, -1, 1, 1, 1, -1, -1),
    (2, 2, 0, -1, 2, -1, 0, 0),
    (2, -2, 0, -1, 0, 1, _s, -_s),
    (2, -2, 0, -1, 0, 1, -_s, _s),
    (3, 3, 1, 0, -1, 0, -1, -1),
    (3, 3, -1, 0, -1, 0, 1, 1),
    (4, -4, 0, 1, 0, -1, 0, 0),
)
del _s

Matrix = tuple  # tuple of row tuples of CycNum


def _mat(rows) -> Matrix:
    return tuple(tuple(x if isinstance(x, CycNum) else CycNum(x) for x in r) for r in rows)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m = len(b), len(b[0])
    out = []
    for row in a:
        new = []
        for j in range(m):
            acc = row[0] * b[0][j]
            for k in range(1, n):
                acc = acc + row[k] * b[k][j]
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


def mat_identity(n: int) -> Matrix:
    return _mat([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def mat_trace(a: Matrix) -> CycNum:
    return sum((a[i][i] for i in range(len(a))), CycNum(0))


def mat_kron(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(x * y for x in arow for y in brow) for arow in a for brow in b
    )


def generator_matrices() -> dict[str, Matrix]:
    """The three generating reflections e, f, g acting on h = C^2."""
    z = ZETA
    z3 = z ** 3
    half = CycNum(1, CONDUCTOR) / 2
    a = (z3 - z) * half
    e = _mat([[a, -a], [-a, -a]])
    f = _mat([[a, a], [a, -a]])
    g = _mat([[0, -z], [z3, 0]])
    return {"e": e, "f": f, "g": g}


@dataclass(frozen=True)
class GroupElement:
    matrix: Matrix
    word: str
    index: int

    def __str__(self):
        return self.word or "1"


@dataclass(frozen=True)
class ConjugacyClass:
    label: str
    representative: int
    size: int
    order: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class ReflectionData:
    """A reflection s with root alpha (a row covector) and coroot (a column vector)."""

    element: int
    eigenvalue: CycNum
    alpha: tuple[CycNum, CycNum]
    coroot: tuple[CycNum, CycNum]


@dataclass(frozen=True)
class Irrep:
    label: str
    dim: int
    matrices: tuple[Matrix, ...]  # indexed by group element index

    def __call__(self, index: int) -> Matrix:
        return self.matrices[index]


def generate_group(generators: dict[str, Matrix] | None = None, limit: int = 48) -> list[GroupElement]:
    """Close the generators under multiplication, in shortlex word order.

    Raises :class:`InconsistencyError` if more than ``limit`` elements appear.
    """
    if generators is None:
        generators = generator_matrices()
    letters = sorted(generators)
    dim = len(next(iter(generators.values()))) if generators else 2
    ident = mat_identity(dim)
    elements = [GroupElement(ident, "", 0)]
    seen = {ident: 0}
    head = 0
    while head < len(elements):
        cur = elements[head]
        head += 1
        for letter in letters:
            m = mat_mul(cur.matrix, generators[letter])
            if m in seen:
                continue
            if len(elements) >= limit:
                raise InconsistencyError(f"group closure exceeds {limit} elements")
            seen[m] = len(elements)
            elements.append(GroupElement(m, cur.word + letter, len(elements)))
    return elements


class GroupData:
    """All derived group data: multiplication table, classes, reflections, irreps."""

    def __init__(self):
        self.generators = generator_matrices()
        self.elements = generate_group(self.generators)
        self.order = len(self.elements)
        self._lookup = {el.matrix: el.index for el in self.elements}
        n = self.order
        self.mult = [[self._lookup[mat_mul(a.matrix, b.matrix)] for b in self.elements]
                     for a in self.elements]
        self.inverse = [row.index(0) for row in self.mult]
        self.classes = conjugacy_classes(self)
        self.class_of = [0] * n
        for ci, cl in enumerate(self.classes):
            for m in cl.members:
                self.class_of[m] = ci
        self.reflections = reflections(self)
        self.irreps = build_irreps(self)
        self.table = character_table(self)

    def index(self, matrix: Matrix) -> int:
        return self._lookup[_mat(matrix)]

    def word_index(self, word: str) -> int:
        i = 0
        for letter in word:
            i = self.mult[i][self._lookup[self.generators[letter]]]
        return i

    def element_order(self, i: int) -> int:
        k, j = 1, i
        while j != 0:
            j = self.mult[j][i]
            k += 1
        return k

    def hstar(self, i: int) -> Matrix:
        """Matrix of element i acting on h* (coordinates dual to those of h)."""
        m = self.elements[self.inverse[i]].matrix
        return tuple(tuple(m[j][k] for j in range(len(m))) for k in range(len(m)))

    def irrep(self, label: str) -> Irrep:
        return self.irreps[IRREP_LABELS.index(label)]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "classes": [
                {"label": c.label, "representative": self.elements[c.representative].word,
                 "size": c.size, "order": c.order}
                for c in self.classes
            ],
            "irreps": list(IRREP_LABELS),
            "characters": [[x.to_json() for x in row] for row in self.table],
        }


def conjugacy_classes(group: GroupData) -> list[ConjugacyClass]:
    """The eight classes, ordered and labelled to match the reference table."""
    n = group.order
    assigned = [False] * n
    raw = []
    for i in range(n):
        if assigned[i]:
            continue
        members = sorted({group.mult[group.mult[g][i]][group.inverse[g]] for g in range(n)})
        for m in members:
            assigned[m] = True
        raw.append(members)
    out: list[ConjugacyClass | None] = [None] * len(_CLASS_INVARIANTS)
    for members in raw:
        rep = members[0]
        key = (len(members), group.element_order(rep), mat_trace(group.elements[rep].matrix))
        matches = [j for j, inv in enumerate(_CLASS_INVARIANTS) if inv == key]
        if len(matches) != 1 or out[matches[0]] is not None:
            raise InconsistencyError(f"cannot label class with invariants {key}")
        j = matches[0]
        out[j] = ConjugacyClass(CLASS_LABELS[j], rep, len(members), key[1], tuple(members))
    if any(c is None for c in out):
        raise InconsistencyError("class invariants do not match G12")
    return out


def _left_null_2x2(m: Matrix) -> tuple[CycNum, CycNum]:
    """Non-zero row vector v with v m = 0 for a singular 2x2 matrix, first nonzero entry 1."""
    (a, b), (c, d) = m
    # columns (a, c) and (b, d) are proportional; v = (x, y) with x a + y c = 0 and x b + y d = 0
    x, y = (c, -a) if (a or c) else (d, -b)
    lead = x if x else y
    return (x / lead, y / lead)


def reflections(group: GroupData) -> list[ReflectionData]:
    """All non-identity elements fixing a line in h, with normalized root data."""
    out = []
    ident = mat_identity(2)
    for el in group.elements[1:]:
        m = el.matrix
        fix = tuple(tuple(m[i][j] - ident[i][j] for j in range(2)) for i in range(2))
        det_fix = fix[0][0] * fix[1][1] - fix[0][1] * fix[1][0]
        if det_fix:
            continue  # no fixed vector
        if not any(x for row in fix for x in row):
            continue  # identity
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        lam = det.inverse()  # eigenvalue of s on h*
        shifted = tuple(tuple(m[i][j] - (det if i == j else 0) for j in range(2)) for i in range(2))
        alpha = _left_null_2x2(shifted)  # alpha s = det * alpha
        transposed = tuple(tuple(shifted[j][i] for j in range(2)) for i in range(2))
        v = _left_null_2x2(transposed)  # s v = det * v
        pairing = alpha[0] * v[0] + alpha[1] * v[1]
        coroot = (v[0] * 2 / pairing, v[1] * 2 / pairing)
        out.append(ReflectionData(el.index, lam, alpha, coroot))
    return out


def _s4_word_images() -> dict[str, tuple[int, ...]]:
    # e -> (12), f -> (34), g -> (23), written on points 0..3
    return {"e": (1, 0, 2, 3), "f": (0, 1, 3, 2), "g": (0, 2, 1, 3)}


def _sum_zero_matrix(perm: tuple[int, ...]) -> Matrix:
    """Action of a permutation on the sum-zero subspace, basis e_i - e_{i+1}."""
    n = len(perm)
    cols = []
    for j in range(n - 1):
        x = [0] * n
        x[perm[j]] += 1
        x[perm[j + 1]] -= 1
        coords, acc = [], 0
        for k in range(n - 1):
            acc += x[k]
            coords.append(acc)
        cols.append(coords)
    return _mat([[cols[j][i] for j in range(n - 1)] for i in range(n - 1)])


_PAIRINGS = ((frozenset({0, 1}), frozenset({2, 3})),
             (frozenset({0, 2}), frozenset({1, 3})),
             (frozenset({0, 3}), frozenset({1, 2})))


def _pairing_perm(perm: tuple[int, ...]) -> tuple[int, ...]:
    keys = [frozenset(_PAIRINGS[i]) for i in range(3)]
    out = []
    for p in _PAIRINGS:
        image = frozenset(frozenset(perm[x] for x in block) for block in p)
        out.append(keys.index(image))
    return tuple(out)


def _rep_from_generators(group: GroupData, gens: dict[str, Matrix]) -> tuple[Matrix, ...]:
    mats: list[Matrix | None] = [None] * group.order
    dim = len(next(iter(gens.values())))
    mats[0] = mat_identity(dim)
    for el in group.elements[1:]:
        parent = group.word_index(el.word[:-1])
        mats[el.index] = mat_mul(mats[parent], gens[el.word[-1]])
    return tuple(mats)


def build_irreps(group: GroupData) -> list[Irrep]:
    """The eight irreducible representations, in IRREP_LABELS order."""
    two_plus = _rep_from_generators(group, group.generators)
    sign = tuple(_mat([[m[0][0] * m[1][1] - m[0][1] * m[1][0]]]) for m in two_plus)
    trivial = tuple(mat_identity(1) for _ in range(group.order))
    two_minus = tuple(mat_kron(s, m) for s, m in zip(sign, two_plus))
    s4 = _s4_word_images()
    three_plus = _rep_from_generators(group, {k: _sum_zero_matrix(p) for k, p in s4.items()})
    two = _rep_from_generators(
        group, {k: _sum_zero_matrix(_pairing_perm(p)) for k, p in s4.items()})
    three_minus = tuple(mat_kron(s, m) for s, m in zip(sign, three_plus))
    four = tuple(mat_kron(a, b) for a, b in zip(two, two_plus))
    built = [trivial, sign, two, two_plus, two_minus, three_plus, three_minus, four]
    irreps = [Irrep(label, len(mats[0]), mats) for label, mats in zip(IRREP_LABELS, built)]
    # multiplicativity on the generators is built in; check the relations held
    for rep in irreps:
        for a in range(group.order):
            for gen in group.generators.values():
                b = group.index(gen)
                if mat_mul(rep.matrices[a], rep.matrices[b]) != rep.matrices[group.mult[a][b]]:
                    raise InconsistencyError(f"irrep {rep.label} is not a homomorphism")
    return irreps


def character_table(group: GroupData) -> list[list[CycNum]]:
    """Traces of the built irreps on class representatives, checked against the reference."""
    table = []
    for rep, ref in zip(group.irreps, REFERENCE_TABLE):
        row = [mat_trace(rep.matrices[c.representative]) for c in group.classes]
        if row != [CycNum(x) if not isinstance(x, CycNum) else x for x in ref]:
            raise InconsistencyError(f"character of {rep.label} disagrees with the reference table")
        table.append(row)
    return table


def central_reflection_sum(label: str) -> int:
    """Scalar by which the sum of all reflections acts on the irrep ``label``."""
    G = g12()
    i = IRREP_LABELS.index(label)
    e_class = CLASS_LABELS.index("e")
    value = len(G.reflections) * G.table[i][e_class] / G.irreps[i].dim
    return value.to_fraction()


def inner_product(a, b) -> CycNum:
    """Standard Hermitian inner product of two class functions (lists over classes)."""
    G = g12()
    total = CycNum(0)
    for cl, x, y in zip(G.classes, a, b):
        total = total + x * conj(y) * cl.size
    return total / G.order


@lru_cache(maxsize=None)
def g12() -> GroupData:
    return GroupData()

