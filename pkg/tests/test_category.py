from fractions import Fraction
from math import gcd

import pytest

from g12.category import (
    _galois_on_irreps,
    aspherical_scan,
    blocks,
    closed_form_character,
    decomposition_matrix,
    decomposition_matrix_at,
    finite_dimensionals,
    finite_dimensionals_at,
    graded_l_character,
    induction_check,
    is_aspherical,
    m_character,
    negate_c_transport,
    report,
    scaling_permutation,
    sign_permutation,
    transport_character,
)
from g12.amatrix import a_nullspace
from g12.cherednik import lowest_weight
from g12.cyclotomic import CycNum
from g12.errors import DomainError
from g12.group import IRREP_LABELS
from g12.linalg import rank
from reference import (ASPHERICAL, COROLLARY_N_HAT, FINITE, PROP_CASES, THEOREM_N,
                       expected_rows, vec)

N = len(IRREP_LABELS)


BASE = sorted(THEOREM_N)


@pytest.mark.parametrize("c", BASE)
def test_theorem_rows_at_base_parameters(c):
    dm = decomposition_matrix(c)
    assert dm.n == expected_rows(THEOREM_N[c])
    assert dm.n_hat == expected_rows(COROLLARY_N_HAT[c])


@pytest.mark.parametrize("c", BASE)
def test_reconstruction_identity(c):
    dm = decomposition_matrix(c)
    for i, tau in enumerate(IRREP_LABELS):
        M = m_character(tau, c)
        top = lowest_weight(tau, c) + 12
        total = {}
        for j, sigma in enumerate(IRREP_LABELS):
            k = dm.n_hat[i][j]
            if not k:
                continue
            for w, v in graded_l_character(sigma, c).terms.items():
                if w <= top:
                    total[w] = tuple(a + k * b for a, b in zip(total.get(w, (0,) * N), v))
        for w, v in M.terms.items():
            assert total.get(w, (0,) * N) == v, (tau, w)


@pytest.mark.parametrize("c", BASE)
def test_triangular_and_block_supported(c):
    dm = decomposition_matrix(c)
    block_of = {lab: i for i, blk in enumerate(blocks(c)) for lab in blk}
    for i, tau in enumerate(IRREP_LABELS):
        assert dm.n[i][i] == dm.n_hat[i][i] == 1
        for j, sigma in enumerate(IRREP_LABELS):
            if i == j:
                continue
            for m in (dm.n, dm.n_hat):
                if m[i][j]:
                    assert block_of[sigma] == block_of[tau]
                    jump = lowest_weight(sigma, c) - lowest_weight(tau, c)
                    assert jump > 0 and jump.denominator == 1
            assert dm.n_hat[i][j] >= 0


def test_blocks_at_one_twelfth():
    assert blocks(Fraction(1, 12)) == [["1+", "1-", "2", "2+", "2-", "4"], ["3+"], ["3-"]]


@pytest.mark.parametrize("c", BASE)
def test_finite_dimensional_modules(c):
    fin = finite_dimensionals(c)
    assert fin == FINITE[c]
    null = [[CycNum(x) for x in v] for v in a_nullspace(c)]
    dm = decomposition_matrix(c)
    for tau in fin:
        row = [CycNum(x) for x in dm.l_row(tau).coeffs]
        assert rank(null + [row]) == rank(null)


@pytest.mark.parametrize("d,tau", [(12, "1+"), (4, "1+"), (4, "2+"), (4, "3+"), (3, "1+"),
                                   (2, "1+"), (2, "2")])
def test_closed_forms_at_r_equal_one(d, tau):
    closed = closed_form_character(d, 1, tau)
    computed = graded_l_character(tau, Fraction(1, d))
    assert closed.nonzero() == computed.nonzero()


@pytest.mark.parametrize("d,r,tau,target,dim", [
    (12, 5, "1+", "1+", 25),
    (4, 3, "1+", "1+", 27),
    (4, 5, "1+", "1+", 75),
    (4, 5, "2+", "2-", 75),
    (4, 5, "3+", "3+", 75),
    (2, 3, "1+", "1+", 108),
    (3, 2, "1+", "1+", 64),
    (12, 7, "1+", "1+", 49),
])
def test_transported_characters_match_closed_forms(d, r, tau, target, dim):
    moved = transport_character(tau, d, r)
    assert moved.tau == target
    assert moved.dimension() == dim
    assert moved.nonzero() == closed_form_character(d, r, target).nonzero()


@pytest.mark.parametrize("d,r,swapped", PROP_CASES)
def test_scaling_permutations(d, r, swapped):
    phi = scaling_permutation(d, r)
    expected = {lab: lab for lab in IRREP_LABELS}
    if swapped:
        expected.update({"2+": "2-", "2-": "2+"})
    assert phi.permutation == expected
    assert phi.conjugate == swapped


def _lift_permutations(d, r):
    modulus = 2 * d * 8 // gcd(2 * d, 8)
    perms = set()
    for k in range(1, modulus):
        if gcd(k, modulus) != 1 or (k - r) % d:
            continue
        eta = -1 if ((k - r) // d) % 2 else 1
        perm = _galois_on_irreps(k)
        if eta == -1:
            swap = {"2+": "2-", "2-": "2+"}
            perm = {lab: swap.get(img, img) for lab, img in perm.items()}
        perms.add(tuple(sorted(perm.items())))
    return perms


@pytest.mark.parametrize("d,r", [(d, r) for d, r, _ in PROP_CASES if d in (4, 12)])
def test_scaling_permutation_is_independent_of_galois_choice(d, r):
    # sqrt(-2) lies in Q(exp(2 pi i / 2d)) for d = 4, 12, so every valid g gives the same answer
    assert len(_lift_permutations(d, r)) == 1


@pytest.mark.parametrize("r", [1, 2, 4, 5])
def test_d3_lift_is_ambiguous_and_least_lift_matches(r):
    # sqrt(-2) is not in Q(exp(2 pi i / 6)); lifts to Q(zeta_24) disagree on it,
    # and the least lift is the one reproducing the published permutations
    assert len(_lift_permutations(3, r)) == 2
    assert scaling_permutation(3, r).conjugate == (r % 6 in (4, 5))


def test_sign_flip_is_an_involution():
    for c in BASE:
        dm = decomposition_matrix(c)
        assert negate_c_transport(negate_c_transport(dm)) == dm
    flip = sign_permutation()
    assert all(flip[flip[t]] == t for t in IRREP_LABELS)


def test_negative_parameter_rows():
    dm = decomposition_matrix_at(Fraction(-1, 12))
    assert dm.l_row("1-").as_dict() == {"1+": 1, "1-": 1, "2+": -1}
    assert finite_dimensionals_at(Fraction(-1, 12)) == {"1-": 1}


def test_transported_rows_d4_r5_and_printed_typo():
    dm = decomposition_matrix_at(Fraction(5, 4))
    assert dm.l_row("3+").coeffs == vec(p3=1, m2=-1, four=-1, m3=1)
    assert dm.l_row("2-").coeffs == vec(m2=1, m3=-1, m1=1)
    # the corollary prints "M(3+) = L(3+) + L(2-) + L(4) + M(3-)"; the last term is L(3-)
    assert dm.m_row("3+").coeffs == vec(p3=1, m2=1, four=1, m3=1)
    assert finite_dimensionals_at(Fraction(5, 4)) == {"1+": 75, "2-": 75, "3+": 75}


def test_induction_resolves_x():
    rep = induction_check(Fraction(1, 2))
    plus = rep["+"]
    assert plus["M"].coeffs == vec(p1=1, m1=-1, p3=1, m3=-1)
    # L(1+) + L(2) + 2 L(3+) and no L(1-), i.e. -(2X + 2) = 0
    assert plus["L"].coeffs == vec(p1=1, two=1, p3=2)
    assert decomposition_matrix(Fraction(1, 2)).l_row("3+")["1-"] == -1


def test_induction_is_trivial_when_semisimple():
    rep = induction_check(Fraction(1, 5))
    for eps in "+-":
        assert rep[eps]["M"] == rep[eps]["L"]


def test_aspherical_values():
    base = [Fraction(1, 4), Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(3, 4),
            Fraction(5, 4), Fraction(1, 12), Fraction(5, 12), Fraction(7, 12), Fraction(11, 12)]
    candidates = base + [-c for c in base]
    assert aspherical_scan(candidates) == ASPHERICAL
    assert is_aspherical(Fraction(1, 4)) == (True, ["3+"])
    assert is_aspherical(Fraction(-1, 2)) == (True, ["1-", "2", "3-"])
    assert is_aspherical(Fraction(3, 4))[0] is False


def test_report_schema():
    data = report(Fraction(1, 3))
    assert set(data) >= {"c", "semisimple", "blocks", "n", "n_hat", "finite_dimensional",
                         "characters", "aspherical"}
    assert data["c"] == "1/3" and data["depth"] == 12
    assert data["finite_dimensional"] == {"1+": 16}
    assert data["l_in_m"]["1+"] == "M(1+) + M(1-) - M(2)"


def test_errors():
    with pytest.raises(DomainError):
        graded_l_character("1+", Fraction(1, 4), -1)
    with pytest.raises(DomainError):
        scaling_permutation(5, 1)
    with pytest.raises(DomainError):
        scaling_permutation(4, 2)
