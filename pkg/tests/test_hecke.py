from dataclasses import replace
from fractions import Fraction

from hypothesis import given, strategies as st

from g12.cyclotomic import root_of_unity
from g12.group import IRREP_LABELS, g12
from g12.hecke import (
    _data_text,
    dump_schur_elements,
    is_semisimple,
    load_schur_elements,
    nonsemisimple_residues,
    schur_evaluate,
)


def test_nonsemisimple_residues():
    assert nonsemisimple_residues() == {1, 3, 4, 5, 6, 7, 8, 9, 11}


def test_schur_elements_at_q_equal_one():
    # at v = 1 the symmetrising form is the group trace: s_sigma(1) = |W| / dim sigma
    G = g12()
    for lab in IRREP_LABELS:
        if lab == "2-":
            continue
        assert schur_evaluate(lab, 0) == Fraction(G.order, G.irrep(lab).dim)


def test_printed_2minus_multiplicity_is_a_typo():
    # the shipped data keeps (v - xi^3)^3 as printed; with exponent 2 (mirroring s_{2+})
    # the value at v = 1 becomes |W| / 2, as it must
    s = load_schur_elements()["2-"]
    (cubed,) = [f for f in s.factors if f.xi_exponent == 3]
    assert (cubed.sign, cubed.multiplicity) == (-1, 3)
    assert schur_evaluate("2-", 0) != 24
    fixed = replace(s, factors=tuple(replace(f, multiplicity=2) if f is cubed else f
                                     for f in s.factors))
    assert fixed.evaluate(root_of_unity(0)) == 24
    # the zero set, and hence semisimplicity, is the same either way
    roots = {f.root for f in s.factors}
    assert roots == {f.root for f in fixed.factors}


def test_data_round_trip_is_byte_exact():
    assert dump_schur_elements(load_schur_elements()) == _data_text()


@given(st.integers(-48, 48), st.integers(1, 30))
def test_semisimplicity_criterion(m, d):
    c = Fraction(m, d)
    expected = not (c.denominator in (1, 2, 3, 4, 6, 12) and (c * 12) % 12 in (1, 3, 4, 5, 6, 7, 8, 9, 11))
    assert is_semisimple(c) == expected


@given(st.integers(-30, 30), st.integers(1, 24))
def test_root_comparison_agrees_with_evaluation(m, d):
    c = Fraction(m, d)
    v = root_of_unity(c / 2)
    from g12.cyclotomic import UnityRoot
    for lab, s in load_schur_elements().items():
        assert (not s.evaluate(v)) == s.vanishes_at(UnityRoot(c / 2))


def test_semisimple_examples():
    assert is_semisimple(Fraction(1, 6))
    assert is_semisimple(Fraction(1, 5))
    assert not is_semisimple(Fraction(1, 12))
    assert not is_semisimple(Fraction(-7, 12))
