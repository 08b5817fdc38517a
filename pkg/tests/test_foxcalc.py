from hypothesis import given, strategies as st

from foxpoly.foxcalc import (FreeRingElement, chain_rule_check, fox_derivative, fox_term_list,
                             fundamental_formula_check, inverse_rule_check, product_rule_check)
from foxpoly.words import NielsenMove, Word, parse_word

letters = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=30)
words = letters.map(lambda ls: Word(tuple(ls)))


def w(s):
    return parse_word(s)


def ring(*pairs):
    return FreeRingElement({w(s): c for s, c in pairs})


def test_basic_derivatives():
    assert fox_derivative(w("x"), 1) == 1
    assert fox_derivative(w("y"), 1) == 0
    assert fox_derivative(w("X"), 1) == ring(("X", -1))
    assert fox_derivative(Word(), 2) == 0


def test_commutator_derivatives():
    # d[x,y]/dx = 1 - xyX, d[x,y]/dy = x - xyXY
    r = w("xyXY")
    assert fox_derivative(r, 1) == ring(("", 1), ("xyX", -1))
    assert fox_derivative(r, 2) == ring(("x", 1), ("xyXY", -1))


def test_power_derivative():
    assert fox_derivative(w("yyy"), 2) == ring(("", 1), ("y", 1), ("yy", 1))
    assert fox_derivative(w("YY"), 2) == ring(("Y", -1), ("YY", -1))


def test_term_list_signs_and_positions():
    terms = fox_term_list(w("xyXY"), 1)
    assert [(t.sign, t.word.render(), t.position) for t in terms] == [
        (1, "", 0), (-1, "xyX", 2)]


def test_term_list_accepts_unreduced_relator():
    terms = fox_term_list(w("YxyyXy"), 1)
    assert len(terms) == 2
    assert terms.collapse() == fox_derivative(w("YxyyXy"), 1)


@given(words)
def test_fundamental_formula(u):
    assert fundamental_formula_check(u)


@given(words)
def test_scan_matches_recursion(u):
    for z in (1, 2):
        assert fox_term_list(u, z).collapse() == fox_derivative(u, z)


@given(words.filter(lambda u: len(u) <= 15), st.sampled_from(list(NielsenMove)), st.sampled_from([1, 2]))
def test_chain_rule(u, m, z):
    assert chain_rule_check(m, u, z)


@given(words, words, st.sampled_from([1, 2]))
def test_product_and_inverse_rules(u, v, z):
    assert product_rule_check(u, v, z)
    assert inverse_rule_check(u, z)


def test_ring_arithmetic():
    a = ring(("x", 2), ("", 1))
    assert a - a == 0
    assert (a * w("X")) == ring(("", 2), ("X", 1))
    assert 1 + a == ring(("x", 2), ("", 2))
