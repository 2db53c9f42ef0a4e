import itertools
import math
from math import gcd

import pytest

from fivemove.algebra.laurent import LaurentPoly
from fivemove.bracket import bracket, v_abs
from fivemove.diagram import apply_twist_move, enumerate_sites
from fivemove.notation import Frac
from fivemove.tangles import (
    CLASS12,
    RationalLinkClass,
    cf_of,
    classify12,
    classify_rational_link,
    frac_of_cf,
    integer_vector,
    rational_link,
    rational_tangle,
    tangle_bracket_vector,
    tangle_star,
    vector_denominator,
    vector_numerator,
)

CLASS_VALUE = {
    RationalLinkClass.T1: 1.0,
    RationalLinkClass.T2: 2 * math.cos(math.pi / 10),
    RationalLinkClass.H: 2 * math.cos(math.pi / 5),
    RationalLinkClass.FIGURE_EIGHT: 0.0,
}


def A(c):
    return LaurentPoly(c, "A")


def test_continued_fractions():
    assert cf_of(Frac(5, 2)) == ([2, 2], False)
    assert cf_of(Frac(3, 2)) == ([1, 2], False)
    assert cf_of(Frac(1, 0)) == ([], True)
    for p in range(-15, 16):
        for q in range(1, 12):
            if gcd(p, q) == 1:
                cf, inf = cf_of(Frac(p, q))
                assert frac_of_cf(cf, inf) == Frac(p, q)
                assert all(a >= 0 for a in cf) or all(a <= 0 for a in cf)


def test_classify12_examples():
    assert classify12(Frac(3, 5)) == Frac(2, 5)
    assert classify12(Frac(9, 4)) == Frac(1, 1)
    assert classify12(Frac(1, 0)) == Frac(1, 0)


def test_classify12_exhaustive():
    hits = {}
    for p, q in itertools.product(range(5), repeat=2):
        if (p, q) == (0, 0):
            continue
        # a coprime lift of the residue pair
        pp, qq = next((p + 5 * i, q + 5 * j) for i in range(5) for j in range(5) if gcd(p + 5 * i, q + 5 * j) == 1)
        hits.setdefault(classify12(Frac(pp, qq)), set()).add((p, q))
    assert set(hits) == set(CLASS12)
    # the twelve classes cover the 24 residue pairs two at a time
    assert all(len(v) == 2 for v in hits.values())


def test_classify12_symmetric_criterion():
    # p/q ~ p'/q' iff (p,q) = +-(p',q') mod 5
    for p, q in itertools.product(range(-12, 13), range(0, 13)):
        if gcd(p, q) != 1:
            continue
        rep = classify12(Frac(p, q))
        a, b = rep.p % 5, rep.q % 5
        assert (p % 5, q % 5) in ((a, b), ((-a) % 5, (-b) % 5))


def test_classify12_mirror():
    for p, q in itertools.product(range(-12, 13), range(0, 13)):
        if gcd(p, q) == 1:
            assert classify12(-Frac(p, q)) == classify12(-classify12(Frac(p, q)))


def test_classify_rational_link_examples():
    assert classify_rational_link(Frac(5, 2)) == RationalLinkClass.FIGURE_EIGHT
    assert classify_rational_link(Frac(20, 9)) == RationalLinkClass.T2
    assert classify_rational_link(Frac(3, 1)) == RationalLinkClass.H


def test_classifier_against_bracket():
    bad = []
    for p in range(1, 22):
        for q in range(1, p + 1):
            if gcd(p, q) == 1:
                got = v_abs(rational_link(Frac(p, q)), None)
                if abs(got - CLASS_VALUE[classify_rational_link(Frac(p, q))]) > 1e-6:
                    bad.append((p, q))
    assert bad == []


def test_basis_vectors():
    assert tangle_bracket_vector(rational_tangle(Frac(0, 1))) == (A({0: 1}), A({}))
    assert tangle_bracket_vector(rational_tangle(Frac(1, 0))) == (A({}), A({0: 1}))
    assert tangle_bracket_vector(rational_tangle(Frac(1, 1))) == (A({-1: 1}), A({1: 1}))
    assert tangle_bracket_vector(rational_tangle(Frac(1, 1))) == integer_vector(1)


def test_example_vectors():
    assert tangle_bracket_vector(rational_tangle(Frac(1, 2))) == (A({0: 1, -4: -1}), A({2: 1}))
    assert tangle_bracket_vector(rational_tangle(Frac(2, 5))) == (A({-8: 1, -4: -1, 0: 2, 4: -1}), A({2: 1, 6: -1}))


def test_hopf_as_denominator_of_half():
    assert bracket(rational_tangle(Frac(1, 2)).denominator()) == A({4: -1, -4: -1})


def test_star():
    e_h = (A({0: 1}), A({}))
    assert tangle_star(e_h, e_h) == e_h
    half = tangle_bracket_vector(rational_tangle(Frac(1, 2)))
    both = tangle_star(half, half)
    tt = rational_tangle(Frac(1, 2)).hsum(rational_tangle(Frac(1, 2)))
    assert vector_numerator(both) == bracket(tt.numerator())
    for u, v in [(half, integer_vector(3)), (integer_vector(-2), half)]:
        assert vector_denominator(tangle_star(u, v)) == vector_denominator(u) * vector_denominator(v)


def test_integer_vectors_match_diagrams():
    for s in range(-4, 5):
        assert integer_vector(s) == tangle_bracket_vector(rational_tangle(Frac(s, 1)))


def test_vectors_of_random_fractions():
    for p, q in [(7, 3), (-5, 3), (11, 4), (13, 8)]:
        v = tangle_bracket_vector(rational_tangle(Frac(p, q)))
        assert vector_numerator(v) == bracket(rational_link(Frac(p, q)))


def test_two_five_denominator_vanishes():
    d = rational_tangle(Frac(2, 5)).denominator()
    assert v_abs(d) < 1e-12


def test_three_halves_to_two_thirds_by_five_twists():
    # equal up to the framing factor (-A^3)^j
    target = bracket(rational_link(Frac(2, 3)))
    framed = [target * LaurentPoly.mono(3 * j, (-1) ** (j % 2)) for j in range(-8, 9)]
    d = rational_link(Frac(3, 2))
    found = [s for s in enumerate_sites(d) for k in (5, -5) if bracket(apply_twist_move(d, s, k), None) in framed]
    assert found
