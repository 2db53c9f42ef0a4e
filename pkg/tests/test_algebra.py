import math
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from fivemove.algebra import chebyshev_T, v1, v2, v2_identity_holds
from fivemove.algebra.cyclotomic import Cyclo40
from fivemove.algebra.laurent import LaurentPoly, LaurentPoly2
from fivemove.algebra.quotient import equal_up_to_unit, reduce_mod, reduce_mod_ideal_5

ZETA = complex(math.cos(-math.pi / 20), math.sin(-math.pi / 20))

polys = st.dictionaries(st.integers(-8, 8), st.integers(-5, 5), max_size=6).map(lambda d: LaurentPoly(d, "A"))
polys_t = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=6).map(lambda d: LaurentPoly(d, "t"))
polys2 = st.dictionaries(
    st.tuples(st.integers(-4, 4), st.integers(-3, 3)), st.integers(-4, 4), max_size=5
).map(LaurentPoly2)
cyclos = st.lists(st.integers(-4, 4), min_size=16, max_size=16).map(Cyclo40)


def t(coeffs):
    return LaurentPoly(coeffs, "t")


# --- Laurent polynomials ----------------------------------------------------

def test_no_zero_coefficients_stored():
    p = LaurentPoly({0: 1, 2: 0, -1: 3}, "A")
    assert p.terms() == {0: 1, -1: 3}
    assert (p - p).terms() == {}


@given(polys, polys, polys)
def test_laurent_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p and p * q == q * p
    assert p * 1 == p and p + 0 == p


@given(polys, polys)
def test_divexact_inverts_multiplication(p, q):
    if q.is_zero():
        return
    assert (p * q).divexact(q) == p


@given(polys2, polys2, polys2)
def test_laurent2_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys)
def test_json_round_trip(p):
    assert LaurentPoly.from_json(p.to_json(), "A") == p


# --- cyclotomic ring ----------------------------------------------------------

def test_root_of_unity_relations():
    z = Cyclo40.zeta()
    assert z ** 40 == Cyclo40.one()
    assert z ** 20 == -Cyclo40.one()
    assert z ** 10 != Cyclo40.one()


def test_zeta_is_exp_minus_pi_i_over_20():
    assert abs(Cyclo40.zeta(1).to_complex() - ZETA) < 1e-12


@given(cyclos, cyclos, cyclos)
@settings(max_examples=50)
def test_cyclo_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-6 * (1 + abs(a.to_complex() * b.to_complex()))


@given(cyclos)
@settings(max_examples=50)
def test_squared_modulus_is_real_and_nonnegative(a):
    m = a * a.conj()
    assert m.is_real()
    assert m.to_complex().real >= -1e-9


def test_units_invert():
    for k in range(40):
        z = Cyclo40.zeta(k)
        assert z * z.inverse() == Cyclo40.one()
    golden = 1 + Cyclo40.zeta(8) + Cyclo40.zeta(-8)
    assert golden * golden.inverse() == Cyclo40.one()


def test_minimal_polynomial_vanishes():
    gen = LaurentPoly({16: 1, 12: -1, 8: 1, 4: -1, 0: 1}, "A")
    assert gen.substitute(Cyclo40.zeta(-1), Cyclo40.one()).is_zero()


def test_golden_ratio_at_tenth_root():
    tt = Cyclo40.zeta(4)
    assert abs((tt + tt.conj()).to_complex().real - 1.61803) < 1e-5


def test_modulus_one_plus_t():
    tt = Cyclo40.zeta(-4)
    m = (1 + tt) * (1 + tt).conj()
    assert abs(math.sqrt(m.to_complex().real) - 2 * math.cos(math.pi / 10)) < 1e-12
    assert abs(math.sqrt(m.to_complex().real) - 1.90211) < 1e-5


# --- quotients ----------------------------------------------------------------

def test_reduce_t4():
    assert reduce_mod(t({4: 1}), "I_t").rep == t({3: 1, 2: -1, 1: 1, 0: -1})


def test_reduce_zero():
    assert reduce_mod(t({}), "I_t").rep.is_zero()


def test_reduce_product_matches_minus_t4():
    lhs = reduce_mod(t({0: 1, 1: -1}) * t({0: 1, 2: 1}), "I_t").rep
    assert lhs == reduce_mod(t({4: -1}), "I_t").rep
    assert lhs == t({3: -1, 2: 1, 1: -1, 0: 1})


def test_representative_degree_below_generator():
    rng = random.Random(7)
    for _ in range(50):
        p = t({rng.randint(-20, 20): rng.randint(-3, 3) for _ in range(5)})
        assert reduce_mod(p, "I_t").rep.max_exp() <= 3 or reduce_mod(p, "I_t").rep.is_zero()
        q = LaurentPoly(p.terms(), "A")
        r = reduce_mod(q, "I_A").rep
        assert r.is_zero() or r.max_exp() <= 15


@given(polys_t, polys_t)
@settings(max_examples=200)
def test_reduce_is_homomorphism_t(p, q):
    lhs = reduce_mod(p * q, "I_t").rep
    rhs = reduce_mod(reduce_mod(p, "I_t").rep * reduce_mod(q, "I_t").rep, "I_t").rep
    assert lhs == rhs
    assert reduce_mod(p + q, "I_t").rep == reduce_mod(reduce_mod(p, "I_t").rep + reduce_mod(q, "I_t").rep, "I_t").rep


@given(polys)
@settings(max_examples=60)
def test_reduce_then_evaluate_matches_evaluation(p):
    z = Cyclo40.zeta(-1)
    assert reduce_mod(p, "I_A").rep.substitute(z, Cyclo40.one()) == p.substitute(z, Cyclo40.one())


def test_ideal_5_examples():
    a = lambda c: LaurentPoly(c, "a")  # noqa: E731
    assert reduce_mod_ideal_5(a({6: 1, 4: -3, 2: 3, 0: -1})).rep.is_zero()
    assert reduce_mod_ideal_5(a({3: 5, -2: 10})).rep.is_zero()
    f41 = a({-4: 2, -2: 6, 0: 9, 2: 6, 4: 2})
    target = a({-4: 2}) * a({4: 1, 0: 1}) * a({2: 1, 0: -1}) ** 2
    assert reduce_mod_ideal_5(f41).rep == reduce_mod_ideal_5(target).rep


def test_equal_up_to_unit():
    p = LaurentPoly({0: 1, 4: 1}, "A")
    assert equal_up_to_unit(p, -p.shift(12))
    assert not equal_up_to_unit(p, p + 1)


# --- Chebyshev coefficients ----------------------------------------------------

def test_v1_values():
    x = LaurentPoly.mono(1, var="x")
    assert v1(1) == LaurentPoly.const(1, "x")
    assert v1(2) == x
    assert v1(5) == x ** 4 - 3 * x ** 2 + 1


def test_chebyshev_closed_form():
    # T_{k-1}(p + 1/p) = (p^k - p^-k)/(p - 1/p)
    p = LaurentPoly.mono(1, var="p")
    x = p + p.inverted()
    for k in range(1, 13):
        lhs = chebyshev_T(k - 1).substitute(x, LaurentPoly.const(1, "p")) * (p - p.inverted())
        assert lhs == p ** k - p ** (-k)


def test_v2_on_diagonal():
    # v2^(5)(a, a + 1/a) = a^-4 (4 + 3a^2 + 2a^4 + a^6)
    a = LaurentPoly2.mono(1, 0)
    diag = v2(5).evaluate(a, a + a ** -1, LaurentPoly2.const(1))
    assert diag == LaurentPoly2({(-4, 0): 4, (-2, 0): 3, (0, 0): 2, (2, 0): 1})


def test_v2_identity():
    for k in range(1, 9):
        assert v2_identity_holds(k)
