import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from delpair.arith import (
    GF,
    INF,
    QQ,
    ZZ,
    MultiPoly,
    ParseError,
    PolynomialRing,
    UPoly,
    factor_finite_field,
    factor_integer,
    is_prime,
    parse_base_element,
    parse_domain,
    parse_poly,
    upoly_gcd,
    upoly_xgcd,
    valuation,
)
from delpair.arith.primes import is_irreducible

T = sympy.Symbol("t")


def to_sympy(f: UPoly):
    return sympy.Poly([int(c) for c in reversed(f.c)], T, modulus=f.dom.p)


def rand_upoly(rng, p, deg):
    k = GF(p)
    return UPoly([rng.randrange(p) for _ in range(deg)] + [rng.randrange(1, p)], k)


# -- scalars ---------------------------------------------------------------


def test_gf_values_are_reduced():
    k = GF(7)
    assert int(k(10)) == 3
    assert int(k(-1)) == 6
    assert k(3) * k(5) == k(1)
    assert k(3) / k(5) == k(2)


def test_gf_rejects_composite_modulus():
    with pytest.raises(ValueError):
        GF(15)


@given(st.integers(1, 1000), st.integers(1, 1000))
def test_rational_inverse_is_one(a, b):
    x = QQ(Fraction(a, b))
    assert x * (1 / x) == 1
    assert QQ(x) == x


@given(st.integers(0, 100), st.integers(0, 100), st.integers(0, 100))
def test_prime_field_axioms(a, b, c):
    k = GF(101)
    x, y, z = k(a), k(b), k(c)
    assert x * (y + z) == x * y + x * z
    assert (x + y) - y == x
    if y != 0:
        assert (x / y) * y == x


def test_parse_domain_tags():
    assert parse_domain("ZZ") == ZZ
    assert parse_domain("QQ") == QQ
    assert parse_domain("GF(7)") == GF(7)
    assert parse_domain("GF(7)[t]") == PolynomialRing(GF(7))
    with pytest.raises(ValueError):
        parse_domain("RR")


# -- primes and valuations -----------------------------------------------


def test_valuation_examples():
    assert valuation(50, 5) == 2
    assert valuation(7, 5) == 0
    assert valuation(0, 5) is INF
    k = GF(7)
    R = PolynomialRing(k)
    t = R.gen()
    assert valuation(t**3 + t**2, t) == 2


def test_valuation_needs_prime():
    with pytest.raises(ValueError):
        valuation(12, 4)


def test_valuation_of_fraction_is_signed():
    assert valuation(Fraction(3, 50), 5) == -2


@pytest.mark.parametrize("n", [2, 97, 1001, 2**31 - 1, 600851475143, 10**12 + 39, 3 * 5**4 * 7**2])
def test_factor_integer_matches_sympy(n):
    assert factor_integer(n) == dict(sympy.factorint(n))


def test_factor_integer_signs_and_units():
    assert factor_integer(-12) == {2: 2, 3: 1}
    assert factor_integer(1) == {}
    with pytest.raises(ValueError):
        factor_integer(0)


def test_is_prime_agrees_with_sympy():
    for n in range(-5, 3000):
        assert is_prime(n) == sympy.isprime(n)


# -- univariate polynomials ------------------------------------------------


def test_upoly_division_identity():
    rng = random.Random(1)
    for _ in range(50):
        a, b = rand_upoly(rng, 13, rng.randint(0, 6)), rand_upoly(rng, 13, rng.randint(0, 4))
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree() < b.degree()


def test_upoly_gcd_matches_sympy():
    rng = random.Random(2)
    for _ in range(40):
        c = rand_upoly(rng, 11, rng.randint(0, 2))
        a, b = rand_upoly(rng, 11, rng.randint(0, 4)) * c, rand_upoly(rng, 11, rng.randint(0, 4)) * c
        g = upoly_gcd(a, b)
        ref = sympy.gcd(to_sympy(a), to_sympy(b)).monic()
        assert to_sympy(g) == ref


def test_xgcd_bezout_identity():
    rng = random.Random(3)
    for _ in range(40):
        a, b = rand_upoly(rng, 7, rng.randint(0, 5)), rand_upoly(rng, 7, rng.randint(0, 5))
        g, s, t = upoly_xgcd(a, b)
        assert s * a + t * b == g


def test_gcd_over_integers_is_primitive():
    a = UPoly([-4, 0, 2], ZZ)  # 2x^2 - 4
    b = UPoly([6, 3], ZZ)  # 3x + 6
    assert upoly_gcd(a * UPoly([1, 1], ZZ), b * UPoly([1, 1], ZZ)) == UPoly([1, 1], ZZ)


# -- finite field factorization ------------------------------------------


def test_factor_examples():
    k5, k7 = GF(5), GF(7)
    f = UPoly([1, 0, 1], k5)
    assert factor_finite_field(f) == [(UPoly([2, 1], k5), 1), (UPoly([3, 1], k5), 1)]
    assert factor_finite_field(UPoly([0, 1], k7)) == [(UPoly([0, 1], k7), 1)]
    assert factor_finite_field(UPoly([1, 0, 1], k7)) == [(UPoly([1, 0, 1], k7), 1)]


def test_factor_rejects_zero():
    with pytest.raises(ValueError):
        factor_finite_field(UPoly([], GF(5)))


@pytest.mark.parametrize("p", [2, 3, 5, 101, 1009])
def test_factor_matches_sympy(p):
    rng = random.Random(p)
    for _ in range(15):
        f = rand_upoly(rng, p, rng.randint(1, 9))
        if rng.random() < 0.3:
            f = f * f
        mine = factor_finite_field(f)
        prod = UPoly([f.lc()], f.dom)
        for g, e in mine:
            assert g.is_monic()
            prod = prod * g**e
        assert prod == f
        lc, ref = to_sympy(f).factor_list()
        assert sorted((g.degree(), e) for g, e in mine) == sorted((g.degree(), e) for g, e in ref)


def test_small_factors_have_no_roots():
    rng = random.Random(9)
    k = GF(7)
    for _ in range(30):
        for g, _ in factor_finite_field(rand_upoly(rng, 7, rng.randint(1, 6))):
            if 2 <= g.degree() <= 3:
                assert all(g(k(a)) != 0 for a in range(7))
            assert is_irreducible(g)


# -- parsing and multivariate polynomials ----------------------------------


def test_parse_poly_roundtrip():
    names = ["x0", "x1", "x2"]
    for text in ["x0^2 + 3*x1*x2 - 1/2", "x0 - x1", "2*x2^3"]:
        p = parse_poly(text, names, QQ)
        assert parse_poly(p.to_str(names), names, QQ) == p


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_poly("x0 +", ["x0"], QQ)
    with pytest.raises(ParseError):
        parse_poly("x0/x1", ["x0", "x1"], QQ)
    with pytest.raises(ParseError):
        parse_poly("z", ["x0"], QQ)


def test_parse_base_element_over_kt():
    R = PolynomialRing(GF(7))
    assert parse_base_element("t^2 + 1", R) == UPoly([1, 0, 1], GF(7))


def test_multipoly_zero_degree_sentinel():
    assert MultiPoly.zero(2, QQ).degree() == -1


def test_multipoly_arithmetic_against_sympy():
    names = ["x0", "x1"]
    x0, x1 = sympy.symbols("x0 x1")
    a = parse_poly("x0^2 - 3*x1 + 2", names, QQ)
    b = parse_poly("x0*x1 + 1/3", names, QQ)
    got = sympy.expand(sympy.sympify((a * b - a).to_str(names).replace("^", "**")))
    ref = sympy.expand((x0**2 - 3 * x1 + 2) * (x0 * x1 + sympy.Rational(1, 3)) - (x0**2 - 3 * x1 + 2))
    assert sympy.simplify(got - ref) == 0
