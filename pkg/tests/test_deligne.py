import random
from math import comb, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from delpair.arith import GF, QQ, BinaryForm
from delpair.deligne import (
    DetClass,
    RelBundle,
    SplitFamily,
    chi_fiber,
    deligne_pairing,
    det_chi_check,
    det_rf,
    n1_expansion_check,
    norm_pairing,
    proj_cohomology_chi,
    pullback_axiom_check,
    restriction_axiom_check,
    restriction_degree,
)
from delpair.ktheory import TwistClass

small = st.integers(-3, 3)
bundles_st = st.builds(RelBundle, small, small)


def chern_degree(m, bundles):
    """Degree from the Chern character: ch(O - L) = -h + ..., so the top part of
    prod ch(O - L_i) is (-1)^(m+1) prod h_i with h = aH + bP, H^m P = 1."""
    top = sum(L.b * prod(M.a for j, M in enumerate(bundles) if j != i) for i, L in enumerate(bundles))
    return (-1) ** (m + 1) * top


def test_proj_cohomology_examples():
    assert proj_cohomology_chi(1, 3) == (4, (4, 0))
    assert proj_cohomology_chi(1, -1) == (0, (0, 0))
    assert proj_cohomology_chi(2, -3) == (1, (0, 1))


@pytest.mark.parametrize("m", range(0, 5))
def test_chi_is_binomial_polynomial(m):
    for a in range(-8, 8):
        poly = prod(a + i for i in range(1, m + 1)) // prod(range(1, m + 1))
        chi, (h0, hm) = proj_cohomology_chi(m, a)
        assert chi == poly == chi_fiber(m, a)
        assert h0 == (comb(a + m, m) if a >= 0 else 0)


def test_det_rf_examples():
    fam = SplitFamily(1)
    assert det_rf(RelBundle(1, 1), fam) == DetClass(2, 2)
    assert det_rf(RelBundle(0, 0), fam) == DetClass(0, 1)
    assert det_rf(TwistClass({(0, 0): 1, (1, 0): -1}), fam) == DetClass(0, -1)


def test_det_rf_on_a_point_has_no_degree():
    assert det_rf(RelBundle(2, 5), SplitFamily(1, "point")).degree == 0


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(st.tuples(small, small), small, max_size=4), st.dictionaries(st.tuples(small, small), small, max_size=4))
def test_det_rf_additive(f, g):
    fam = SplitFamily(2)
    F, G = TwistClass(f), TwistClass(g)
    assert det_rf(F + G, fam) == det_rf(F, fam) * det_rf(G, fam)


def test_pairing_examples():
    fam = SplitFamily(1)
    assert deligne_pairing(fam, [RelBundle(1, 0), RelBundle(0, 1)]) == DetClass(1, 0)
    for b0, a1, b1 in [(2, 3, -1), (-1, 4, 7), (5, 0, 2)]:
        assert deligne_pairing(fam, [RelBundle(0, b0), RelBundle(a1, b1)]).degree == b0 * a1
    assert deligne_pairing(fam, [RelBundle(0, 0), RelBundle(0, 0)]) == DetClass(0, 0)


def test_pairing_arity():
    with pytest.raises(ValueError):
        deligne_pairing(SplitFamily(1), [RelBundle(1, 1)])
    with pytest.raises(ValueError):
        deligne_pairing(SplitFamily(0), [RelBundle(1, 1)])


def test_pairing_matches_chern_character():
    rng = random.Random(1)
    for m in (1, 2, 3):
        fam = SplitFamily(m)
        for _ in range(30):
            bs = [RelBundle(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(m + 1)]
            assert deligne_pairing(fam, bs) == DetClass(chern_degree(m, bs), 0)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 3), st.data())
def test_pairing_multilinear_and_symmetric(m, data):
    fam = SplitFamily(m)
    bs = data.draw(st.lists(bundles_st, min_size=m + 1, max_size=m + 1))
    extra = data.draw(bundles_st)
    split = deligne_pairing(fam, bs) * deligne_pairing(fam, [extra] + bs[1:])
    assert deligne_pairing(fam, [bs[0] * extra] + bs[1:]) == split
    assert deligne_pairing(fam, list(reversed(bs))) == deligne_pairing(fam, bs)
    assert deligne_pairing(fam, bs).grade == 0


def test_norm_pairing_examples():
    assert norm_pairing([4]) == DetClass(4, 0)
    assert norm_pairing([2, 2, 2]) == DetClass(6, 0)
    assert norm_pairing([0]) == DetClass(0, 0)
    assert norm_pairing([1, -3, 5]).degree == 3


def test_n1_expansion():
    fam = SplitFamily(1)
    assert n1_expansion_check(fam, RelBundle(1, 2), RelBundle(3, -1))
    assert n1_expansion_check(fam, RelBundle(0, 0), RelBundle(0, 0))
    rng = random.Random(2)
    for _ in range(50):
        L = RelBundle(rng.randint(-3, 3), rng.randint(-3, 3))
        M = RelBundle(rng.randint(-3, 3), rng.randint(-3, 3))
        assert n1_expansion_check(fam, L, M)
    with pytest.raises(ValueError):
        n1_expansion_check(SplitFamily(2), L, M)


def test_det_chi():
    for m in (0, 1, 2):
        fam = SplitFamily(m)
        for a in range(-3, 4):
            for b in range(-3, 4):
                for beta in range(-3, 4):
                    assert det_chi_check(fam, a, b, beta)


def test_pullback_axiom_odd_relative_dimension():
    rng = random.Random(3)
    for m in (1, 3):
        fam = SplitFamily(m)
        for _ in range(20):
            bs = [RelBundle(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(m)]
            assert pullback_axiom_check(fam, rng.randint(-3, 3), bs)


def test_pullback_sign_in_even_relative_dimension():
    # the literal c1(L^-1) formula flips the sign of the pullback degree when m is even
    fam = SplitFamily(2)
    bs = [RelBundle(2, 1), RelBundle(3, -2)]
    assert deligne_pairing(fam, [RelBundle(0, 3)] + bs) == DetClass(-18, 0)
    assert not pullback_axiom_check(fam, 3, bs)
    assert pullback_axiom_check(fam, 0, bs)


def F(coeffs, dom=QQ):
    return BinaryForm(coeffs, dom)


def test_restriction_examples():
    fam = SplitFamily(1)
    # x0*y1 - x1*y0 = x0 A(y) + x1 B(y) with A = y1, B = -y0: the diagonal
    A, B = F([0, 1]), F([-1, 0])
    assert restriction_degree(A, B, RelBundle(2, 0)) == 2
    assert restriction_axiom_check(fam, A, B, RelBundle(2, 0))
    assert deligne_pairing(fam, [RelBundle(2, 0), RelBundle(1, 1)]).degree == 2
    assert restriction_degree(A, B, RelBundle(0, 0)) == 0
    assert restriction_axiom_check(fam, A, B, RelBundle(0, 0))


def test_restriction_random():
    rng = random.Random(4)
    k = GF(101)
    fam = SplitFamily(1, "P1", k)
    done = 0
    while done < 20:
        c = rng.randint(0, 2)
        A = F([rng.randrange(101) for _ in range(c + 1)], k)
        B = F([rng.randrange(101) for _ in range(c + 1)], k)
        if A.is_zero() or B.is_zero():
            continue
        try:
            deg = restriction_degree(A, B, RelBundle(1, 0))
        except ValueError:
            continue
        L = RelBundle(rng.randint(-3, 3), rng.randint(-3, 3))
        assert deg == c
        assert restriction_degree(A, B, L) == L.a * c + L.b
        assert restriction_axiom_check(fam, A, B, L)
        done += 1


def test_restriction_rejects_non_sections():
    with pytest.raises(ValueError, match="unsupported"):
        restriction_degree(F([0, 1]), F([0, 2]), RelBundle(1, 0))
    with pytest.raises(ValueError):
        restriction_axiom_check(SplitFamily(2), F([0, 1]), F([-1, 0]), RelBundle(1, 0))
