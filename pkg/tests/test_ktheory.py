import random

from hypothesis import given, settings
from hypothesis import strategies as st

from delpair.intersect import ProjScheme
from delpair.ktheory import (
    C1Op,
    TwistClass,
    c1_apply,
    c1_product,
    check_commutativity,
    check_identity_i,
    inclusion_exclusion,
)

O = TwistClass.sheaf

classes = st.dictionaries(st.integers(-6, 6), st.integers(-4, 4), max_size=5).map(TwistClass)
twists = st.integers(-5, 5)


def test_twist_class_drops_zero_terms():
    assert TwistClass({1: 0, 2: 3}).terms == {2: 3}
    assert (O(1) - O(1)).is_zero()
    assert O(2) + O(2) == 2 * O(2)


def test_c1_apply_examples():
    assert c1_apply(C1Op(0), O(0) + 3 * O(5)).is_zero()
    assert c1_apply(C1Op(1), O(0)) == O(0) - O(-1)
    F = O(3) + 2 * O(0)
    assert c1_apply(C1Op(2), F) == O(3) - O(1) + 2 * O(0) - 2 * O(-2)


def test_c1_product_examples():
    a, b = 2, 5
    assert c1_product([a, b], O(0)) == O(0) - O(-a) - O(-b) + O(-a - b)
    F = O(4) - O(1)
    assert c1_product([], F) == F
    assert c1_product([1, 1], O(0)) == O(0) - 2 * O(-1) + O(-2)


def test_identity_and_commutativity_examples():
    assert check_identity_i(1, 2, O(0))
    assert check_commutativity(1, 2, O(0))
    rng = random.Random(0)
    F = TwistClass({rng.randint(-9, 9): rng.randint(-3, 3) or 1 for _ in range(5)})
    assert check_identity_i(3, -1, F)
    assert check_commutativity(4, -2, F)
    for b in range(-3, 4):
        assert check_identity_i(0, b, F)
        assert check_commutativity(b, b, F)


def test_bidegree_twists():
    F = TwistClass.sheaf((0, 0))
    assert c1_apply(C1Op((1, 2)), F) == TwistClass({(0, 0): 1, (-1, -2): -1})
    assert check_identity_i((1, 0), (0, 1), F)
    assert check_commutativity((2, -1), (0, 3), F)


@settings(max_examples=100, deadline=None)
@given(twists, classes, classes)
def test_c1_additive(a, F, G):
    assert c1_apply(C1Op(a), F + G) == c1_apply(C1Op(a), F) + c1_apply(C1Op(a), G)


@settings(max_examples=100, deadline=None)
@given(st.lists(twists, max_size=5), classes)
def test_inclusion_exclusion_matches_iteration(degrees, F):
    iterated = F
    for a in reversed(degrees):
        iterated = c1_apply(C1Op(a), iterated)
    assert inclusion_exclusion(degrees, F) == iterated == c1_product(degrees, F)


@settings(max_examples=100, deadline=None)
@given(twists, twists, classes)
def test_identity_i_and_commutativity_hold(a, b, F):
    assert check_identity_i(a, b, F)
    assert check_commutativity(a, b, F)


def test_extra_factor_kills_chi():
    # the class itself is nonzero, only its Euler characteristic vanishes
    rng = random.Random(4)
    for r in range(1, 4):
        X = ProjScheme.projective_space(r)
        for _ in range(10):
            degrees = [rng.randint(-4, 4) for _ in range(r + 1)]
            cls = c1_product(degrees, O(0))
            assert X.chi_class(cls) == 0
    assert not c1_product([1, 1, 1], O(0)).is_zero()
