import random

import pytest

from delpair.arith import GF
from delpair.suites import SUITES, cross_backend_instance, random_ternary, run_suite


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_on_a_small_run(name):
    rep = run_suite(name, seed=7, n=5)
    assert rep.ok, rep.failures
    assert rep.as_dict()["passed"] == "5"


def test_default_sizes():
    assert {k: v[1] for k, v in SUITES.items()} == {
        "c1-identities": 500,
        "multilinearity": 100,
        "vanishing": 100,
        "local-global": 50,
        "weil": 200,
        "intwithrat": 50,
        "n1-expansion": 50,
        "cross-backend": 20,
    }


def test_suite_options():
    assert run_suite("weil", seed=1, n=5, field="QQ").ok
    assert run_suite("intwithrat", seed=1, n=5, base="GF(7)[t]").ok
    assert run_suite("cross-backend", seed=1, n=3, p=7).ok


def test_seeded_runs_repeat():
    assert run_suite("intwithrat", seed=3, n=4).as_dict() == run_suite("intwithrat", seed=3, n=4).as_dict()


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_crashing_instance_is_a_failure(monkeypatch):
    import delpair.suites as su

    def boom(rng, budget, **kw):
        raise ArithmeticError("bad instance")

    monkeypatch.setitem(su.SUITES, "vanishing", (boom, 2))
    rep = run_suite("vanishing")
    assert not rep.ok
    assert rep.failures[0]["error"] == "ArithmeticError: bad instance"


def test_random_ternary_is_homogeneous():
    rng = random.Random(0)
    for d in range(1, 4):
        F = random_ternary(GF(101), d, rng)
        assert F.is_homogeneous() and F.degree() == d


def test_cross_backend_instance_agrees():
    rng = random.Random(2)
    for p in (3, 5, 101):
        F, G, a, b = cross_backend_instance(rng, p)
        assert a == b
