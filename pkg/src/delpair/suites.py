"""Randomized verification suites.

Every suite draws its instances from one ``random.Random(seed)``, so a
(seed, n) pair always reproduces the same instances and the same table.
Degenerate draws (shared components, non-coprime forms) are redrawn; they
are outside the identities' hypotheses, not failures.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .arith.domains import QQ, GF, Domain
from .arith.forms import BinaryForm, resultant
from .arith.multipoly import MultiPoly
from .arith.upoly import UPoly
from .arithsurf import (
    ArithDivisor,
    BaseS,
    CommonComponentError,
    RationalFunc,
    intwithrat_sides,
    pairing,
    shift_sides,
    weil_reciprocity_sides,
)
from .deligne import (
    RelBundle,
    SplitFamily,
    deligne_pairing,
    det_chi_check,
    n1_expansion_check,
)
from .grobner import DEFAULT_BUDGET
from .intersect import ProjScheme, total_multiplicity, vanishing_check
from .ktheory import TwistClass, check_commutativity, check_identity_i

# -- random objects ------------------------------------------------------


def random_twist_class(rng: random.Random, width: int = 4, span: int = 5) -> TwistClass:
    return TwistClass({rng.randint(-span, span): rng.randint(-3, 3) for _ in range(rng.randint(1, width))})


def random_base_coeff(B: BaseS, rng: random.Random, height: int = 20, tdeg: int = 2):
    if B.kind == "ZZ":
        return rng.randint(-height, height)
    if B.kind == "field":
        if B.field == QQ:
            return B.field(rng.randint(-height, height))
        return B.field(rng.randrange(B.field.p))
    k = B.field
    return UPoly([rng.randrange(k.p) if k != QQ else rng.randint(-height, height) for _ in range(rng.randint(0, tdeg + 1))], k)


def random_form(B: BaseS, d: int, rng: random.Random, height: int = 20, tdeg: int = 2) -> BinaryForm:
    while True:
        F = BinaryForm([random_base_coeff(B, rng, height, tdeg) for _ in range(d + 1)], B.ring)
        if not F.is_zero():
            return F


def random_func(B: BaseS, rng: random.Random, dmax: int = 2, height: int = 20) -> RationalFunc:
    d = rng.randint(1, dmax)
    return RationalFunc(B, random_form(B, d, rng, height), random_form(B, d, rng, height))


def random_divisor(B: BaseS, rng: random.Random, height: int = 20, effective: bool = False) -> ArithDivisor:
    D = ArithDivisor(B)
    for _ in range(rng.randint(1, 2)):
        F = random_form(B, rng.randint(1, 2), rng, height)
        if F.is_constant():
            continue
        n = rng.choice([1, 2]) if effective else rng.choice([1, 2, -1])
        D = D + n * ArithDivisor.of_form(B, F)
    return D


def random_ternary(dom: Domain, d: int, rng: random.Random) -> MultiPoly:
    terms = {}
    for i in range(d + 1):
        for j in range(d + 1 - i):
            c = rng.randrange(dom.p) if dom != QQ else rng.randint(-5, 5)
            if c:
                terms[(i, j, d - i - j)] = dom(c)
    return MultiPoly(terms, 3, dom)


# -- suite machinery -----------------------------------------------------


@dataclass
class SuiteReport:
    name: str
    seed: int
    n: int
    passed: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.passed == self.n

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "seed": str(self.seed),
            "n": str(self.n),
            "passed": str(self.passed),
            "failed": str(len(self.failures)),
            "status": "pass" if self.ok else "fail",
            "failures": self.failures,
        }


def _redraw(draw, tries: int = 200):
    for _ in range(tries):
        try:
            return draw()
        except CommonComponentError:
            continue
    raise RuntimeError("could not draw a non-degenerate instance")


def inst_c1(rng, budget, **kw):
    a, b = rng.randint(-6, 6), rng.randint(-6, 6)
    F = random_twist_class(rng)
    ok = check_identity_i(a, b, F) and check_commutativity(a, b, F)
    return ok, {"a": a, "b": b, "F": repr(F)}


def inst_multilinearity(rng, budget, **kw):
    fam = SplitFamily(1, "P1")
    L, L2, M = (RelBundle(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(3))
    ok = deligne_pairing(fam, [L * L2, M]) == deligne_pairing(fam, [L, M]) * deligne_pairing(fam, [L2, M])
    ok = ok and deligne_pairing(fam, [L, M]) == deligne_pairing(fam, [M, L])
    B = BaseS("ZZ")

    def draw():
        D, D2, E = (random_divisor(B, rng, 9) for _ in range(3))
        return D, D2, E, pairing(D, E), pairing(D2, E), pairing(D + D2, E), pairing(E, D)

    D, D2, E, pDE, pD2E, psum, pED = _redraw(draw)
    ok = ok and psum == pDE + pD2E and pED == pDE
    return ok, {"bundles": [str(L), str(L2), str(M)], "D": repr(D), "D2": repr(D2), "E": repr(E)}


def inst_vanishing(rng, budget, **kw):
    N = rng.randint(1, 3)
    r = N + rng.randint(1, 2)
    degs = [rng.randint(-3, 3) for _ in range(r)]
    val = vanishing_check(ProjScheme.projective_space(N), degs)
    return val == 0, {"N": N, "degrees": degs, "value": str(val)}


def inst_local_global(rng, budget, p: int = 101, **kw):
    dom = GF(p)
    while True:
        a, b = rng.randint(1, 3), rng.randint(1, 3)
        F, G = random_ternary(dom, a, rng), random_ternary(dom, b, rng)
        if F.is_zero() or G.is_zero() or not F.is_homogeneous() or not G.is_homogeneous():
            continue
        if F.degree() != a or G.degree() != b:
            continue
        try:
            val = total_multiplicity(F, G, seed=rng.randrange(2**31), budget=budget)
        except ValueError as exc:
            if "coprime" in str(exc):
                continue
            raise
        return val == a * b, {"p": p, "F": str(F), "G": str(G), "value": str(val), "expected": str(a * b)}


def inst_weil(rng, budget, field: str = "GF(101)", **kw):
    B = BaseS.parse(field)

    def draw():
        f, g = random_func(B, rng, 3, 20), random_func(B, rng, 3, 20)
        return f, g, weil_reciprocity_sides(f, g)

    f, g, (lhs, rhs) = _redraw(draw)
    return lhs == rhs, {"field": field, "f": repr(f), "g": repr(g), "N_(g)(f)": str(lhs), "N_(f)(g)": str(rhs)}


def inst_intwithrat(rng, budget, base: str = "ZZ", **kw):
    B = BaseS.parse(base)

    def draw():
        D, f = random_divisor(B, rng, 20), random_func(B, rng, 2, 20)
        return D, f, intwithrat_sides(D, f)

    D, f, (lhs, rhs) = _redraw(draw)
    return lhs == rhs, {"base": base, "D": repr(D), "f": repr(f), "<D,(f)>": repr(lhs), "div N_D(f)": repr(rhs)}


def inst_shift(rng, budget, base: str = "ZZ", **kw):
    B = BaseS.parse(base)

    def draw():
        D, E, f = random_divisor(B, rng, 20), random_divisor(B, rng, 20), random_func(B, rng, 2, 20)
        return D, E, f, shift_sides(D, E, f)

    D, E, f, (lhs, rhs) = _redraw(draw)
    return lhs == rhs, {"base": base, "D": repr(D), "E": repr(E), "f": repr(f), "shift": repr(lhs), "div N_E(f)": repr(rhs)}


def inst_n1(rng, budget, **kw):
    fam = SplitFamily(1, "P1")
    L, M = (RelBundle(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(2))
    a, b, beta = rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3)
    m = rng.randint(1, 3)
    ok = n1_expansion_check(fam, L, M) and det_chi_check(SplitFamily(m, "P1"), a, b, beta)
    return ok, {"L": str(L), "M": str(M), "det_chi": {"m": m, "a": a, "b": b, "beta": beta}}


def cross_backend_instance(rng, p: int):
    """Two section divisors of P^1 x P^1 over F_p; returns (F, G, arith degree, deligne degree)."""
    B = BaseS("P1", GF(p))
    fam = SplitFamily(1, "P1", GF(p))
    while True:
        F = random_form(B, 1, rng, tdeg=3)
        G = random_form(B, 1, rng, tdeg=3)
        if F.is_constant() or resultant(F, G) == 0:
            continue
        D, E = ArithDivisor.of_form(B, F), ArithDivisor.of_form(B, G)
        eF = max(v.degree() for v in F.c)
        eG = max(v.degree() for v in G.c)
        arith = pairing(D, E).degree()
        delig = deligne_pairing(fam, [RelBundle(1, eF), RelBundle(1, eG)]).degree
        return F, G, arith, delig


def inst_cross_backend(rng, budget, p: int | None = None, **kw):
    p = p or rng.choice([3, 5, 7, 11, 101])
    F, G, arith, delig = cross_backend_instance(rng, p)
    return arith == delig, {"p": p, "F": str(F), "G": str(G), "arith": str(arith), "deligne": str(delig)}


SUITES = {
    "c1-identities": (inst_c1, 500),
    "multilinearity": (inst_multilinearity, 100),
    "vanishing": (inst_vanishing, 100),
    "local-global": (inst_local_global, 50),
    "weil": (inst_weil, 200),
    "intwithrat": (inst_intwithrat, 50),
    "n1-expansion": (inst_n1, 50),
    "cross-backend": (inst_cross_backend, 20),
}


def run_suite(name: str, seed: int = 0, n: int | None = None, budget: int = DEFAULT_BUDGET, **options) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    inst, default_n = SUITES[name]
    n = default_n if n is None else n
    rng = random.Random(seed)
    rep = SuiteReport(name, seed, n)
    for i in range(n):
        try:
            ok, info = inst(rng, budget, **options)
        except Exception as exc:  # a crash is a failed instance, with its message
            rep.failures.append({"index": str(i), "error": f"{type(exc).__name__}: {exc}"})
            continue
        if ok:
            rep.passed += 1
        else:
            rep.failures.append({"index": str(i), "instance": info})
    return rep
