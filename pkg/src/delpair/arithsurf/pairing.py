"""The pairing <D, E> in Div(S), norms of rational functions, and their identities.

For horizontal components div F, div G the coefficient of <D, E> at a
finite prime s is v_s(Res(F, G)); at the infinite place of P^1_k it is the
u-adic valuation of the resultant of the reversed forms (t = 1/u).  These
totals are cross-checked against per-point lengths from local_decomposition.
"""

from __future__ import annotations

from typing import NamedTuple

from ..arith.domains import INF
from ..arith.factor import factor_finite_field
from ..arith.forms import BinaryForm, resultant, y_form
from ..arith.upoly import UPoly, upoly_xgcd
from .base import BaseS, DivisorOnS
from .divisor import ArithDivisor, RationalFunc, principal_divisor, reverse_t


class CommonComponentError(ValueError):
    pass


def _common(msg="divisors have a common component"):
    return CommonComponentError(msg)


def _finite_part(base: BaseS, r) -> DivisorOnS:
    d = base.divisor(base.frac(r))
    d.terms.pop(INF, None)
    return d


def _u_valuation(r: UPoly) -> int:
    for i, v in enumerate(r.c):
        if v != 0:
            return i
    raise ValueError("valuation of 0")


def _hh_pairing(base: BaseS, F: BinaryForm, G: BinaryForm) -> DivisorOnS:
    r = resultant(F, G)
    if r == 0:
        raise _common()
    out = _finite_part(base, r)
    if base.has_infinity:
        Ft, _ = reverse_t(F)
        Gt, _ = reverse_t(G)
        out = out + DivisorOnS(base, {INF: _u_valuation(resultant(Ft, Gt))})
    return out


def _check_vertical(D: ArithDivisor, E: ArithDivisor):
    for s in D.vertical:
        if s in E.vertical:
            raise _common()


def pairing(D: ArithDivisor, E: ArithDivisor) -> DivisorOnS:
    """<D, E> as a divisor on S (symmetric and bilinear)."""
    if D.base != E.base:
        raise ValueError("divisors over different bases")
    base = D.base
    D, E = D.canonical(), E.canonical()
    _check_vertical(D, E)
    out = DivisorOnS(base)
    for F, n in D.horizontal.items():
        for G, m in E.horizontal.items():
            out = out + (n * m) * _hh_pairing(base, F, G)
    for F, n in D.horizontal.items():
        for s, m in E.vertical.items():
            out = out + DivisorOnS(base, {s: n * m * F.degree})
    for G, m in E.horizontal.items():
        for s, n in D.vertical.items():
            out = out + DivisorOnS(base, {s: n * m * G.degree})
    return out


# -- local intersection numbers ------------------------------------------


class LocalPoint(NamedTuple):
    """A closed point of the fibre X_s, its local intersection number and [k(x):k(s)]."""

    point: BinaryForm
    multiplicity: int
    residue_degree: int


class _Adic:
    """R localized at s, written with a uniformizer pi."""

    def __init__(self, base: BaseS, s):
        self.k = base.residue_field(s)
        if base.kind == "ZZ":
            self.ring = base.ring
            self.pi = s
        else:
            self.ring = base.ring
            self.pi = self.ring.gen()
            if s is INF:
                self.move = lambda F: reverse_t(F)[0]
            else:
                c = -s.coeff(0)
                shift = UPoly([c, 1], base.field)
                self.move = lambda F: BinaryForm._raw([v.compose(shift) for v in F.c], F.dom)
        self.kind = base.kind

    def to_local(self, F: BinaryForm) -> BinaryForm:
        return F if self.kind == "ZZ" else self.move(F)

    def red(self, r):
        return self.k(r) if self.kind == "ZZ" else r.coeff(0)

    def lift(self, e):
        return int(e) if self.kind == "ZZ" else self.ring(e)

    def div(self, r, j: int):
        return self.ring.exquo(r, self.pi**j)

    def val(self, r) -> int:
        if r == 0:
            raise ValueError("valuation of 0")
        if self.kind != "ZZ":
            return _u_valuation(r)
        e = 0
        while r % self.pi == 0:
            r //= self.pi
            e += 1
        return e

    def reduce_form(self, F: BinaryForm) -> BinaryForm:
        return F.map(self.red, self.k)

    def reduce_poly(self, f: UPoly) -> UPoly:
        return f.map(self.red, self.k)

    def lift_poly(self, f: UPoly) -> UPoly:
        return UPoly._raw([self.lift(v) for v in f.c], self.ring)


def _points(h: BinaryForm):
    """Irreducible factors of a nonzero form over F_p, with multiplicities."""
    out = []
    if h.y_order():
        out.append((y_form(h.dom), h.y_order()))
    f = h.dehomogenize()
    if f.degree() > 0:
        for phi, e in factor_finite_field(f):
            out.append((BinaryForm.from_upoly(phi), e))
    return out


def _hensel_factor(f: UPoly, phi: UPoly, loc: _Adic, precision: int) -> UPoly:
    """Monic a with a = phi^e mod pi and a | f over R_s^ to the given pi-adic precision."""
    fbar = loc.reduce_poly(f)
    e = 0
    rest = fbar
    while True:
        q, r = divmod(rest, phi)
        if not r.is_zero():
            break
        rest, e = q, e + 1
    abar = phi**e
    bbar = fbar.exquo(abar)
    g, _, v = upoly_xgcd(abar, bbar)
    if g.degree() != 0:
        raise AssertionError("Hensel factors are not coprime")
    v = v * (loc.k.one / g.lc())
    a, b = loc.lift_poly(abar), loc.lift_poly(bbar)
    for j in range(1, precision):
        diff = f - a * b
        if diff.is_zero():
            break
        ebar = UPoly._raw([loc.red(loc.div(c, j)) for c in diff.c], loc.k)
        tau = (ebar * v) % abar
        sigma = (ebar - tau * bbar).exquo(abar)
        pj = loc.pi**j
        a = a + loc.lift_poly(tau) * pj
        b = b + loc.lift_poly(sigma) * pj
    return a


def _hh_local(F: BinaryForm, G: BinaryForm, loc: _Adic):
    r = resultant(F, G)
    if r == 0:
        raise _common()
    N = loc.val(r) + 1
    h = loc.reduce_form(F).gcd(loc.reduce_form(G))
    out = []
    for phi, _ in _points(h):
        Fx, Gx, phix = F, G, phi
        if phi.y_order():
            Fx, Gx = F.swap(), G.swap()
            phix = phi.swap()
        a = _hensel_factor(Fx.dehomogenize(), phix.dehomogenize(), loc, N)
        A = BinaryForm.from_upoly(a)
        v = loc.val(resultant(A, Gx))
        d = phi.degree
        if v % d:
            raise ArithmeticError("local length is not an integer")
        out.append((phi, v // d, d))
    return out


def _hv_local(F: BinaryForm, loc: _Adic):
    return [(phi, e, phi.degree) for phi, e in _points(loc.reduce_form(F))]


def local_decomposition(D: ArithDivisor, E: ArithDivisor, s) -> list[LocalPoint]:
    """Points of the fibre over s where D and E meet, with i_x and residue degree.

    Residue fields must be prime fields: primes of ZZ, t - c in F_p[t] and the
    infinite place of P^1_{F_p}.  sum residue_degree * i_x is the coefficient
    of s in pairing(D, E).
    """
    if D.base != E.base:
        raise ValueError("divisors over different bases")
    base = D.base
    s = base.check_prime(s)
    loc = _Adic(base, s)
    D, E = D.canonical(), E.canonical()
    if not (D.is_effective() and E.is_effective()):
        raise ValueError("local intersection numbers need effective divisors")
    _check_vertical(D, E)
    acc: dict[BinaryForm, list] = {}

    def add(items, weight):
        for phi, i, d in items:
            slot = acc.setdefault(phi, [0, d])
            slot[0] += weight * i

    for F, n in D.horizontal.items():
        Fl = loc.to_local(F)
        for G, m in E.horizontal.items():
            add(_hh_local(Fl, loc.to_local(G), loc), n * m)
        if s in E.vertical:
            add(_hv_local(Fl, loc), n * E.vertical[s])
    if s in D.vertical:
        for G, m in E.horizontal.items():
            add(_hv_local(loc.to_local(G), loc), m * D.vertical[s])
    pts = [LocalPoint(phi, i, d) for phi, (i, d) in acc.items() if i]
    return sorted(pts, key=lambda P: (P.residue_degree, [int(v) for v in reversed(P.point.c)]))


# -- norms ---------------------------------------------------------------


def norm_gamma(base: BaseS, gamma, f: RationalFunc):
    """N_Gamma(f): the product of f over the points of Gamma; 1 for a fibre."""
    if not isinstance(gamma, BinaryForm):
        return base.frac_one()
    a, b = resultant(gamma, f.num), resultant(gamma, f.den)
    if a == 0 or b == 0:
        raise _common("f has a zero or pole along the component")
    return base.frac(a, b)


def norm_divisor(D: ArithDivisor, f: RationalFunc):
    """N_D(f) = prod N_Gamma(f)^n over the components of D."""
    base = D.base
    D = D.canonical()
    for s in principal_divisor(f).vertical:
        if s in D.vertical:
            raise _common()
    out = base.frac_one()
    for G, n in D.horizontal.items():
        out = out * norm_gamma(base, G, f) ** n
    return out


def _norm_along(base: BaseS, pieces, f: RationalFunc):
    out = base.frac_one()
    for G, n in pieces:
        if not G.is_constant():
            out = out * norm_gamma(base, G, f) ** n
    return out


def weil_reciprocity_sides(f: RationalFunc, g: RationalFunc):
    """(N_(g)(f), N_(f)(g)) for rational functions on P^1 over a field."""
    base = f.base
    if base.kind != "field" or g.base != base:
        raise ValueError("Weil reciprocity is checked over a field base")
    lhs = _norm_along(base, [(g.num, 1), (g.den, -1)], f)
    rhs = _norm_along(base, [(f.num, 1), (f.den, -1)], g)
    return lhs, rhs


def weil_reciprocity_check(f: RationalFunc, g: RationalFunc) -> bool:
    lhs, rhs = weil_reciprocity_sides(f, g)
    return lhs == rhs


def intwithrat_sides(D: ArithDivisor, f: RationalFunc):
    """(<D, (f)>, div N_D(f))."""
    return pairing(D, principal_divisor(f)), D.base.divisor(norm_divisor(D, f))


def intwithrat_check(D: ArithDivisor, f: RationalFunc) -> bool:
    lhs, rhs = intwithrat_sides(D, f)
    return lhs == rhs


def deligne_section_divisor(D: ArithDivisor, E: ArithDivisor) -> DivisorOnS:
    """div <l, m> for sections l, m with div l = D and div m = E."""
    return pairing(D, E)


def shift_sides(D: ArithDivisor, E: ArithDivisor, f: RationalFunc):
    """(<div(f l), m> - <div l, m>, div N_E(f))."""
    moved = deligne_section_divisor(D + principal_divisor(f), E) - deligne_section_divisor(D, E)
    return moved, D.base.divisor(norm_divisor(E, f))


def shift_check(D: ArithDivisor, E: ArithDivisor, f: RationalFunc) -> bool:
    lhs, rhs = shift_sides(D, E, f)
    return lhs == rhs
