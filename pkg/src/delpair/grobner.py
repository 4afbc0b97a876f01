"""Buchberger's algorithm over QQ and prime fields.

Internally polynomials are plain dicts ``{exponent: coeff}``.  Over a prime
field the coefficients are ints mod p and basis elements are kept monic;
over QQ the S-pair work is fraction-free (integer coefficients, primitive
polynomials) and the final reduced basis is made monic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

from .arith.domains import INF, QQ, Domain, PrimeField
from .arith.multipoly import MultiPoly

DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    """Raised when Buchberger exceeds its pair-reduction budget."""


class MonomialOrder:
    def __init__(self, kind: str = "degrevlex", nvars: int | None = None):
        if kind not in ("degrevlex", "lex"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.nvars = nvars

    def key(self, e):
        if self.kind == "lex":
            return e
        return (sum(e), tuple(-k for k in reversed(e)))

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.kind == self.kind and other.nvars == self.nvars

    def __hash__(self):
        return hash((self.kind, self.nvars))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, {self.nvars})"


class Ideal:
    """Ideal given by generators; ``homogeneous=True`` is checked."""

    def __init__(self, gens, nvars: int | None = None, dom: Domain | None = None, homogeneous: bool = False):
        gens = list(gens)
        if gens:
            nvars = gens[0].nvars if nvars is None else nvars
            dom = gens[0].dom if dom is None else dom
        if nvars is None or dom is None:
            raise ValueError("an ideal without generators needs nvars and dom")
        if not dom.is_field:
            raise ValueError(f"ideals need field coefficients, got {dom}")
        for g in gens:
            if g.nvars != nvars or g.dom != dom:
                raise ValueError("generators live in different rings")
            if homogeneous and not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")
        self.gens = tuple(gens)
        self.nvars = nvars
        self.dom = dom
        self.homogeneous = homogeneous

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.gens]}, nvars={self.nvars}, {self.dom})"


class GroebnerBasis:
    def __init__(self, basis: list[MultiPoly], order: MonomialOrder, nvars: int, dom: Domain):
        self.basis = basis
        self.order = order
        self.nvars = nvars
        self.dom = dom
        self.leads = [max(g.terms, key=order.key) for g in basis]

    @property
    def initial_ideal(self) -> list[tuple]:
        """Generators of the leading-term ideal as exponent tuples."""
        return list(self.leads)

    def is_unit(self) -> bool:
        return any(sum(e) == 0 for e in self.leads)

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and self.basis == other.basis and self.order == other.order

    def __repr__(self):
        return f"GroebnerBasis({[str(g) for g in self.basis]}, {self.order.kind})"


# -- coefficient back-ends ---------------------------------------------


class _ModP:
    def __init__(self, p):
        self.p = p

    def to_int(self, c):
        return int(c) % self.p

    def normalize(self, f, order):
        if not f:
            return f
        lc = f[max(f, key=order.key)]
        if lc == 1:
            return f
        inv = pow(lc, -1, self.p)
        return {e: c * inv % self.p for e, c in f.items()}

    def step(self, a, b):
        # f <- f - (a/b) m g with b = 1 (monic basis)
        return 1, a

    def combine(self, f, cf, cg, m, g):
        p = self.p
        out = f if cf == 1 else {e: c * cf % p for e, c in f.items()}
        for e, c in g.items():
            k = tuple(x + y for x, y in zip(e, m))
            v = (out.get(k, 0) - cg * c) % p
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return out

    def to_field(self, c, dom):
        return dom(c)


class _FracFree:
    def to_int(self, c):
        return c

    def normalize(self, f, order):
        if not f:
            return f
        g = 0
        for c in f.values():
            g = math.gcd(g, c)
            if g == 1:
                break
        if f[max(f, key=order.key)] < 0:
            g = -g
        if g == 1:
            return f
        return {e: c // g for e, c in f.items()}

    def step(self, a, b):
        g = math.gcd(a, b)
        return b // g, a // g

    def combine(self, f, cf, cg, m, g):
        out = f if cf == 1 else {e: c * cf for e, c in f.items()}
        for e, c in g.items():
            k = tuple(x + y for x, y in zip(e, m))
            v = out.get(k, 0) - cg * c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return out


def _backend(dom):
    if isinstance(dom, PrimeField):
        return _ModP(dom.p)
    if dom == QQ:
        return _FracFree()
    raise ValueError(f"Groebner bases need QQ or GF(p), got {dom}")


def _to_internal(f: MultiPoly, dom):
    if isinstance(dom, PrimeField):
        return {e: int(c) for e, c in f.terms.items()}
    den = 1
    for c in f.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    return {e: int(c * den) for e, c in f.terms.items()}


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _reduce(f, basis, leads, back, order):
    """Fully reduce f modulo basis; returns the remainder (not normalized)."""
    rem: dict = {}
    f = dict(f)
    key = order.key
    while f:
        m = max(f, key=key)
        a = f[m]
        for lm, g in zip(leads, basis):
            if _divides(lm, m):
                cf, cg = back.step(a, g[lm])
                if cf != 1:
                    rem = {e: c * cf for e, c in rem.items()}
                q = tuple(x - y for x, y in zip(m, lm))
                f = back.combine(f, cf, cg, q, g)
                break
        else:
            rem[m] = f.pop(m)
    return rem


def _spoly(i, j, polys, leads, back):
    li, lj = leads[i], leads[j]
    m = _lcm(li, lj)
    fi, fj = polys[i], polys[j]
    ai, aj = fi[li], fj[lj]
    qi = tuple(x - y for x, y in zip(m, li))
    qj = tuple(x - y for x, y in zip(m, lj))
    # aj * x^qi * fi - ai * x^qj * fj, scaled down by gcd over QQ
    g = math.gcd(ai, aj) if isinstance(back, _FracFree) else 1
    if isinstance(back, _FracFree):
        ci, cj = aj // g, ai // g
    else:
        ci, cj = aj, ai
    s = back.combine({}, 1, -ci, qi, fi)
    return back.combine(s, 1, cj, qj, fj)


def _update(G, B, h, polys, leads):
    """Gebauer-Moeller update of the basis index list G and pair list B."""
    lh = leads[h]
    C = [g for g in G]
    D = []
    while C:
        g1 = C.pop(0)
        l1 = _lcm(lh, leads[g1])
        if _coprime(lh, leads[g1]):
            D.append(g1)
            continue
        if any(_divides(_lcm(lh, leads[g2]), l1) for g2 in C) or any(
            _divides(_lcm(lh, leads[g2]), l1) for g2 in D
        ):
            continue
        D.append(g1)
    E = [(g, h) for g in D if not _coprime(lh, leads[g])]
    Bnew = []
    for g1, g2 in B:
        l12 = _lcm(leads[g1], leads[g2])
        if (
            not _divides(lh, l12)
            or _lcm(leads[g1], lh) == l12
            or _lcm(lh, leads[g2]) == l12
        ):
            Bnew.append((g1, g2))
    Bnew += E
    Gnew = [g for g in G if not _divides(lh, leads[g])]
    Gnew.append(h)
    return Gnew, Bnew


def buchberger(ideal: Ideal, order: MonomialOrder | None = None, budget: int = DEFAULT_BUDGET) -> GroebnerBasis:
    """Reduced Groebner basis, deterministic for a fixed generator list.

    Pairs are taken by the normal strategy (smallest lcm first), ties broken
    by the order in which pairs were created.
    """
    order = order or MonomialOrder("degrevlex", ideal.nvars)
    dom = ideal.dom
    back = _backend(dom)
    key = order.key
    polys: list[dict] = []
    leads: list[tuple] = []
    G: list[int] = []
    B: list[tuple[int, int]] = []

    def add(f):
        nonlocal G, B
        f = back.normalize(f, order)
        polys.append(f)
        leads.append(max(f, key=key))
        G, B = _update(G, B, len(polys) - 1, polys, leads)

    for g in ideal.gens:
        f = back.normalize(_to_internal(g, dom), order)
        if f:
            f = back.normalize(_reduce(f, [polys[i] for i in G], [leads[i] for i in G], back, order), order)
            if f:
                add(f)
    steps = 0
    while B:
        best = min(range(len(B)), key=lambda k: (key(_lcm(leads[B[k][0]], leads[B[k][1]])), k))
        i, j = B.pop(best)
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"Groebner step budget of {budget} pair reductions exceeded")
        s = _spoly(i, j, polys, leads, back)
        h = back.normalize(_reduce(s, [polys[k] for k in G], [leads[k] for k in G], back, order), order)
        if h:
            add(h)
    # minimal basis, then interreduce tails
    idx = [g for g in G if not any(h != g and _divides(leads[h], leads[g]) for h in G)]
    basis = [polys[g] for g in idx]
    lds = [leads[g] for g in idx]
    reduced = []
    for k, f in enumerate(basis):
        others = [basis[m] for m in range(len(basis)) if m != k]
        olds = [lds[m] for m in range(len(basis)) if m != k]
        reduced.append(back.normalize(_reduce(f, others, olds, back, order), order))
    out = [_from_internal(f, dom, order) for f in reduced]
    out.sort(key=lambda g: key(max(g.terms, key=key)))
    return GroebnerBasis(out, order, ideal.nvars, dom)


def _from_internal(f, dom, order) -> MultiPoly:
    lm = max(f, key=order.key)
    if isinstance(dom, PrimeField):
        return MultiPoly({e: c for e, c in f.items()}, len(lm), dom)
    lc = f[lm]
    return MultiPoly._raw({e: Fraction(c, lc) for e, c in f.items()}, len(lm), dom)


def normal_form(f: MultiPoly, gb: GroebnerBasis) -> MultiPoly:
    """Fully reduced remainder of f by the basis, with exact field division."""
    if f.nvars != gb.nvars or f.dom != gb.dom:
        raise ValueError("ring mismatch between polynomial and Groebner basis")
    key = gb.order.key
    f_terms = dict(f.terms)
    rem: dict = {}
    while f_terms:
        m = max(f_terms, key=key)
        a = f_terms[m]
        for lm, g in zip(gb.leads, gb.basis):
            if _divides(lm, m):
                # basis elements are monic
                q = tuple(x - y for x, y in zip(m, lm))
                for e, c in g.terms.items():
                    k = tuple(x + y for x, y in zip(e, q))
                    v = f_terms.get(k, f.dom.zero) - a * c
                    if v == 0:
                        f_terms.pop(k, None)
                    else:
                        f_terms[k] = v
                break
        else:
            rem[m] = f_terms.pop(m)
    return MultiPoly._raw(rem, f.nvars, f.dom)


def standard_monomials(gb: GroebnerBasis, limit: int | None = None):
    """Exponents outside the initial ideal; None if there are infinitely many."""
    n = gb.nvars
    if gb.is_unit():
        return []
    bounds = []
    for i in range(n):
        pure = [e[i] for e in gb.leads if all(e[j] == 0 for j in range(n) if j != i) and e[i] > 0]
        if not pure:
            return None
        bounds.append(min(pure))
    out = []
    for e in product(*(range(b) for b in bounds)):
        if not any(_divides(lm, e) for lm in gb.leads):
            out.append(e)
    return out


def quotient_dimension(gb: GroebnerBasis):
    """dim_k k[x]/I, or INF when the quotient is infinite-dimensional."""
    sm = standard_monomials(gb)
    return INF if sm is None else len(sm)


def groebner(gens, order: str = "degrevlex", budget: int = DEFAULT_BUDGET, homogeneous: bool = False) -> GroebnerBasis:
    """Convenience wrapper: basis of the ideal generated by ``gens``."""
    gens = list(gens)
    ideal = Ideal(gens, homogeneous=homogeneous)
    return buchberger(ideal, MonomialOrder(order, ideal.nvars), budget)
