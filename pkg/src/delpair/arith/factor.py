"""Factorization of univariate polynomials over prime fields."""

from __future__ import annotations

import random

from .domains import PrimeField
from .upoly import UPoly, upoly_gcd

# exhaustive root search below this field size for degree <= 3
_EXHAUSTIVE_P = 2000


def _pth_root(f: UPoly) -> UPoly:
    p = f.dom.p
    # a^p = a in GF(p), so only the exponents move
    return UPoly._raw([f.c[i] for i in range(0, len(f.c), p)], f.dom)


def squarefree_decomposition(f: UPoly) -> list[tuple[UPoly, int]]:
    """Monic squarefree parts (g_i, i) with f = lc * prod g_i^i."""
    f = f.monic()
    if f.degree() < 1:
        return []
    p = f.dom.p
    out: list[tuple[UPoly, int]] = []
    df = f.derivative()
    if df.is_zero():
        return [(g, e * p) for g, e in squarefree_decomposition(_pth_root(f))]
    c = upoly_gcd(f, df)
    w = f // c
    i = 1
    while w.degree() > 0:
        y = upoly_gcd(w, c)
        z = w // y
        if z.degree() > 0:
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if c.degree() > 0:
        out += [(g, e * p) for g, e in squarefree_decomposition(_pth_root(c))]
    return out


def _roots_exhaustive(f: UPoly) -> list:
    return [a for a in f.dom.elements() if f(a) == 0]


def _distinct_degree(f: UPoly) -> list[tuple[UPoly, int]]:
    """Split a monic squarefree f into products of irreducibles of equal degree."""
    p = f.dom.p
    x = UPoly.x(f.dom)
    h = x
    out = []
    d = 0
    while f.degree() >= 2 * (d + 1):
        d += 1
        h = h.powmod(p, f)
        g = upoly_gcd(f, h - x)
        if g.degree() > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree() > 0:
        out.append((f, f.degree()))
    return out


def _equal_degree(f: UPoly, d: int, rng: random.Random) -> list[UPoly]:
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles."""
    n = f.degree()
    if n == d:
        return [f]
    dom = f.dom
    p = dom.p
    while True:
        a = UPoly([rng.randrange(p) for _ in range(n)], dom)
        if a.degree() < 1:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            t, b = a, a
            for _ in range(d - 1):
                b = (b * b) % f
                t = t + b
            g = upoly_gcd(f, t)
        else:
            b = a.powmod((p**d - 1) // 2, f) - 1
            g = upoly_gcd(f, b)
        if 0 < g.degree() < n:
            return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def _factor_squarefree(f: UPoly, rng: random.Random) -> list[UPoly]:
    if f.degree() <= 1:
        return [f]
    if f.degree() <= 3 and f.dom.p <= _EXHAUSTIVE_P:
        roots = _roots_exhaustive(f)
        if not roots:
            # a reducible cubic or quadratic has a linear factor
            return [f]
        lin = [UPoly([-r, 1], f.dom) for r in roots]
        rest = f
        for q in lin:
            rest = rest // q
        return lin + ([rest] if rest.degree() > 0 else [])
    out = []
    for g, d in _distinct_degree(f):
        out += _equal_degree(g, d, rng)
    return out


def _sort_key(f: UPoly):
    return (f.degree(), [int(v) for v in reversed(f.c)])


def factor_finite_field(f: UPoly, seed: int = 0) -> list[tuple[UPoly, int]]:
    """Monic irreducible factors with multiplicities, sorted by degree then coefficients.

    The product of the factors to their multiplicities equals f / lc(f).
    """
    if not isinstance(f.dom, PrimeField):
        raise TypeError(f"factor_finite_field needs a prime field, got {f.dom}")
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    acc: dict[UPoly, int] = {}
    for g, e in squarefree_decomposition(f):
        for h in _factor_squarefree(g, rng):
            acc[h] = acc.get(h, 0) + e
    return sorted(acc.items(), key=lambda he: _sort_key(he[0]))
