"""Primality, integer factorization and valuations."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .domains import INF, PrimeField, _is_prime_int
from .upoly import UPoly


def is_prime(n: int) -> bool:
    return _is_prime_int(n)


def _pollard_brent(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor_integer(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; {} for n = +-1."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    rng = random.Random(n)
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m, rng)
        stack += [d, m // d]
    return dict(sorted(out.items()))


def is_irreducible(f: UPoly) -> bool:
    """Irreducibility over a prime field, decided by factoring."""
    from .factor import factor_finite_field

    if f.degree() < 1:
        return False
    fs = factor_finite_field(f)
    return len(fs) == 1 and fs[0][1] == 1


def valuation(a, p):
    """Largest e with p^e | a; INF for a = 0.

    ``a`` and ``p`` are integers (p prime) or polynomials over a prime field
    (p irreducible).  A Fraction or a pair (num, den) gives the signed
    valuation of a quotient.
    """
    if isinstance(a, Fraction):
        if a == 0:
            return INF
        return valuation(a.numerator, p) - valuation(a.denominator, p)
    if isinstance(p, int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if a == 0:
            return INF
        a = abs(int(a))
        e = 0
        while a % p == 0:
            a //= p
            e += 1
        return e
    if isinstance(p, UPoly):
        if not isinstance(p.dom, PrimeField):
            if p.degree() != 1:
                raise ValueError("valuations over QQ[t] are only available at linear primes")
        elif not is_irreducible(p):
            raise ValueError(f"{p.to_str('t')} is not irreducible")
        if not isinstance(a, UPoly):
            a = UPoly([a], p.dom)
        if a.is_zero():
            return INF
        e = 0
        while True:
            q, r = divmod(a, p)
            if not r.is_zero():
                return e
            a = q
            e += 1
    raise TypeError(f"unsupported prime {p!r}")
