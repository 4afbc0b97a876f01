"""Hilbert series and Hilbert polynomials of monomial (initial) ideals."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return out


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return out


def _strip(a: list[int]) -> list[int]:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _minimalize(gens: list[tuple]) -> list[tuple]:
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out: list[tuple] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _numerator(gens: list[tuple], n: int) -> list[int]:
    """N(t) with sum dim (S/M)_m t^m = N(t) / (1 - t)^n."""
    gens = _minimalize(gens)
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return [0]
    mixed = [g for g in gens if sum(1 for k in g if k) > 1]
    if not mixed:
        out = [1]
        for g in gens:
            d = sum(g)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return out
    counts = [sum(1 for g in mixed if g[i]) for i in range(n)]
    v = max(range(n), key=lambda i: (counts[i], -i))
    xv = tuple(1 if i == v else 0 for i in range(n))
    plus = [g for g in gens if not g[v]] + [xv]
    colon = [tuple(k - 1 if i == v and k else k for i, k in enumerate(g)) for g in gens]
    return _strip(_poly_add(_numerator(plus, n), [0] + _numerator(colon, n)))


class HilbertSeries:
    """N(t) / (1 - t)^nvars with integer numerator coefficients."""

    def __init__(self, numerator: list[int], nvars: int):
        self.numerator = _strip(list(numerator))
        self.nvars = nvars

    def reduced(self) -> tuple[list[int], int]:
        """Cancel (1 - t) factors: returns (numerator, remaining exponent)."""
        num = list(self.numerator)
        d = self.nvars
        while d > 0 and any(num) and sum(num) == 0:
            # synthetic division by (1 - t)
            q = []
            acc = 0
            for c in num[:-1]:
                acc += c
                q.append(acc)
            num = _strip(q) if q else [0]
            d -= 1
        return num, d

    def degree(self) -> int:
        """Degree of the scheme: reduced numerator at t = 1."""
        num, _ = self.reduced()
        return sum(num)

    def coefficients(self, upto: int) -> list[int]:
        """First ``upto + 1`` coefficients of the power series."""
        n = self.nvars
        num = self.numerator
        if n == 0:
            return [num[m] if m < len(num) else 0 for m in range(upto + 1)]
        return [
            sum(c * comb(m - i + n - 1, n - 1) for i, c in enumerate(num) if i <= m)
            for m in range(upto + 1)
        ]

    def __eq__(self, other):
        return isinstance(other, HilbertSeries) and self.numerator == other.numerator and self.nvars == other.nvars

    def __repr__(self):
        return f"HilbertSeries({self.numerator}, nvars={self.nvars})"


class HilbertPolynomial:
    """H(m) = sum coeffs[k] m^k with rational coefficients; dimension = deg H."""

    def __init__(self, coeffs: list[Fraction]):
        c = [Fraction(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = c

    @property
    def dimension(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, m: int) -> int:
        acc = Fraction(0)
        for v in reversed(self.coeffs):
            acc = acc * m + v
        if acc.denominator != 1:
            raise ArithmeticError(f"Hilbert polynomial took the non-integer value {acc} at {m}")
        return acc.numerator

    def leading_degree(self) -> int:
        """Degree of the scheme: (dim)! times the leading coefficient."""
        if not self.coeffs:
            return 0
        v = self.coeffs[-1] * factorial(self.dimension)
        return int(v)

    def __eq__(self, other):
        return isinstance(other, HilbertPolynomial) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"HilbertPolynomial({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            v = self.coeffs[k]
            if v == 0:
                continue
            mono = "" if k == 0 else ("m" if k == 1 else f"m^{k}")
            av = abs(v)
            coef = str(av) if (av != 1 or not mono) else ""
            body = coef + ("*" if coef and mono else "") + mono
            parts.append(("-" if v < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


def hilbert_series(gens: list[tuple], nvars: int) -> HilbertSeries:
    """Hilbert series of S/M for the monomial ideal M given by exponent tuples."""
    for g in gens:
        if len(g) != nvars:
            raise ValueError(f"monomial {g} does not have {nvars} exponents")
    return HilbertSeries(_numerator([tuple(g) for g in gens], nvars), nvars)


def _binom_poly(shift: int, k: int) -> list[Fraction]:
    """Coefficients in m of C(m + shift, k) = (m+shift)(m+shift-1).../k!."""
    poly = [Fraction(1)]
    for j in range(k):
        r = shift - j
        new = [Fraction(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            new[i] += c * r
            new[i + 1] += c
        poly = new
    f = factorial(k)
    return [c / f for c in poly]


def hilbert_polynomial(hs: HilbertSeries) -> HilbertPolynomial:
    """H(m) = sum n_i C(m - i + d - 1, d - 1) after cancelling (1 - t) factors."""
    num, d = hs.reduced()
    if d == 0 or not any(num):
        return HilbertPolynomial([])
    acc = [Fraction(0)] * d
    for i, n in enumerate(num):
        if n:
            for k, c in enumerate(_binom_poly(d - 1 - i, d - 1)):
                acc[k] += n * c
    return HilbertPolynomial(acc)


def chi(X, m: int) -> int:
    """Euler characteristic of O_X(m), as the Hilbert polynomial value."""
    return X.hilbert_polynomial(m)
