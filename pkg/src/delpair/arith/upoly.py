"""Dense univariate polynomials over a coefficient domain."""

from __future__ import annotations

from .domains import Domain, PolynomialRing


class UPoly:
    """Polynomial ``c[0] + c[1] X + ... + c[n] X^n`` over ``dom``.

    The coefficient list never has trailing zeros, so the zero polynomial
    is ``[]`` and has degree -1.
    """

    __slots__ = ("c", "dom")

    def __init__(self, coeffs, dom: Domain):
        self.dom = dom
        self.c = _strip([dom(x) for x in coeffs])

    @classmethod
    def _raw(cls, coeffs: list, dom: Domain) -> "UPoly":
        p = cls.__new__(cls)
        p.dom = dom
        p.c = _strip(coeffs)
        return p

    @classmethod
    def monomial(cls, coeff, k: int, dom: Domain) -> "UPoly":
        return cls._raw([dom.zero] * k + [dom(coeff)], dom)

    @classmethod
    def x(cls, dom: Domain) -> "UPoly":
        return cls._raw([dom.zero, dom.one], dom)

    # -- basic queries -------------------------------------------------
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def lc(self):
        return self.c[-1] if self.c else self.dom.zero

    def coeff(self, k: int):
        return self.c[k] if 0 <= k < len(self.c) else self.dom.zero

    def is_monic(self) -> bool:
        return bool(self.c) and self.c[-1] == 1

    def _coerce(self, other) -> "UPoly":
        if isinstance(other, UPoly) and other.dom == self.dom:
            return other
        return UPoly._raw([self.dom(other)], self.dom)

    # -- ring operations -----------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        a, b = self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return UPoly._raw(out, self.dom)

    __radd__ = __add__

    def __neg__(self):
        return UPoly._raw([-v for v in self.c], self.dom)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not (isinstance(other, UPoly) and other.dom == self.dom):
            s = self.dom(other)
            return UPoly._raw([v * s for v in self.c], self.dom)
        a, b = self.c, other.c
        if not a or not b:
            return UPoly._raw([], self.dom)
        zero = self.dom.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u == 0:
                continue
            for j, v in enumerate(b):
                out[i + j] = out[i + j] + u * v
        return UPoly._raw(out, self.dom)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = UPoly._raw([self.dom.one], self.dom)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "UPoly":
        """Multiply by X^k."""
        if not self.c:
            return self
        return UPoly._raw([self.dom.zero] * k + list(self.c), self.dom)

    def __divmod__(self, other):
        d = self._coerce(other)
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lc = d.lc()
        if self.dom.is_field:
            inv = self.dom.one / lc
            divide = lambda a: a * inv  # noqa: E731
        elif self.dom.is_unit(lc):
            divide = lambda a: self.dom.exquo(a, lc)  # noqa: E731
        else:
            raise ArithmeticError(f"leading coefficient {lc} is not invertible in {self.dom}")
        r = list(self.c)
        n = d.degree()
        if len(r) - 1 < n:
            return UPoly._raw([], self.dom), self
        q = [self.dom.zero] * (len(r) - n)
        for k in range(len(r) - 1 - n, -1, -1):
            top = r[k + n]
            if top == 0:
                continue
            f = divide(top)
            q[k] = f
            for i, v in enumerate(d.c):
                r[k + i] = r[k + i] - f * v
        return UPoly._raw(q, self.dom), UPoly._raw(r[:n], self.dom)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other) -> "UPoly":
        """Exact division over the coefficient domain (no field needed)."""
        d = self._coerce(other)
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        n = d.degree()
        if self.is_zero():
            return self
        if len(r) - 1 < n:
            raise ArithmeticError(f"{other} does not divide {self}")
        q = [self.dom.zero] * (len(r) - n)
        lc = d.lc()
        for k in range(len(r) - 1 - n, -1, -1):
            top = r[k + n]
            if top == 0:
                continue
            f = self.dom.exquo(top, lc)
            q[k] = f
            for i, v in enumerate(d.c):
                r[k + i] = r[k + i] - f * v
        if any(v != 0 for v in r[:n]):
            raise ArithmeticError(f"{other} does not divide {self}")
        return UPoly._raw(q, self.dom)

    def prem(self, other) -> "UPoly":
        """Pseudo-remainder lc(other)^(deg self - deg other + 1) * self mod other."""
        d = self._coerce(other)
        r = list(self.c)
        n = d.degree()
        if len(r) - 1 < n:
            return self
        lc = d.lc()
        for k in range(len(r) - 1 - n, -1, -1):
            top = r[k + n]
            r = [v * lc for v in r]
            for i, v in enumerate(d.c):
                r[k + i] = r[k + i] - top * v
        return UPoly._raw(r[:n], self.dom)

    # -- comparisons ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.dom == other.dom and self.c == other.c
        try:
            return self.c == _strip([self.dom(other)])
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((tuple(self.c), self.dom))

    def __bool__(self):
        return bool(self.c)

    # -- evaluation and calculus ---------------------------------------
    def __call__(self, x):
        acc = self.dom.zero if not isinstance(x, UPoly) else x * 0
        for v in reversed(self.c):
            acc = acc * x + v
        return acc

    def compose(self, other: "UPoly") -> "UPoly":
        acc = UPoly._raw([], self.dom)
        for v in reversed(self.c):
            acc = acc * other + v
        return acc

    def derivative(self) -> "UPoly":
        return UPoly._raw([v * i for i, v in enumerate(self.c)][1:], self.dom)

    def monic(self) -> "UPoly":
        if not self.c:
            return self
        inv = self.dom.one / self.c[-1]
        return UPoly._raw([v * inv for v in self.c], self.dom)

    def map(self, f, dom: Domain) -> "UPoly":
        return UPoly._raw([f(v) for v in self.c], dom)

    def content(self):
        g = self.dom.zero
        for v in self.c:
            g = self.dom.gcd(g, v)
        return g

    def primitive(self) -> "UPoly":
        """Divide out the content and fix the sign/leading unit canonically."""
        if not self.c:
            return self
        if self.dom.is_field:
            return self.monic()
        g = self.content()
        p = UPoly._raw([self.dom.exquo(v, g) for v in self.c], self.dom)
        u = self.dom.canonical_unit(p.lc())
        if u != 1:
            p = UPoly._raw([self.dom.exquo(v, u) for v in p.c], self.dom)
        return p

    def powmod(self, e: int, mod: "UPoly") -> "UPoly":
        result = UPoly._raw([self.dom.one], self.dom)
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    # -- printing ------------------------------------------------------
    def to_str(self, var: str = "t") -> str:
        if not self.c:
            return "0"
        parts = []
        for k in range(len(self.c) - 1, -1, -1):
            v = self.c[k]
            if v == 0:
                continue
            parts.append(_term_str(v, self.dom, {var: k} if k else {}))
        return _join_terms(parts)

    def __str__(self):
        var = "x"
        if isinstance(self.dom, PolynomialRing):
            var = "x"
        return self.to_str(var)

    def __repr__(self):
        return f"UPoly({self.to_str('X')!r}, {self.dom})"


def _strip(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _coeff_str(v, dom: Domain) -> tuple[str, bool]:
    """Return (text, negative) for a nonzero coefficient."""
    if isinstance(v, UPoly):
        s = v.to_str(getattr(dom, "var", "t"))
        if len([u for u in v.c if u != 0]) > 1:
            return f"({s})", False
        if s.startswith("-"):
            return s[1:], True
        return s, False
    s = str(v)
    if s.startswith("-"):
        return s[1:], True
    return s, False


def _term_str(v, dom: Domain, powers: dict) -> str:
    text, neg = _coeff_str(v, dom)
    mono = "*".join(f"{name}^{e}" if e > 1 else name for name, e in powers.items() if e)
    if mono:
        if text == "1":
            body = mono
        else:
            body = f"{text}*{mono}"
    else:
        body = text
    return ("-" if neg else "+") + body


def _join_terms(parts: list[str]) -> str:
    if not parts:
        return "0"
    out = parts[0][1:] if parts[0][0] == "+" else "-" + parts[0][1:]
    for p in parts[1:]:
        out += f" {p[0]} {p[1:]}"
    return out


def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Greatest common divisor, normalized (monic over fields, primitive with
    canonical leading unit over ZZ and k[t])."""
    dom = a.dom
    if dom.is_field:
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()
    if a.is_zero():
        return b.primitive() * dom.normalize(b.content()) if not b.is_zero() else b
    if b.is_zero():
        return a.primitive() * dom.normalize(a.content())
    c = dom.normalize(dom.gcd(a.content(), b.content()))
    a, b = a.primitive(), b.primitive()
    if a.degree() < b.degree():
        a, b = b, a
    while not b.is_zero():
        r = a.prem(b)
        a, b = b, (r.primitive() if not r.is_zero() else r)
    return a.primitive() * c


def upoly_xgcd(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly, UPoly]:
    """Extended Euclid over a field: returns (g, s, t) with s a + t b = g monic."""
    dom = a.dom
    if not dom.is_field:
        raise ArithmeticError("extended gcd needs field coefficients")
    r0, r1 = a, b
    s0, s1 = UPoly._raw([dom.one], dom), UPoly._raw([], dom)
    t0, t1 = UPoly._raw([], dom), UPoly._raw([dom.one], dom)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = dom.one / r0.lc()
    return r0 * inv, s0 * inv, t0 * inv
