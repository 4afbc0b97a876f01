"""Binary forms F(x, y) = sum c_i x^i y^(d-i) and their resultants."""

from __future__ import annotations

from .domains import Domain
from .upoly import UPoly, _join_terms, _term_str, upoly_gcd


class BinaryForm:
    """A binary form of formal degree ``d`` over ``dom``.

    ``c[i]`` is the coefficient of x^i y^(d-i).  The formal degree is kept
    even when the top coefficients vanish: such a form passes through the
    point at infinity (x : y) = (1 : 0).
    """

    __slots__ = ("c", "dom")

    def __init__(self, coeffs, dom: Domain):
        if len(coeffs) == 0:
            raise ValueError("a binary form needs at least one coefficient")
        self.dom = dom
        self.c = tuple(dom(v) for v in coeffs)

    @classmethod
    def _raw(cls, coeffs, dom: Domain) -> "BinaryForm":
        f = cls.__new__(cls)
        f.dom = dom
        f.c = tuple(coeffs)
        return f

    @classmethod
    def from_upoly(cls, u: UPoly, d: int | None = None) -> "BinaryForm":
        """Homogenize u(x) to formal degree d (default deg u)."""
        if d is None:
            d = max(u.degree(), 0)
        if u.degree() > d:
            raise ValueError(f"cannot homogenize degree {u.degree()} to {d}")
        zero = u.dom.zero
        return cls._raw(list(u.c) + [zero] * (d + 1 - len(u.c)), u.dom)

    @classmethod
    def linear(cls, a, b, dom: Domain) -> "BinaryForm":
        """The form a*x + b*y."""
        return cls([b, a], dom)

    # -- queries -------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.c)

    def dehomogenize(self) -> UPoly:
        """f(x) = F(x, 1)."""
        return UPoly._raw(list(self.c), self.dom)

    def y_order(self) -> int:
        """Multiplicity of the factor y, i.e. of the point at infinity."""
        return self.degree - self.dehomogenize().degree()

    def top(self):
        """Coefficient of the highest power of x that occurs."""
        for v in reversed(self.c):
            if v != 0:
                return v
        return self.dom.zero

    def swap(self) -> "BinaryForm":
        """F(y, x)."""
        return BinaryForm._raw(self.c[::-1], self.dom)

    def __call__(self, x, y):
        acc = self.dom.zero
        d = self.degree
        for i, v in enumerate(self.c):
            if v != 0:
                acc = acc + v * x**i * y ** (d - i)
        return acc

    # -- arithmetic ----------------------------------------------------
    def __mul__(self, other):
        if not isinstance(other, BinaryForm):
            s = self.dom(other)
            return BinaryForm._raw([v * s for v in self.c], self.dom)
        self._check(other)
        zero = self.dom.zero
        out = [zero] * (len(self.c) + len(other.c) - 1)
        for i, u in enumerate(self.c):
            if u == 0:
                continue
            for j, v in enumerate(other.c):
                out[i + j] = out[i + j] + u * v
        return BinaryForm._raw(out, self.dom)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = BinaryForm._raw([self.dom.one], self.dom)
        for _ in range(k):
            out = out * self
        return out

    def __add__(self, other):
        self._check(other)
        if other.degree != self.degree:
            raise ValueError("can only add forms of equal degree")
        return BinaryForm._raw([a + b for a, b in zip(self.c, other.c)], self.dom)

    def __neg__(self):
        return BinaryForm._raw([-v for v in self.c], self.dom)

    def __sub__(self, other):
        return self + (-other)

    def _check(self, other):
        if other.dom != self.dom:
            raise ValueError(f"forms over {self.dom} and {other.dom} do not mix")

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.dom == other.dom and self.c == other.c

    def __hash__(self):
        return hash((self.c, self.dom))

    def map(self, f, dom: Domain) -> "BinaryForm":
        return BinaryForm._raw([dom(f(v)) for v in self.c], dom)

    def content(self):
        g = self.dom.zero
        for v in self.c:
            g = self.dom.gcd(g, v)
        return g

    def primitive(self) -> "BinaryForm":
        """Divide out the content and the canonical unit of the top coefficient."""
        if self.is_zero():
            raise ValueError("the zero form has no primitive part")
        dom = self.dom
        if dom.is_field:
            g = self.top()
        else:
            g = self.content()
            g = dom.exquo(g, dom.canonical_unit(g)) if g != 0 else g
            u = dom.canonical_unit(dom.exquo(self.top(), g))
            g = g * u
        return BinaryForm._raw([dom.exquo(v, g) for v in self.c], dom)

    def gcd(self, other: "BinaryForm") -> "BinaryForm":
        """Greatest common divisor as a form (primitive or monic)."""
        self._check(other)
        k = min(self.y_order(), other.y_order())
        g = upoly_gcd(self.dehomogenize(), other.dehomogenize())
        h = BinaryForm.from_upoly(g)
        if k:
            h = h * y_form(self.dom) ** k
        return h.primitive() if not h.is_zero() else h

    def exquo(self, other: "BinaryForm") -> "BinaryForm":
        self._check(other)
        if other.y_order() > self.y_order():
            raise ArithmeticError(f"{other} does not divide {self}")
        q = self.dehomogenize().exquo(other.dehomogenize())
        return BinaryForm.from_upoly(q, self.degree - other.degree)

    def is_constant(self) -> bool:
        return self.degree == 0

    # -- printing ------------------------------------------------------
    def to_str(self, xname: str = "x", yname: str = "y") -> str:
        d = self.degree
        parts = [
            _term_str(self.c[i], self.dom, {xname: i, yname: d - i})
            for i in range(d, -1, -1)
            if self.c[i] != 0
        ]
        return _join_terms(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"BinaryForm({self.to_str()!r}, {self.dom})"


def y_form(dom: Domain) -> BinaryForm:
    """The form y (the point at infinity)."""
    return BinaryForm._raw([dom.one, dom.zero], dom)


def bareiss_det(rows: list[list], dom: Domain):
    """Fraction-free determinant over an integral domain."""
    n = len(rows)
    if n == 0:
        return dom.one
    m = [list(r) for r in rows]
    sign = 1
    prev = dom.one
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return dom.zero
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = dom.exquo(row_i[j] * pk - mik * row_k[j], prev)
        prev = pk
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_matrix(f: BinaryForm, g: BinaryForm) -> list[list]:
    d, e = f.degree, g.degree
    zero = f.dom.zero
    fh = list(reversed(f.c))
    gh = list(reversed(g.c))
    rows = []
    for i in range(e):
        rows.append([zero] * i + fh + [zero] * (e - 1 - i))
    for i in range(d):
        rows.append([zero] * i + gh + [zero] * (d - 1 - i))
    return rows


def resultant(f: BinaryForm, g: BinaryForm):
    """Res(F, G) as the Sylvester determinant with formal degrees.

    With F = a * prod (x - r_i y) this is a^deg G * prod G(r_i, 1), so
    Res(x - 2y, x - 7y) = -5 and Res(F, c) = c^deg F.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("zero form has no resultant")
    f._check(g)
    return bareiss_det(sylvester_matrix(f, g), f.dom)
