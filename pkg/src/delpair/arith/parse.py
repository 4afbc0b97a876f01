"""Reading polynomials and forms from text.

Grammar: sums of terms like ``3/2*x0^2*x1``, with ``+``, ``-``, ``*``, ``^``,
parentheses and division by constants.  Variables are ``x0..x{n-1}`` for
plane and projective work, ``x, y`` for binary forms, and ``t`` for the base.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .domains import QQ, ZZ, Domain, PolynomialRing
from .forms import BinaryForm
from .multipoly import MultiPoly
from .upoly import UPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class ParseError(ValueError):
    pass


def _tokenize(text: str):
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num), m.start(1)))
        elif name is not None:
            out.append(("name", name, m.start(2)))
        elif op.strip():
            if op not in "+-*/^()":
                raise ParseError(f"unexpected character {op!r} at {m.start(3)}")
            out.append(("op", op, m.start(3)))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text, names, dom):
        self.toks = _tokenize(text)
        self.i = 0
        self.names = list(names)
        self.dom = dom
        self.n = len(self.names)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t[0] != "op" or t[1] != op:
            raise ParseError(f"expected {op!r} at {t[2]}")

    def parse(self) -> MultiPoly:
        if self.peek()[0] == "end":
            raise ParseError("empty polynomial")
        p = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected {t[1]!r} at {t[2]}")
        return p

    def expr(self):
        acc = self.term()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if t[1] == "+" else acc - rhs
            else:
                return acc

    def term(self):
        acc = self.unary()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "*/":
                self.take()
                rhs = self.unary()
                if t[1] == "*":
                    acc = acc * rhs
                else:
                    if rhs.degree() > 0 or rhs.is_zero():
                        raise ParseError(f"division by a non-constant or zero at {t[2]}")
                    acc = acc * (self.dom.one / rhs.coeff((0,) * self.n))
            else:
                return acc

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            v = self.unary()
            return -v if t[1] == "-" else v
        return self.power()

    def power(self):
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "num":
                raise ParseError(f"exponent must be a nonnegative integer at {e[2]}")
            return base ** e[1]
        return base

    def atom(self):
        t = self.take()
        if t[0] == "num":
            return MultiPoly.const(t[1], self.n, self.dom)
        if t[0] == "name":
            if t[1] not in self.names:
                raise ParseError(f"unknown variable {t[1]!r} at {t[2]} (expected one of {self.names})")
            return MultiPoly.var(self.names.index(t[1]), self.n, self.dom)
        if t[0] == "op" and t[1] == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise ParseError(f"unexpected {t[1]!r} at {t[2]}")


def parse_poly(text: str, names, dom: Domain) -> MultiPoly:
    """Parse over a field ``dom`` in the given variables."""
    if not dom.is_field:
        raise ValueError("parse_poly needs a coefficient field")
    return _Parser(text, names, dom).parse()


def default_names(n: int) -> list[str]:
    return [f"x{i}" for i in range(n)]


def _field_of(dom: Domain) -> Domain:
    if dom == ZZ:
        return QQ
    if isinstance(dom, PolynomialRing):
        return dom.field
    return dom


def _coerce_coeff(v: Fraction, dom: Domain):
    if dom == ZZ:
        if v.denominator != 1:
            raise ParseError(f"coefficient {v} is not an integer")
        return v.numerator
    return dom(v)


def parse_base_element(text: str, dom: Domain):
    """Parse an element of ZZ, a field, or k[t]."""
    field = _field_of(dom)
    p = parse_poly(text, ["t"], field)
    if isinstance(dom, PolynomialRing):
        deg = max(p.degree(), 0)
        return UPoly([p.coeff((k,)) for k in range(deg + 1)], field)
    if p.degree() > 0:
        raise ParseError(f"{text!r} is not a constant")
    return _coerce_coeff(p.coeff((0,)), dom) if dom == ZZ else p.coeff((0,))


def parse_form(text: str, dom: Domain, degree: int | None = None) -> BinaryForm:
    """Parse a binary form in x, y; over k[t] the coefficients may involve t.

    ``degree`` fixes the formal degree when the text is a constant such as
    ``5`` that should be read as a form of positive degree; otherwise the
    text must be homogeneous in x, y.
    """
    field = _field_of(dom)
    p = parse_poly(text, ["x", "y", "t"], field)
    if p.is_zero():
        raise ParseError("the zero form is not allowed")
    degs = {e[0] + e[1] for e in p.terms}
    if len(degs) != 1:
        raise ParseError(f"{text!r} is not homogeneous in x, y")
    d = degs.pop()
    if degree is not None and degree != d:
        raise ParseError(f"{text!r} has degree {d}, expected {degree}")
    if not isinstance(dom, PolynomialRing) and any(e[2] for e in p.terms):
        raise ParseError(f"variable t is not allowed over {dom}")
    coeffs = []
    for i in range(d + 1):
        if isinstance(dom, PolynomialRing):
            tdeg = max((e[2] for e in p.terms if e[0] == i), default=0)
            coeffs.append(UPoly([p.coeff((i, d - i, k)) for k in range(tdeg + 1)], field))
        else:
            coeffs.append(_coerce_coeff(p.coeff((i, d - i, 0)), dom) if dom == ZZ else p.coeff((i, d - i, 0)))
    return BinaryForm(coeffs, dom)
