"""Coefficient domains.

Every polynomial object carries a domain: ``ZZ``, ``QQ``, a prime field
``GF(p)`` or a univariate ring ``k[t]`` over one of the fields.  Elements are
plain ``int`` (ZZ), ``fractions.Fraction`` (QQ), :class:`GFElement` and
:class:`~delpair.arith.upoly.UPoly` respectively, so generic code can use the
ordinary arithmetic operators and only asks the domain for the few things
operators cannot express (exact division, gcd, canonical associates).
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering


@total_ordering
class _Infinity:
    """Sentinel for v(0) and infinite quotient dimensions."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __hash__(self):
        return hash("delpair.INF")

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"


INF = _Infinity()


def _is_prime_int(n: int) -> bool:
    # deterministic Miller-Rabin for n < 3.3e24
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Domain:
    """Base class for coefficient domains."""

    is_field = False
    characteristic = 0

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def exquo(self, a, b):
        """Exact quotient a / b; raises ArithmeticError if b does not divide a."""
        raise NotImplementedError

    def gcd(self, a, b):
        raise NotImplementedError

    def canonical_unit(self, a):
        """Unit u with a / u the canonical associate of a (u = 1 for a = 0)."""
        raise NotImplementedError

    def normalize(self, a):
        return self.exquo(a, self.canonical_unit(a))

    def format(self, a) -> str:
        return str(a)

    def __repr__(self):
        return str(self)


class IntegerRing(Domain):
    def __call__(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return x.numerator
        if isinstance(x, GFElement):
            raise TypeError("cannot coerce a prime-field element into ZZ")
        return int(x)

    def is_unit(self, a):
        return a in (1, -1)

    def exquo(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{b} does not divide {a}")
        return q

    def gcd(self, a, b):
        from math import gcd

        return gcd(a, b)

    def canonical_unit(self, a):
        return -1 if a < 0 else 1

    def __str__(self):
        return "ZZ"

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("ZZ")


class RationalField(Domain):
    is_field = True

    def __call__(self, x):
        if isinstance(x, GFElement):
            raise TypeError("cannot coerce a prime-field element into QQ")
        return Fraction(x)

    def is_unit(self, a):
        return a != 0

    def exquo(self, a, b):
        return Fraction(a) / b

    def gcd(self, a, b):
        return Fraction(0) if a == 0 and b == 0 else Fraction(1)

    def canonical_unit(self, a):
        return Fraction(1) if a == 0 else Fraction(a)

    def __str__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class GFElement:
    """Residue class modulo a prime p, stored as an int in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _val(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise ValueError(f"GF({self.p}) and GF({other.p}) elements do not mix")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._val(other)
        if o is NotImplemented:
            return o
        return GFElement(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._val(other)
        if o is NotImplemented:
            return o
        return GFElement(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._val(other)
        if o is NotImplemented:
            return o
        return GFElement(o - self.v, self.p)

    def __mul__(self, other):
        o = self._val(other)
        if o is NotImplemented:
            return o
        return GFElement(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._val(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return GFElement(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._val(other)
        if o is NotImplemented:
            return o
        return GFElement(o, self.p) / self

    def __neg__(self):
        return GFElement(-self.v, self.p)

    def __pow__(self, e: int):
        if e < 0:
            return GFElement(pow(pow(self.v, -1, self.p), -e, self.p), self.p)
        return GFElement(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"GF({self.p})({self.v})"

    def __str__(self):
        return str(self.v)


class PrimeField(Domain):
    is_field = True

    def __init__(self, p: int):
        if not isinstance(p, int) or p >= 2**63 or not _is_prime_int(p):
            raise ValueError(f"GF(p) needs a prime p below 2^63, got {p!r}")
        self.p = p
        self.characteristic = p

    def __call__(self, x):
        if isinstance(x, GFElement):
            if x.p != self.p:
                raise ValueError(f"element of GF({x.p}) is not in GF({self.p})")
            return x
        if isinstance(x, Fraction):
            return GFElement(x.numerator, self.p) / x.denominator
        return GFElement(int(x), self.p)

    def is_unit(self, a):
        return bool(a)

    def exquo(self, a, b):
        return self(a) / b

    def gcd(self, a, b):
        return self(0) if not a and not b else self(1)

    def canonical_unit(self, a):
        return self(1) if not a else self(a)

    def elements(self):
        return [GFElement(i, self.p) for i in range(self.p)]

    def __str__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


class PolynomialRing(Domain):
    """Univariate ring k[t] over QQ or GF(p); elements are UPoly."""

    def __init__(self, field: Domain, var: str = "t"):
        if not field.is_field:
            raise ValueError("k[t] needs a coefficient field")
        self.field = field
        self.var = var
        self.characteristic = field.characteristic

    def __call__(self, x):
        from .upoly import UPoly

        if isinstance(x, UPoly):
            if x.dom != self.field:
                raise ValueError(f"polynomial over {x.dom} is not in {self}")
            return x
        return UPoly([self.field(x)], self.field)

    def gen(self):
        from .upoly import UPoly

        return UPoly([self.field(0), self.field(1)], self.field)

    def is_unit(self, a):
        return a.degree() == 0

    def exquo(self, a, b):
        q, r = divmod(self(a), self(b))
        if not r.is_zero():
            raise ArithmeticError(f"{b} does not divide {a}")
        return q

    def gcd(self, a, b):
        from .upoly import upoly_gcd

        return upoly_gcd(self(a), self(b))

    def canonical_unit(self, a):
        a = self(a)
        return self(1) if a.is_zero() else self(a.lc())

    def format(self, a) -> str:
        return a.to_str(self.var)

    def __str__(self):
        return f"{self.field}[{self.var}]"

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and other.field == self.field
            and other.var == self.var
        )

    def __hash__(self):
        return hash(("poly", self.field, self.var))


ZZ = IntegerRing()
QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_domain(tag: str) -> Domain:
    """Parse 'ZZ', 'QQ', 'GF(7)', 'QQ[t]' or 'GF(7)[t]'."""
    tag = tag.replace(" ", "")
    if tag.endswith("[t]"):
        return PolynomialRing(parse_domain(tag[:-3]))
    if tag == "ZZ":
        return ZZ
    if tag == "QQ":
        return QQ
    if tag.startswith("GF(") and tag.endswith(")"):
        return GF(int(tag[3:-1]))
    raise ValueError(f"unknown domain tag {tag!r}")
