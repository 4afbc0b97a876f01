"""Rational functions k(t) over a prime field or QQ."""

from __future__ import annotations

from .domains import Domain
from .upoly import UPoly, upoly_gcd


class TFrac:
    """num/den in k(t), reduced with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: UPoly, den: UPoly | None = None):
        if den is None:
            den = UPoly([1], num.dom)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in k(t)")
        g = upoly_gcd(num, den) if not num.is_zero() else den
        num, den = num // g, den // g
        lc = den.lc()
        self.num = num * (num.dom.one / lc)
        self.den = den.monic()

    @property
    def dom(self) -> Domain:
        return self.num.dom

    def _coerce(self, other):
        if isinstance(other, TFrac):
            return other
        if isinstance(other, UPoly):
            return TFrac(other)
        return TFrac(UPoly([other], self.dom))

    def __mul__(self, other):
        o = self._coerce(other)
        return TFrac(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero in k(t)")
        return TFrac(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return TFrac(self.den, self.num) ** (-k)
        return TFrac(self.num**k, self.den**k)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def to_str(self, var: str = "t") -> str:
        n = self.num.to_str(var)
        if self.den.degree() == 0:
            return n
        d = self.den.to_str(var)
        if len([c for c in self.num.c if c != 0]) > 1:
            n = f"({n})"
        if len([c for c in self.den.c if c != 0]) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"TFrac({self.to_str()!r})"
