"""Base schemes S and divisors on them."""

from __future__ import annotations

from fractions import Fraction

from ..arith.domains import INF, QQ, ZZ, Domain, GFElement, PolynomialRing, PrimeField
from ..arith.factor import factor_finite_field
from ..arith.primes import factor_integer, is_prime
from ..arith.ratfield import TFrac
from ..arith.upoly import UPoly


class BaseS:
    """Spec ZZ, Spec k[t], P^1_k (k[t] plus the place at infinity) or Spec k.

    ``ring`` is the coordinate ring R whose elements are the coefficients of
    binary forms on P^1_R.
    """

    def __init__(self, kind: str, field: Domain | None = None):
        if kind not in ("ZZ", "kt", "P1", "field"):
            raise ValueError(f"unknown base kind {kind!r}")
        if kind == "ZZ":
            field = QQ
            ring = ZZ
        else:
            if field is None or not field.is_field:
                raise ValueError(f"base {kind} needs a coefficient field")
            ring = field if kind == "field" else PolynomialRing(field)
        self.kind = kind
        self.field = field
        self.ring = ring

    @classmethod
    def parse(cls, tag: str) -> "BaseS":
        """'ZZ', 'QQ', 'GF(7)', 'GF(7)[t]', 'QQ[t]', 'P1(GF(7))', 'P1(QQ)'."""
        from ..arith.domains import parse_domain

        tag = tag.replace(" ", "")
        if tag == "ZZ":
            return cls("ZZ")
        if tag.startswith("P1(") and tag.endswith(")"):
            return cls("P1", parse_domain(tag[3:-1]))
        if tag.endswith("[t]"):
            return cls("kt", parse_domain(tag[:-3]))
        return cls("field", parse_domain(tag))

    @property
    def tag(self) -> str:
        if self.kind == "ZZ":
            return "ZZ"
        if self.kind == "field":
            return str(self.field)
        if self.kind == "kt":
            return f"{self.field}[t]"
        return f"P1({self.field})"

    @property
    def has_infinity(self) -> bool:
        return self.kind == "P1"

    @property
    def is_poly(self) -> bool:
        return self.kind in ("kt", "P1")

    def __eq__(self, other):
        return isinstance(other, BaseS) and other.kind == self.kind and other.field == self.field

    def __hash__(self):
        return hash((self.kind, self.field))

    def __repr__(self):
        return f"BaseS({self.tag})"

    # -- fraction field ------------------------------------------------
    def frac(self, a, b=None):
        """a / b in Frac(R)."""
        if self.kind == "ZZ":
            return Fraction(a) if b is None else Fraction(a, b)
        if self.kind == "field":
            return self.field(a) if b is None else self.field(a) / b
        a = self.ring(a)
        return TFrac(a) if b is None else TFrac(a, self.ring(b))

    def frac_one(self):
        return self.frac(1)

    # -- closed points -------------------------------------------------
    def check_prime(self, s):
        if s is INF:
            if not self.has_infinity:
                raise ValueError(f"{self.tag} has no place at infinity")
            return s
        if self.kind == "ZZ":
            if not isinstance(s, int) or not is_prime(s):
                raise ValueError(f"{s} is not a prime of ZZ")
            return s
        if self.kind == "field":
            raise ValueError("a field base has a single closed point and no primes")
        s = self.ring(s)
        if s.degree() < 1:
            raise ValueError("a prime of k[t] has positive degree")
        s = s.monic()
        if isinstance(self.field, PrimeField):
            fs = factor_finite_field(s)
            if len(fs) != 1 or fs[0][1] != 1:
                raise ValueError(f"{s.to_str('t')} is not irreducible")
        elif s.degree() != 1:
            raise ValueError("over QQ[t] only linear primes can be checked")
        return s

    def prime_degree(self, s) -> int:
        """[k(s) : k]; 1 for primes of ZZ."""
        if s is INF or self.kind == "ZZ":
            return 1
        return s.degree()

    def factor(self, r) -> dict:
        """Prime factorization of a nonzero element of R (units dropped)."""
        if self.kind == "ZZ":
            return factor_integer(int(r))
        if self.kind == "field":
            if r == 0:
                raise ValueError("cannot factor 0")
            return {}
        r = self.ring(r)
        if r.is_zero():
            raise ValueError("cannot factor 0")
        if r.degree() == 0:
            return {}
        if not isinstance(self.field, PrimeField):
            raise NotImplementedError("factorization over QQ is not supported; use ZZ or GF(p)[t] bases")
        return dict(factor_finite_field(r))

    def divisor(self, x) -> "DivisorOnS":
        """div(x) on S for x in Frac(R)^x."""
        if self.kind == "ZZ":
            x = Fraction(x)
            if x == 0:
                raise ValueError("div(0) is undefined")
            out = dict(self.factor(x.numerator))
            for p, e in self.factor(x.denominator).items():
                out[p] = out.get(p, 0) - e
            return DivisorOnS(self, out)
        if self.kind == "field":
            if x == 0:
                raise ValueError("div(0) is undefined")
            return DivisorOnS(self, {})
        if isinstance(x, UPoly):
            x = TFrac(x)
        if x.is_zero():
            raise ValueError("div(0) is undefined")
        out = dict(self.factor(x.num))
        for p, e in self.factor(x.den).items():
            out[p] = out.get(p, 0) - e
        if self.has_infinity:
            out[INF] = x.den.degree() - x.num.degree()
        return DivisorOnS(self, out)

    def valuation(self, r, s) -> int:
        """v_s(r) for nonzero r in R (not at infinity)."""
        if self.kind == "ZZ":
            r, e = abs(int(r)), 0
            while r % s == 0:
                r //= s
                e += 1
            return e
        r, e = self.ring(r), 0
        while True:
            q, rem = divmod(r, s)
            if not rem.is_zero():
                return e
            r, e = q, e + 1

    # -- residue fields ------------------------------------------------
    def residue_field(self, s) -> PrimeField:
        """k(s) when it is a prime field; otherwise unsupported."""
        if self.kind == "ZZ":
            from ..arith.domains import GF

            return GF(s)
        if self.kind == "field" or not isinstance(self.field, PrimeField):
            raise ValueError(f"unsupported: residue field of {self.tag} is not finite")
        if s is not INF and s.degree() != 1:
            raise ValueError("unsupported: residue field of degree > 1 (extension fields are not implemented)")
        return self.field

    def format_prime(self, s) -> str:
        if s is INF:
            return "inf"
        if self.kind == "ZZ":
            return str(s)
        return s.to_str("t")

    def parse_prime(self, text: str):
        text = text.strip()
        if text == "inf":
            return self.check_prime(INF)
        if self.kind == "ZZ":
            return self.check_prime(int(text))
        from ..arith.parse import parse_base_element

        return self.check_prime(parse_base_element(text, self.ring))

    def format_element(self, x) -> str:
        if isinstance(x, (TFrac, UPoly)):
            return x.to_str("t")
        if isinstance(x, GFElement):
            return str(x)
        return str(Fraction(x))


def _prime_sort_key(s):
    if s is INF:
        return (2,)
    if isinstance(s, int):
        return (0, s)
    return (1, s.degree(), [int(v) if not isinstance(v, Fraction) else v for v in reversed(s.c)])


class DivisorOnS:
    """Finite Z-combination of closed points of S."""

    __slots__ = ("base", "terms")

    def __init__(self, base: BaseS, terms=None):
        self.base = base
        self.terms = {s: n for s, n in dict(terms or {}).items() if n}

    def __add__(self, other: "DivisorOnS") -> "DivisorOnS":
        out = dict(self.terms)
        for s, n in other.terms.items():
            out[s] = out.get(s, 0) + n
        return DivisorOnS(self.base, out)

    def __neg__(self):
        return DivisorOnS(self.base, {s: -n for s, n in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return DivisorOnS(self.base, {s: k * n for s, n in self.terms.items()})

    def coeff(self, s) -> int:
        return self.terms.get(s, 0)

    def degree(self) -> int:
        """sum n_s [k(s) : k]."""
        return sum(n * self.base.prime_degree(s) for s, n in self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return sorted(self.terms.items(), key=lambda sn: _prime_sort_key(sn[0]))

    def as_dict(self) -> dict[str, int]:
        return {self.base.format_prime(s): n for s, n in self.items()}

    def __eq__(self, other):
        return isinstance(other, DivisorOnS) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{n}*[{self.base.format_prime(s)}]" for s, n in self.items()).replace("+ -", "- ")
