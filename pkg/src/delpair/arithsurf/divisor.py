"""Divisors and rational functions on X = P^1_R.

Horizontal components are keyed by primitive binary forms over R.  They are
not factored into irreducibles (no factorization over QQ or k(t) is
available); instead any collection of keys is refined to a coprime basis
before equality tests or pairings, which gives the same answers.
"""

from __future__ import annotations

from ..arith.domains import INF
from ..arith.forms import BinaryForm
from ..arith.upoly import UPoly
from .base import BaseS, _prime_sort_key


def _split_content(F: BinaryForm):
    """(content c, primitive P) with F = c * P."""
    P = F.primitive()
    dom = F.dom
    if dom.is_field:
        return F.top(), P
    for v, w in zip(F.c, P.c):
        if w != 0:
            return dom.exquo(v, w), P
    raise AssertionError("unreachable")


def coprime_base(forms):
    """Pairwise coprime primitive forms that generate the given ones multiplicatively."""
    basis: list[BinaryForm] = []
    work = [F.primitive() for F in forms if not F.is_constant()]
    while work:
        a = work.pop()
        if a.is_constant():
            continue
        for i, b in enumerate(basis):
            g = a.gcd(b)
            if not g.is_constant():
                del basis[i]
                work.extend([g, a.exquo(g).primitive(), b.exquo(g).primitive()])
                break
        else:
            basis.append(a)
    return basis


def express(F: BinaryForm, basis) -> dict:
    """Exponents of the basis elements in the primitive form F."""
    out = {}
    rest = F.primitive()
    for b in basis:
        k = 0
        while not rest.is_constant():
            g = rest.gcd(b)
            if g.is_constant():
                break
            rest = rest.exquo(b)
            k += 1
        if k:
            out[b] = k
    if not rest.is_constant():
        raise ArithmeticError(f"{F} is not a product of the basis")
    return out


def _refine(horizontal_dicts):
    basis = coprime_base([F for h in horizontal_dicts for F in h])
    out = []
    for h in horizontal_dicts:
        acc = {}
        for F, n in h.items():
            for b, k in express(F, basis).items():
                acc[b] = acc.get(b, 0) + n * k
        out.append({b: n for b, n in acc.items() if n})
    return out


def _form_sort_key(F: BinaryForm):
    def coeff_key(v):
        if isinstance(v, UPoly):
            return (v.degree(), [int(c) if not hasattr(c, "denominator") else c for c in reversed(v.c)])
        return int(v) if not hasattr(v, "denominator") else v

    return (F.degree, [coeff_key(v) for v in reversed(F.c)])


class ArithDivisor:
    """sum n_F [div F] + sum m_s [X_s] on P^1_R."""

    __slots__ = ("base", "horizontal", "vertical")

    def __init__(self, base: BaseS, horizontal=None, vertical=None):
        if base.kind == "field":
            raise ValueError("arithmetic divisors need a one-dimensional base")
        self.base = base
        h = {}
        for F, n in dict(horizontal or {}).items():
            if F.dom != base.ring:
                raise ValueError(f"form {F} is not over {base.ring}")
            if F.is_constant():
                raise ValueError("a horizontal component needs a form of positive degree")
            P = F.primitive()
            h[P] = h.get(P, 0) + n
        self.horizontal = {F: n for F, n in h.items() if n}
        v = {}
        for s, n in dict(vertical or {}).items():
            s = base.check_prime(s)
            v[s] = v.get(s, 0) + n
        self.vertical = {s: n for s, n in v.items() if n}

    @classmethod
    def zero(cls, base: BaseS) -> "ArithDivisor":
        return cls(base)

    @classmethod
    def of_form(cls, base: BaseS, F: BinaryForm, n: int = 1) -> "ArithDivisor":
        """n * div(F): the primitive part horizontally, the content vertically."""
        c, P = _split_content(F)
        out = cls(base, {P: n} if not P.is_constant() else {})
        vert = base.divisor(base.frac(c))
        vert.terms.pop(INF, None)
        return out + cls(base, vertical={s: n * e for s, e in vert.terms.items()})

    @classmethod
    def fiber(cls, base: BaseS, s, n: int = 1) -> "ArithDivisor":
        return cls(base, vertical={s: n})

    def __add__(self, other: "ArithDivisor") -> "ArithDivisor":
        if other.base != self.base:
            raise ValueError("divisors over different bases")
        h = dict(self.horizontal)
        for F, n in other.horizontal.items():
            h[F] = h.get(F, 0) + n
        v = dict(self.vertical)
        for s, n in other.vertical.items():
            v[s] = v.get(s, 0) + n
        return ArithDivisor(self.base, h, v)

    def __neg__(self):
        return ArithDivisor(
            self.base,
            {F: -n for F, n in self.horizontal.items()},
            {s: -n for s, n in self.vertical.items()},
        )

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return ArithDivisor(
            self.base,
            {F: k * n for F, n in self.horizontal.items()},
            {s: k * n for s, n in self.vertical.items()},
        )

    def canonical(self) -> "ArithDivisor":
        """Same divisor with pairwise coprime horizontal keys."""
        (h,) = _refine([self.horizontal])
        return ArithDivisor(self.base, h, self.vertical)

    def is_zero(self) -> bool:
        return not self.canonical().horizontal and not self.vertical

    def is_effective(self) -> bool:
        c = self.canonical()
        return all(n > 0 for n in c.horizontal.values()) and all(n > 0 for n in c.vertical.values())

    def __eq__(self, other):
        if not isinstance(other, ArithDivisor) or other.base != self.base:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("ArithDivisor is not hashable")

    def horizontal_items(self):
        return sorted(self.horizontal.items(), key=lambda Fn: _form_sort_key(Fn[0]))

    def vertical_items(self):
        return sorted(self.vertical.items(), key=lambda sn: _prime_sort_key(sn[0]))

    def __repr__(self):
        parts = [f"{n}*[{F}]" for F, n in self.horizontal_items()]
        parts += [f"{n}*[X_{self.base.format_prime(s)}]" for s, n in self.vertical_items()]
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


class RationalFunc:
    """num/den with forms of equal degree over R, common factors removed."""

    __slots__ = ("base", "num", "den")

    def __init__(self, base: BaseS, num: BinaryForm, den: BinaryForm | None = None):
        ring = base.ring
        if den is None:
            if num.degree != 0:
                raise ValueError("a rational function needs a denominator of the same degree")
            den = BinaryForm([ring.one], ring)
        if num.dom != ring or den.dom != ring:
            raise ValueError(f"forms must be over {ring}")
        if num.is_zero() or den.is_zero():
            raise ValueError("numerator and denominator must be nonzero")
        if num.degree != den.degree:
            raise ValueError(f"degrees differ ({num.degree} vs {den.degree}): not a function on P^1")
        g = num.gcd(den)
        if not g.is_constant():
            num, den = num.exquo(g), den.exquo(g)
        if not ring.is_field:
            cn, pn = _split_content(num)
            cd, pd = _split_content(den)
            c = ring.gcd(cn, cd)
            num = pn * ring.exquo(cn, c)
            den = pd * ring.exquo(cd, c)
        else:
            s = den.top()
            num, den = num * (ring.one / s), den * (ring.one / s)
        self.base = base
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, base: BaseS, c) -> "RationalFunc":
        ring = base.ring
        return cls(base, BinaryForm([ring(c)], ring), BinaryForm([ring.one], ring))

    @property
    def degree(self) -> int:
        return self.num.degree

    def __mul__(self, other: "RationalFunc") -> "RationalFunc":
        return RationalFunc(self.base, self.num * other.num, self.den * other.den)

    def inverse(self) -> "RationalFunc":
        return RationalFunc(self.base, self.den, self.num)

    def __truediv__(self, other):
        return self * other.inverse()

    def __eq__(self, other):
        if not isinstance(other, RationalFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RationalFunc is not hashable")

    def is_constant(self) -> bool:
        return self.num.is_constant()

    def __repr__(self):
        return f"({self.num})/({self.den})"


def reverse_t(F: BinaryForm) -> tuple[BinaryForm, int]:
    """F~ = u^e F|_{t = 1/u} with e the largest t-degree among the coefficients."""
    e = max(v.degree() for v in F.c)
    k = F.dom.field
    out = [UPoly._raw(list(reversed(list(v.c) + [k.zero] * (e + 1 - len(v.c)))), k) for v in F.c]
    return BinaryForm._raw(out, F.dom), e


def principal_divisor(f: RationalFunc) -> ArithDivisor:
    """div(f): horizontal parts from num and den, contents to the fibres."""
    base = f.base
    D = ArithDivisor.of_form(base, f.num) - ArithDivisor.of_form(base, f.den)
    if base.has_infinity:
        e_num = max(v.degree() for v in f.num.c)
        e_den = max(v.degree() for v in f.den.c)
        D = D + ArithDivisor.fiber(base, INF, e_den - e_num)
    return D
