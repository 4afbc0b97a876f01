"""Sparse multivariate polynomials over a coefficient field."""

from __future__ import annotations

from .domains import Domain
from .upoly import _join_terms, _term_str


class MultiPoly:
    """Polynomial in ``nvars`` variables stored as ``{exponent tuple: coeff}``.

    Zero coefficients are never stored.  The degree of the zero polynomial is
    -1, which no nonzero polynomial can have.
    """

    __slots__ = ("terms", "nvars", "dom")

    def __init__(self, terms: dict, nvars: int, dom: Domain):
        self.nvars = nvars
        self.dom = dom
        clean = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != nvars or any(k < 0 for k in e):
                raise ValueError(f"bad exponent vector {e} for {nvars} variables")
            c = dom(c)
            if c != 0:
                clean[e] = clean.get(e, dom.zero) + c
                if clean[e] == 0:
                    del clean[e]
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict, nvars: int, dom: Domain) -> "MultiPoly":
        p = cls.__new__(cls)
        p.terms = terms
        p.nvars = nvars
        p.dom = dom
        return p

    @classmethod
    def zero(cls, nvars: int, dom: Domain) -> "MultiPoly":
        return cls._raw({}, nvars, dom)

    @classmethod
    def const(cls, c, nvars: int, dom: Domain) -> "MultiPoly":
        c = dom(c)
        return cls._raw({(0,) * nvars: c} if c != 0 else {}, nvars, dom)

    @classmethod
    def var(cls, i: int, nvars: int, dom: Domain) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return cls._raw({tuple(e): dom.one}, nvars, dom)

    @classmethod
    def monomial(cls, exp, nvars: int, dom: Domain, coeff=1) -> "MultiPoly":
        return cls({tuple(exp): coeff}, nvars, dom)

    # -- queries -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coeff(self, exp):
        return self.terms.get(tuple(exp), self.dom.zero)

    def homogeneous_part(self, d: int) -> "MultiPoly":
        return MultiPoly._raw({e: c for e, c in self.terms.items() if sum(e) == d}, self.nvars, self.dom)

    def _check(self, other: "MultiPoly"):
        if other.nvars != self.nvars or other.dom != self.dom:
            raise ValueError(
                f"ring mismatch: {self.nvars} vars over {self.dom} vs {other.nvars} vars over {other.dom}"
            )

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.const(other, self.nvars, self.dom)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v == 0:
                    del out[e]
                else:
                    out[e] = v
        return MultiPoly._raw(out, self.nvars, self.dom)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({e: -c for e, c in self.terms.items()}, self.nvars, self.dom)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            s = self.dom(other)
            if s == 0:
                return MultiPoly.zero(self.nvars, self.dom)
            return MultiPoly._raw({e: c * s for e, c in self.terms.items()}, self.nvars, self.dom)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return MultiPoly._raw({e: c for e, c in out.items() if c != 0}, self.nvars, self.dom)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(1, self.nvars, self.dom)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, exp, c) -> "MultiPoly":
        return MultiPoly._raw(
            {tuple(a + b for a, b in zip(e, exp)): v * c for e, v in self.terms.items()},
            self.nvars,
            self.dom,
        )

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.dom == other.dom and self.terms == other.terms
        try:
            return self == MultiPoly.const(other, self.nvars, self.dom)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.nvars, self.dom))

    def __bool__(self):
        return bool(self.terms)

    # -- substitution --------------------------------------------------
    def __call__(self, *point):
        """Evaluate at a point given as field elements or polynomials."""
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} values")
        acc = None
        for e, c in self.terms.items():
            t = c
            for v, k in zip(point, e):
                if k:
                    t = t * v**k
            acc = t if acc is None else acc + t
        if acc is None:
            return self.dom.zero
        return acc

    def substitute(self, images: list["MultiPoly"]) -> "MultiPoly":
        """Replace variable i by ``images[i]`` (all in a common ring)."""
        if len(images) != self.nvars:
            raise ValueError(f"expected {self.nvars} images")
        target = images[0]
        acc = MultiPoly.zero(target.nvars, target.dom)
        cache: dict = {}
        for e, c in self.terms.items():
            t = MultiPoly.const(c, target.nvars, target.dom)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = images[i] ** k
                    t = t * cache[key]
            acc = acc + t
        return acc

    def translate(self, point) -> "MultiPoly":
        """f(X + point): moves ``point`` to the origin."""
        n = self.nvars
        images = [MultiPoly.var(i, n, self.dom) + self.dom(point[i]) for i in range(n)]
        return self.substitute(images)

    def dehomogenize(self, i: int) -> "MultiPoly":
        """Set variable i to 1 and drop it."""
        out: dict = {}
        for e, c in self.terms.items():
            e2 = e[:i] + e[i + 1:]
            v = out.get(e2, self.dom.zero) + c
            if v == 0:
                out.pop(e2, None)
            else:
                out[e2] = v
        return MultiPoly._raw(out, self.nvars - 1, self.dom)

    def homogenize(self, i: int) -> "MultiPoly":
        """Insert a new variable at position i, homogenizing to the total degree."""
        d = self.degree()
        out = {}
        for e, c in self.terms.items():
            out[e[:i] + (d - sum(e),) + e[i:]] = c
        return MultiPoly._raw(out, self.nvars + 1, self.dom)

    def map_coeffs(self, f, dom: Domain) -> "MultiPoly":
        return MultiPoly({e: f(c) for e, c in self.terms.items()}, self.nvars, dom)

    # -- printing ------------------------------------------------------
    def sorted_terms(self):
        """Terms in descending degrevlex order."""
        return sorted(self.terms.items(), key=lambda ec: _degrevlex_key(ec[0]), reverse=True)

    def to_str(self, names=None) -> str:
        names = names or [f"x{i}" for i in range(self.nvars)]
        parts = [_term_str(c, self.dom, dict(zip(names, e))) for e, c in self.sorted_terms()]
        return _join_terms(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"MultiPoly({self.to_str()!r}, nvars={self.nvars}, {self.dom})"


def _degrevlex_key(e):
    return (sum(e), tuple(-k for k in reversed(e)))
