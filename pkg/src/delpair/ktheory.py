"""Twist classes in K_0 and the first Chern class operators acting on them.

A class is a finite sum  n_1 [O(d_1)] + n_2 [O(d_2)] + ...  where a twist d
is an integer, or a tuple of integers for multi-degrees such as O(a; b) on
a product.  c1(L) acts by  F -> F - L^{-1} (x) F, i.e. [O(d)] -> [O(d)] - [O(d - a)].
"""

from __future__ import annotations

from itertools import combinations


def _add(d, a):
    if isinstance(d, tuple):
        return tuple(x + y for x, y in zip(d, a))
    return d + a


def _neg(a):
    if isinstance(a, tuple):
        return tuple(-x for x in a)
    return -a


def _zero_like(a):
    if isinstance(a, tuple):
        return (0,) * len(a)
    return 0


class TwistClass:
    """Immutable map twist -> nonzero integer multiplicity."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for d, n in dict(terms or {}).items():
            if isinstance(d, list):
                d = tuple(d)
            if n:
                clean[d] = clean.get(d, 0) + n
                if clean[d] == 0:
                    del clean[d]
        self.terms = clean

    @classmethod
    def sheaf(cls, d=0, n: int = 1) -> "TwistClass":
        """n [O(d)]."""
        return cls({d: n})

    def __add__(self, other: "TwistClass") -> "TwistClass":
        out = dict(self.terms)
        for d, n in other.terms.items():
            out[d] = out.get(d, 0) + n
        return TwistClass(out)

    def __neg__(self):
        return TwistClass({d: -n for d, n in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return TwistClass({d: k * n for d, n in self.terms.items()})

    def twist(self, a) -> "TwistClass":
        """Tensor with O(a)."""
        return TwistClass({_add(d, a): n for d, n in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return sorted(self.terms.items())

    def rank(self) -> int:
        return sum(self.terms.values())

    def __eq__(self, other):
        return isinstance(other, TwistClass) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for d, n in self.items():
            name = f"O({';'.join(map(str, d))})" if isinstance(d, tuple) else f"O({d})"
            parts.append(f"{n}{name}" if n != 1 else name)
        return " + ".join(parts).replace("+ -", "- ")


class C1Op:
    """c1(O(a)) for a twist degree (or degree vector) a."""

    __slots__ = ("a",)

    def __init__(self, a):
        self.a = tuple(a) if isinstance(a, list) else a

    def __call__(self, F: TwistClass) -> TwistClass:
        return c1_apply(self, F)

    def __repr__(self):
        return f"C1Op({self.a})"


def c1_apply(op: C1Op | int | tuple, F: TwistClass) -> TwistClass:
    """[O(d)] -> [O(d)] - [O(d - a)], extended linearly."""
    a = op.a if isinstance(op, C1Op) else op
    out = dict(F.terms)
    na = _neg(a)
    for d, n in F.terms.items():
        e = _add(d, na)
        out[e] = out.get(e, 0) - n
    return TwistClass(out)


def c1_product(degrees, F: TwistClass) -> TwistClass:
    """c1(O(a_1)) ... c1(O(a_r)) F, applied right to left."""
    for a in reversed(list(degrees)):
        F = c1_apply(a, F)
    return F


def inclusion_exclusion(degrees, F: TwistClass) -> TwistClass:
    """Closed form  sum over subsets S of (-1)^|S| F(-sum_{i in S} a_i)."""
    degrees = list(degrees)
    out = TwistClass()
    if not degrees:
        return F
    zero = _zero_like(degrees[0])
    for r in range(len(degrees) + 1):
        for S in combinations(range(len(degrees)), r):
            shift = zero
            for i in S:
                shift = _add(shift, degrees[i])
            out = out + ((-1) ** r) * F.twist(_neg(shift))
    return out


def check_identity_i(a, b, F: TwistClass) -> bool:
    """c1(a) c1(b) F = c1(a) F + c1(b) F - c1(a + b) F."""
    lhs = c1_apply(a, c1_apply(b, F))
    rhs = c1_apply(a, F) + c1_apply(b, F) - c1_apply(_add(a, b), F)
    return lhs == rhs


def check_commutativity(a, b, F: TwistClass) -> bool:
    return c1_apply(a, c1_apply(b, F)) == c1_apply(b, c1_apply(a, F))
