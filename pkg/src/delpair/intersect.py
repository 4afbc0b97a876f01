"""Intersection numbers on projective schemes over a field.

The intersection number of O(d_1), ..., O(d_r) on an r-dimensional X is the
Euler characteristic of c1(O(d_1)) ... c1(O(d_r)) O_X, which expands to the
alternating sum  sum_S (-1)^|S| chi(O_X(-sum_{i in S} d_i)).  Euler
characteristics are Hilbert polynomial values.
"""

from __future__ import annotations

import random

from .arith.domains import INF, QQ, Domain
from .arith.forms import BinaryForm, resultant
from .arith.multipoly import MultiPoly
from .arith.parse import default_names, parse_poly
from .grobner import DEFAULT_BUDGET, Ideal, MonomialOrder, buchberger, quotient_dimension
from .hilbert import hilbert_polynomial, hilbert_series
from .ktheory import TwistClass, c1_product


class ProjScheme:
    """Closed subscheme of P^N cut out by a homogeneous ideal."""

    def __init__(self, ideal: Ideal, budget: int = DEFAULT_BUDGET):
        if not ideal.homogeneous:
            ideal = Ideal(ideal.gens, ideal.nvars, ideal.dom, homogeneous=True)
        self.ideal = ideal
        self.N = ideal.nvars - 1
        self.dom = ideal.dom
        self.gb = buchberger(ideal, MonomialOrder("degrevlex", ideal.nvars), budget)
        self.hilbert_series = hilbert_series(self.gb.initial_ideal, ideal.nvars)
        self.hilbert_polynomial = hilbert_polynomial(self.hilbert_series)

    @classmethod
    def projective_space(cls, N: int, dom: Domain = QQ) -> "ProjScheme":
        return cls(Ideal([], N + 1, dom, homogeneous=True))

    @classmethod
    def from_strings(cls, gens: list[str], N: int, dom: Domain = QQ, budget: int = DEFAULT_BUDGET) -> "ProjScheme":
        names = default_names(N + 1)
        polys = [parse_poly(g, names, dom) for g in gens]
        return cls(Ideal(polys, N + 1, dom, homogeneous=True), budget)

    @property
    def dimension(self) -> int:
        """deg H, or -1 for the empty scheme."""
        return self.hilbert_polynomial.dimension

    @property
    def degree(self) -> int:
        return self.hilbert_series.degree()

    def chi(self, m: int) -> int:
        return self.hilbert_polynomial(m)

    def chi_class(self, F: TwistClass) -> int:
        """Euler characteristic of a twist class, extended linearly."""
        return sum(n * self.chi(d) for d, n in F.terms.items())

    def __repr__(self):
        return f"ProjScheme(P^{self.N}, {[str(g) for g in self.ideal.gens]}, {self.dom})"


class HyperDivisor:
    """Hypersurface section of degree d, optionally with an explicit form."""

    def __init__(self, degree: int, form: MultiPoly | None = None):
        if degree < 1:
            raise ValueError("a hypersurface section has degree >= 1")
        if form is not None:
            if not form.is_homogeneous() or form.degree() != degree:
                raise ValueError(f"form {form} is not homogeneous of degree {degree}")
        self.degree = degree
        self.form = form

    def __repr__(self):
        return f"HyperDivisor({self.degree}, {self.form})"


def _alternating_chi(X: ProjScheme, degrees) -> int:
    return X.chi_class(c1_product(list(degrees), TwistClass.sheaf(0)))


def intersection_number(X: ProjScheme, degrees) -> int:
    """(O(d_1) . ... . O(d_r)) on X with r = dim X."""
    degrees = [d.degree if isinstance(d, HyperDivisor) else int(d) for d in degrees]
    if len(degrees) != X.dimension:
        raise ValueError(f"arity must equal dimension (got {len(degrees)} degrees, dim X = {X.dimension})")
    return _alternating_chi(X, degrees)


def vanishing_check(X: ProjScheme, degrees) -> int:
    """The alternating chi sum for more sheaves than dim X; it is always 0."""
    degrees = [int(d) for d in degrees]
    if len(degrees) <= X.dimension:
        raise ValueError(f"vanishing_check needs more than {X.dimension} degrees")
    return _alternating_chi(X, degrees)


def _max_ideal_power(M: int, dom: Domain) -> list[MultiPoly]:
    return [MultiPoly({(i, M - i): 1}, 2, dom) for i in range(M + 1)]


def _local_dim(f, g, M, budget):
    gens = [f, g] + _max_ideal_power(M, f.dom)
    return quotient_dimension(buchberger(Ideal(gens), MonomialOrder("degrevlex", 2), budget))


def local_multiplicity(f: MultiPoly, g: MultiPoly, p, budget: int = DEFAULT_BUDGET) -> int:
    """Length of k[x,y]_p / (f, g) at a rational point p of the affine plane."""
    if f.nvars != 2 or g.nvars != 2:
        raise ValueError("local_multiplicity works with plane curves in 2 variables")
    if f.dom != g.dom:
        raise ValueError("curves over different fields")
    dom = f.dom
    p = tuple(dom(c) for c in p)
    if f(*p) != 0 or g(*p) != 0:
        return 0
    fo, go = f.translate(p), g.translate(p)
    total = quotient_dimension(buchberger(Ideal([fo, go]), MonomialOrder("degrevlex", 2), budget))
    if total is not INF:
        M = total + 1
        a, b = _local_dim(fo, go, M, budget), _local_dim(fo, go, M + 1, budget)
        if a != b:
            raise ArithmeticError(f"local length did not stabilize at M = {M}")
        return a
    bound = max(f.degree(), 1) * max(g.degree(), 1) + 2
    prev = _local_dim(fo, go, 1, budget)
    for M in range(2, bound + 2):
        cur = _local_dim(fo, go, M, budget)
        if cur == prev:
            return cur
        prev = cur
    raise ValueError("divisors share a component")


def _random_matrix(dom: Domain, rng: random.Random):
    while True:
        if dom == QQ:
            m = [[dom(rng.randint(-9, 9)) for _ in range(3)] for _ in range(3)]
        else:
            m = [[dom(rng.randrange(dom.p)) for _ in range(3)] for _ in range(3)]
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        if det != 0:
            return m


def _line_at_infinity(F: MultiPoly) -> BinaryForm:
    d = F.degree()
    return BinaryForm([F.coeff((i, d - i, 0)) for i in range(d + 1)], F.dom)


def total_multiplicity(F: MultiPoly, G: MultiPoly, seed: int = 0, budget: int = DEFAULT_BUDGET) -> int:
    """Sum of local intersection lengths of two coprime plane curves in P^2.

    A random linear change of coordinates moves every intersection point off
    the line z = 0; the certificate is Res(F(x,y,0), G(x,y,0)) != 0.  The
    answer is then the dimension of k[x,y]/(F(x,y,1), G(x,y,1)).
    """
    for H in (F, G):
        if H.nvars != 3 or not H.is_homogeneous() or H.degree() < 1:
            raise ValueError("total_multiplicity needs nonconstant ternary forms")
    if F.dom != G.dom:
        raise ValueError("curves over different fields")
    dom = F.dom
    meet = ProjScheme(Ideal([F, G], 3, dom, homogeneous=True), budget)
    if meet.dimension > 0:
        raise ValueError("forms are not coprime: the curves share a component")
    rng = random.Random(seed)
    xs = [MultiPoly.var(i, 3, dom) for i in range(3)]
    for _ in range(20):
        A = _random_matrix(dom, rng)
        images = [sum((A[i][j] * xs[j] for j in range(3)), MultiPoly.zero(3, dom)) for i in range(3)]
        F2, G2 = F.substitute(images), G.substitute(images)
        fi, gi = _line_at_infinity(F2), _line_at_infinity(G2)
        if fi.is_zero() or gi.is_zero() or resultant(fi, gi) == 0:
            continue
        f, g = F2.dehomogenize(2), G2.dehomogenize(2)
        gb = buchberger(Ideal([f, g]), MonomialOrder("degrevlex", 2), budget)
        return quotient_dimension(gb)
    raise ArithmeticError("no coordinate change cleared the line at infinity in 20 tries")
