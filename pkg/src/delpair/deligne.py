"""Deligne pairing on split families P^m x S -> S.

For the projection f: P^m x S -> S and O(a; b) = O_{P^m}(a) (x) f^*O_S(b),
Rf_* O(a; b) = H^*(P^m, O(a)) (x) O_S(b), so det Rf_* O(a; b) is the graded
line bundle of degree b * chi(P^m, O(a)) and grade chi(P^m, O(a)).  The
pairing <L_0, ..., L_n> is det Rf_* of c1(L_0^{-1}) ... c1(L_n^{-1}) O_X.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .arith.domains import QQ, Domain, PrimeField
from .arith.factor import factor_finite_field
from .arith.forms import BinaryForm, resultant
from .intersect import ProjScheme, intersection_number
from .ktheory import TwistClass, c1_product


@dataclass(frozen=True)
class SplitFamily:
    """P^m x S over S, where S is P^1 over ``dom`` or a point."""

    m: int
    base: str = "P1"
    dom: Domain = QQ

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("fiber dimension must be >= 0")
        if self.base not in ("P1", "point"):
            raise ValueError(f"base must be 'P1' or 'point', got {self.base!r}")


@dataclass(frozen=True)
class RelBundle:
    """O(a; b): fiber degree a, base degree b."""

    a: int
    b: int = 0

    def __mul__(self, other: "RelBundle") -> "RelBundle":
        return RelBundle(self.a + other.a, self.b + other.b)

    def inverse(self) -> "RelBundle":
        return RelBundle(-self.a, -self.b)

    @property
    def key(self) -> tuple[int, int]:
        return (self.a, self.b)

    def __str__(self):
        return f"O({self.a};{self.b})"


@dataclass(frozen=True)
class DetClass:
    """A graded line bundle on S recorded by its degree and its grade."""

    degree: int
    grade: int

    def __mul__(self, other: "DetClass") -> "DetClass":
        return DetClass(self.degree + other.degree, self.grade + other.grade)

    def inverse(self) -> "DetClass":
        return DetClass(-self.degree, -self.grade)

    def __truediv__(self, other: "DetClass") -> "DetClass":
        return self * other.inverse()

    def __pow__(self, k: int) -> "DetClass":
        return DetClass(k * self.degree, k * self.grade)

    @classmethod
    def unit(cls) -> "DetClass":
        return cls(0, 0)


def proj_cohomology_chi(m: int, a: int) -> tuple[int, tuple[int, int]]:
    """chi(P^m, O(a)) together with (h^0, h^m); other cohomology vanishes."""
    h0 = comb(a + m, m) if a >= 0 else 0
    hm = comb(-a - 1, m) if a <= -m - 1 else 0
    return h0 + (-1) ** m * hm, (h0, hm)


def chi_fiber(m: int, a: int) -> int:
    return proj_cohomology_chi(m, a)[0]


def _as_class(F) -> TwistClass:
    if isinstance(F, RelBundle):
        return TwistClass.sheaf(F.key)
    return F


def det_rf(F, fam: SplitFamily) -> DetClass:
    """det Rf_* of a formal sum of bundles O(a; b)."""
    F = _as_class(F)
    degree = grade = 0
    for (a, b), n in F.terms.items():
        c = chi_fiber(fam.m, a)
        grade += n * c
        if fam.base == "P1":
            degree += n * b * c
    return DetClass(degree, grade)


def pairing_class(bundles) -> TwistClass:
    """c1(L_0^{-1}) ... c1(L_n^{-1}) O_X as a class of bidegree twists."""
    return c1_product([L.inverse().key for L in bundles], TwistClass.sheaf((0, 0)))


def deligne_pairing(fam: SplitFamily, bundles) -> DetClass:
    bundles = list(bundles)
    if fam.m == 0:
        raise ValueError("relative dimension 0: use norm_pairing")
    if len(bundles) != fam.m + 1:
        raise ValueError(f"the pairing takes {fam.m + 1} bundles on a family of relative dimension {fam.m}, got {len(bundles)}")
    return det_rf(pairing_class(bundles), fam)


def norm_pairing(sheet_degrees, dom: Domain = QQ) -> DetClass:
    """<L> for the trivial d-sheeted cover of P^1, L of degree b_i on sheet i.

    Computed twice: as det(phi_* L) (x) det(phi_* O)^{-1} and as
    det Rf_*(c1(L^{-1}) O_X)^{-1}; the two must agree.
    """
    sheet_degrees = list(sheet_degrees)
    fam = SplitFamily(0, "P1", dom)
    direct = DetClass.unit()
    via_c1 = DetClass.unit()
    for b in sheet_degrees:
        direct = direct * det_rf(RelBundle(0, b), fam) / det_rf(RelBundle(0, 0), fam)
        via_c1 = via_c1 * det_rf(pairing_class([RelBundle(0, b)]), fam).inverse()
    if direct != via_c1:
        raise ArithmeticError(f"norm paths disagree: {direct} vs {via_c1}")
    return direct


def n1_expansion_check(fam: SplitFamily, L: RelBundle, M: RelBundle) -> bool:
    """<L, M> = det(O) det(L)^{-1} det(M)^{-1} det(L (x) M) on a family of relative dimension 1."""
    if fam.m != 1:
        raise ValueError("the n = 1 expansion needs relative dimension 1")
    O = RelBundle(0, 0)
    rhs = det_rf(O, fam) / det_rf(L, fam) / det_rf(M, fam) * det_rf(L * M, fam)
    return deligne_pairing(fam, [L, M]) == rhs


def det_chi_check(fam: SplitFamily, a: int, b: int, beta: int) -> bool:
    """det Rf_* O(a; b + beta) = det Rf_* O(a; b) (x) O_S(beta)^{chi(fibre, O(a))}.

    The fibre Euler characteristic comes from the Hilbert polynomial of P^m,
    independently of the closed form used by det_rf.
    """
    fibre = ProjScheme.projective_space(fam.m, fam.dom if fam.dom.is_field else QQ)
    chi = fibre.chi(a)
    lhs = det_rf(RelBundle(a, b + beta), fam)
    rhs = det_rf(RelBundle(a, b), fam) * DetClass(beta * chi if fam.base == "P1" else 0, 0)
    return lhs == rhs


def pullback_axiom_check(fam: SplitFamily, beta: int, bundles) -> bool:
    """<f^*O_S(beta), L_1, ..., L_m> has degree beta * (L_1 ... L_m on a fibre) and grade 0."""
    bundles = list(bundles)
    lhs = deligne_pairing(fam, [RelBundle(0, beta)] + bundles)
    fibre = ProjScheme.projective_space(fam.m, fam.dom if fam.dom.is_field else QQ)
    expected = beta * intersection_number(fibre, [L.a for L in bundles])
    return lhs == DetClass(expected, 0)


def _form_divisor_degree(phi: BinaryForm) -> int:
    """Number of zeros of a nonzero binary form on P^1, with multiplicity."""
    if isinstance(phi.dom, PrimeField):
        total = phi.y_order()
        f = phi.dehomogenize()
        if f.degree() > 0:
            total += sum(g.degree() * e for g, e in factor_finite_field(f))
        return total
    # no factorization over QQ: count roots as the formal degree
    return phi.degree


def restriction_degree(A: BinaryForm, B: BinaryForm, L: RelBundle) -> int:
    """Degree of L restricted to D = {x0 A(y) + x1 B(y) = 0} on P^1 x P^1.

    D is the graph of y -> (-B(y) : A(y)); the rational section
    l(x)^a y0^b of O(a; b) pulls back to l(-B, A)^a y0^b.
    """
    if A.degree != B.degree:
        raise ValueError("A and B must have the same degree")
    if resultant(A, B) == 0:
        raise ValueError("unsupported: D is not the graph of a section (A, B share a zero)")
    dom = A.dom
    for k in range(0, 8):
        phi = B * dom(-1) + A * dom(k)
        if not phi.is_zero():
            break
    else:
        raise ValueError("D is the zero form")
    y0 = BinaryForm([0, 1], dom)
    return L.a * _form_divisor_degree(phi) + L.b * _form_divisor_degree(y0)


def restriction_axiom_check(fam: SplitFamily, A: BinaryForm, B: BinaryForm, L: RelBundle) -> bool:
    """<L, O(D)> equals the norm of L restricted to the section divisor D."""
    if fam.m != 1 or fam.base != "P1":
        raise ValueError("the restriction check runs on P^1 x P^1")
    c = A.degree
    lhs = deligne_pairing(fam, [L, RelBundle(1, c)])
    rhs = norm_pairing([restriction_degree(A, B, L)], fam.dom)
    return lhs == rhs
