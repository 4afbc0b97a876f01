"""Exact coefficient arithmetic and polynomial primitives."""

from .domains import GF, INF, QQ, ZZ, Domain, GFElement, PolynomialRing, PrimeField, parse_domain
from .factor import factor_finite_field, squarefree_decomposition
from .forms import BinaryForm, resultant
from .multipoly import MultiPoly
from .parse import ParseError, parse_base_element, parse_form, parse_poly
from .primes import factor_integer, is_prime, valuation
from .upoly import UPoly, upoly_gcd, upoly_xgcd

__all__ = [
    "GF", "INF", "QQ", "ZZ", "Domain", "GFElement", "PolynomialRing", "PrimeField",
    "parse_domain", "factor_finite_field", "squarefree_decomposition", "BinaryForm",
    "resultant", "MultiPoly", "ParseError", "parse_base_element", "parse_form",
    "parse_poly", "factor_integer", "is_prime", "valuation", "UPoly", "upoly_gcd",
    "upoly_xgcd",
]
