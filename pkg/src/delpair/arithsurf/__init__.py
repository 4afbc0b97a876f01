"""Divisors on P^1 over ZZ, k[t] or P^1_k and their pairing into Div(S)."""

from .base import BaseS, DivisorOnS
from .divisor import ArithDivisor, RationalFunc, coprime_base, principal_divisor, reverse_t
from .pairing import (
    CommonComponentError,
    LocalPoint,
    deligne_section_divisor,
    intwithrat_check,
    intwithrat_sides,
    local_decomposition,
    norm_divisor,
    norm_gamma,
    pairing,
    shift_check,
    shift_sides,
    weil_reciprocity_check,
    weil_reciprocity_sides,
)

__all__ = [
    "ArithDivisor",
    "BaseS",
    "CommonComponentError",
    "DivisorOnS",
    "LocalPoint",
    "RationalFunc",
    "coprime_base",
    "deligne_section_divisor",
    "intwithrat_check",
    "intwithrat_sides",
    "local_decomposition",
    "norm_divisor",
    "norm_gamma",
    "pairing",
    "principal_divisor",
    "reverse_t",
    "shift_check",
    "shift_sides",
    "weil_reciprocity_check",
    "weil_reciprocity_sides",
]
