"""Exact arithmetic: Laurent polynomials, cyclotomic fields, Smith form, signatures."""

from fractions import Fraction as Rational

from .cyclotomic import (
    CycloElt,
    cyclotomic,
    euler_phi,
    exact_rank,
    is_zero_at_root,
    resultant,
    resultant_abs,
)
from .hermitian import PrecisionPolicy, hermitian_signature, signature_numeric
from .laurent import ONE, T, LaurentPoly
from .matrix import block_diag, integer_det, transpose
from .snf import AbelianGroupSNF, smith_diagonal, smith_normal_form

__all__ = [
    "Rational",
    "LaurentPoly",
    "T",
    "ONE",
    "CycloElt",
    "cyclotomic",
    "euler_phi",
    "exact_rank",
    "is_zero_at_root",
    "resultant",
    "resultant_abs",
    "AbelianGroupSNF",
    "smith_normal_form",
    "smith_diagonal",
    "PrecisionPolicy",
    "hermitian_signature",
    "signature_numeric",
    "integer_det",
    "transpose",
    "block_diag",
]
