"""Exact Ostrowski numeration, Pell towers and their integer identities."""

from .exactq import QuadraticValue, qv_ceil, qv_combine, qv_floor, qv_sign
from .numer import (
    DualWord,
    NumerationContext,
    OstrowskiWord,
    classify_word,
    companion,
    context,
    decode,
    denominator,
    dual_decode,
    dual_encode,
    encode,
    enumerate_trimmed,
    nut,
    out,
)

__version__ = "0.1.0"
