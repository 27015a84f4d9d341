"""Counting Deedees and Edees per block.

Block k holds the rows whose labels have length 2k-1 or 2k, i.e. the rows
with first-column value V in [D_{2k-1}, D_{2k+1}).
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .exactq import QuadraticValue
from .numer import _ctx, trimmed_rank
from .towers import Unsupported, classify_palindrome, tower_row


def _alpha_pow(ctx, k: int) -> QuadraticValue:
    # alpha^k = (E_k + D_k sqrt(delta)) / 2
    return QuadraticValue(ctx.E(k), ctx.D(k), 2, ctx.delta)


def _ceil_count(lo: QuadraticValue, hi: QuadraticValue) -> int:
    """Number of integers h with lo <= h < hi."""
    return max(hi.ceil() - lo.ceil(), 0)


def block_counts(ctx, k: int) -> tuple[int, int]:
    """(deedees, edees) in block k from the logarithm rule, evaluated exactly."""
    ctx = _ctx(ctx)
    if ctx.d < 2:
        raise Unsupported("blocks are defined for d >= 2")
    if k < 1:
        raise ValueError(f"block index must be >= 1, got {k}")
    lo, hi = _alpha_pow(ctx, k - 1), _alpha_pow(ctx, k)
    deedees = _ceil_count(lo, hi)
    # j*sqrt(delta) in [lo, hi), j over halves when d is even
    scale = 2 if ctx.d % 2 == 0 else 1
    root = QuadraticValue(0, 1, 1, ctx.delta)
    edees = _ceil_count(lo * scale / root, hi * scale / root)
    return deedees, edees


def block_multipliers(ctx, k: int) -> tuple[list[int], list[Fraction]]:
    """The multipliers j counted by block_counts, listed explicitly."""
    ctx = _ctx(ctx)
    lo, hi = _alpha_pow(ctx, k - 1), _alpha_pow(ctx, k)
    dee = list(range(lo.ceil(), hi.ceil()))
    scale = 2 if ctx.d % 2 == 0 else 1
    root = QuadraticValue(0, 1, 1, ctx.delta)
    hs = range((lo * scale / root).ceil(), (hi * scale / root).ceil())
    return dee, [Fraction(h, scale) for h in hs]


def block_of(ctx, j) -> int:
    """floor(log_alpha(j)) + 1 for j >= 1, without logarithms."""
    ctx = _ctx(ctx)
    j = Fraction(j)
    if j < 1:
        raise ValueError(f"multiplier must be >= 1, got {j}")
    k = 1
    while (_alpha_pow(ctx, k) * j.denominator - j.numerator).sign() <= 0:
        k += 1
    return k


def block_value_range(ctx, k: int) -> tuple[int, int]:
    """First-column values [lo, hi) of the rows in block k."""
    ctx = _ctx(ctx)
    return ctx.D(2 * k - 1), ctx.D(2 * k + 1)


def block_row_range(ctx, k: int) -> tuple[int, int]:
    """Row indices [first, last] of block k."""
    lo, hi = block_value_range(ctx, k)
    return trimmed_rank(ctx, lo - 1) + 1, trimmed_rank(ctx, hi - 1)


def scan_block_rows(ctx, k: int) -> tuple[int, int]:
    """Brute force: classify every row of block k one at a time."""
    ctx = _ctx(ctx)
    first, last = block_row_range(ctx, k)
    dee = edee = 0
    for m in range(first, last + 1):
        L = len(tower_row(ctx, m).word)
        if L not in (2 * k - 1, 2 * k):
            raise AssertionError(f"row {m} has label length {L}, outside block {k}")
        kind = classify_palindrome(ctx, m).kind
        dee += kind == "deedee"
        edee += kind == "edee"
    return dee, edee


# -- vectorised scan ------------------------------------------------------------

_INT64_SAFE = 1 << 62


def _isqrt(M: np.ndarray) -> np.ndarray:
    """Exact integer square root of a non-negative int64 array.

    The float estimate is only a starting point; the result is pinned by
    s*s <= M < (s+1)*(s+1) in integer arithmetic.
    """
    s = np.sqrt(M.astype(np.float64)).astype(np.int64)
    for _ in range(4):
        sq = s * s
        high = sq > M
        low = sq + 2 * s + 1 <= M
        if not (high.any() or low.any()):
            return s
        s -= high
        s += low
    raise ArithmeticError("integer square root did not converge")


def _out_vec(d: int, delta: int, n: np.ndarray) -> np.ndarray:
    # floor(((n-1)d + (n+1) sqrt(delta)) / 2); sqrt term is irrational for n >= 0
    return ((n - 1) * d + _isqrt((n + 1) * (n + 1) * delta)) // 2


def scan_block_vectorized(ctx, k: int, chunk: int = 1 << 22) -> tuple[int, int]:
    """Brute force over every row of block k using int64 arrays.

    Each candidate value V in the block range is tested for being trimmed
    (not of the form out(n)); surviving rows are rebuilt from (V, out(V)) and
    walked left past the red wall looking for a zero (Deedee) or a pair
    Y[t-1] = -Y[t+1] (Edee).
    """
    ctx = _ctx(ctx)
    if ctx.d < 2:
        raise Unsupported("blocks are defined for d >= 2")
    d, delta = ctx.d, ctx.delta
    lo, hi = block_value_range(ctx, k)
    if (hi + d + 2) ** 2 * delta >= _INT64_SAFE:
        raise OverflowError(f"block {k} for d={d} exceeds int64 range")
    depth = 2 * k + 5
    dee = edee = 0
    for start in range(lo, hi, chunk):
        W = np.arange(start - 1, min(start + chunk, hi), dtype=np.int64)
        # c(W) = #{n >= 1 : out(n) <= W}; V is an out value iff c steps up at V
        u = W + 1 + d
        c = (u * d + _isqrt(u * u * delta)) // 2 - (W + 1) * d
        V = W[1:][np.diff(c) == 0]
        y1 = V
        y2 = _out_vec(d, delta, V)
        found_dee = np.zeros(V.shape, dtype=bool)
        found_edee = np.zeros(V.shape, dtype=bool)
        # columns 2, 1, 0, -1, ...: keep a sliding triple (right, mid, left)
        right, mid = y2, y1
        for _ in range(depth):
            left = right - d * mid
            found_dee |= mid == 0
            found_edee |= (mid != 0) & (left + right == 0)
            right, mid = mid, left
        dee += int(found_dee.sum())
        edee += int(found_edee.sum())
    return dee, edee
