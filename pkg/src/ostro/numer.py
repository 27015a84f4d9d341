"""Ostrowski and dual Ostrowski numeration for X_{n+1} = d X_n + X_{n-1}.

Words are tuples of digits, least significant digit first. For d >= 2 the
positive system uses the denominators D_1, D_2, ... as digit weights; for
d = 1 it is Zeckendorf numeration with weights F_2, F_3, ... The dual system
uses D_{-1}, D_{-2}, ... for every d >= 1.
"""

from __future__ import annotations

import threading
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .exactq import QuadraticValue, floor_surd

__all__ = [
    "NumerationContext",
    "OstrowskiWord",
    "DualWord",
    "DigitError",
    "context",
    "denominator",
    "companion",
    "encode",
    "decode",
    "classify_word",
    "out",
    "out_word",
    "nut",
    "nut_word",
    "dual_encode",
    "dual_decode",
    "enumerate_trimmed",
    "trimmed_value",
    "row_word",
    "trimmed_rank",
    "format_digits",
    "parse_digits",
]


class DigitError(ValueError):
    """A digit string violates the rules of the numeration system."""


@dataclass(frozen=True)
class OstrowskiWord:
    digits: tuple[int, ...]

    def __len__(self):
        return len(self.digits)

    def msd(self, d: int) -> str:
        return format_digits(self.digits, d)


@dataclass(frozen=True)
class DualWord:
    digits: tuple[int, ...]

    def __len__(self):
        return len(self.digits)

    def msd(self, d: int) -> str:
        return format_digits(self.digits, d)


def format_digits(digits, d: int) -> str:
    """Render an lsd-first digit tuple as msd-first text."""
    rev = list(reversed(digits))
    if d <= 9:
        return "".join(str(x) for x in rev)
    return ",".join(str(x) for x in rev)


def parse_digits(text: str, d: int) -> tuple[int, ...]:
    """Parse msd-first text into an lsd-first digit tuple."""
    text = text.strip()
    if not text:
        return ()
    if d <= 9 and "," not in text:
        msd = [int(c) for c in text]
    else:
        msd = [int(t) for t in text.split(",")]
    return tuple(reversed(msd))


class NumerationContext:
    """Constants and growing caches for a fixed d."""

    def __init__(self, d: int):
        if d < 1:
            raise ValueError(f"d must be >= 1, got {d}")
        self.d = d
        self.delta = d * d + 4
        self.alpha = QuadraticValue(d, 1, 2, self.delta)
        self.beta = QuadraticValue(d, -1, 2, self.delta)
        self.inv_alpha = self.alpha - d
        # Zeckendorf skips F_1 so digit j weighs D_{j+1}
        self.shift = 1 if d == 1 else 0
        self._denoms = [0, 1]
        self._comps = [2, d]
        self._trimmed: list[int] = []
        self._scan_next = 1
        self._lock = threading.RLock()

    def __repr__(self):
        return f"NumerationContext(d={self.d})"

    def _grow(self, n: int):
        with self._lock:
            D, E, d = self._denoms, self._comps, self.d
            while len(D) <= n:
                D.append(d * D[-1] + D[-2])
                E.append(d * E[-1] + E[-2])

    def D(self, n: int) -> int:
        if n < 0:
            v = self.D(-n)
            return v if n % 2 else -v
        if n >= len(self._denoms):
            self._grow(n)
        return self._denoms[n]

    def E(self, n: int) -> int:
        if n < 0:
            v = self.E(-n)
            return -v if n % 2 else v
        if n >= len(self._comps):
            self._grow(n)
        return self._comps[n]

    def denoms(self, n: int = 0, exceed: int = 0) -> list[int]:
        """The cached list D_0, D_1, ... covering index n and a value above `exceed`."""
        D = self._denoms
        if len(D) <= n + 1 or D[-1] <= exceed:
            while len(D) <= n + 1 or D[-1] <= exceed:
                self._grow(len(D) + 8)
        return D

    def weight(self, j: int) -> int:
        """Weight of the digit at 0-based position j in a positive word."""
        return self.D(j + 1 + self.shift)


@lru_cache(maxsize=None)
def context(d: int) -> NumerationContext:
    return NumerationContext(d)


def _ctx(ctx) -> NumerationContext:
    return ctx if isinstance(ctx, NumerationContext) else context(ctx)


def denominator(ctx, n: int) -> int:
    return _ctx(ctx).D(n)


def companion(ctx, n: int) -> int:
    return _ctx(ctx).E(n)


def _digits(w):
    return w.digits if isinstance(w, (OstrowskiWord, DualWord)) else tuple(w)


# -- positive system ---------------------------------------------------------

def ostrowski_problem(ctx, digits) -> str | None:
    """Describe the first rule a positive word breaks, or None if it is valid."""
    ctx = _ctx(ctx)
    d = ctx.d
    for j, x in enumerate(digits):
        if not 0 <= x <= d:
            return f"digit {x} at position {j} outside [0, {d}]"
        if x == d and j > 0 and digits[j - 1] != 0:
            return f"digit {d} at position {j} not preceded by 0"
    if d > 1 and digits and digits[0] == d:
        return f"first digit must be below {d}"
    if digits and digits[-1] == 0:
        return "most significant digit is zero"
    return None


def _greedy(ctx: NumerationContext, N: int):
    """(position, digit) pairs of N > 0, msd first."""
    lo = 1 + ctx.shift
    D = ctx.denoms(exceed=N)
    for j in range(bisect_right(D, N, lo) - lo - 1, -1, -1):
        q, N = divmod(N, D[j + lo])
        yield j, q


def encode(ctx, N: int) -> OstrowskiWord:
    """Greedy msd-first expansion of N >= 0."""
    ctx = _ctx(ctx)
    if N < 0:
        raise ValueError(f"cannot encode negative number {N}")
    # positions come msd first, from len - 1 down to 0
    return OstrowskiWord(tuple(q for _, q in reversed(list(_greedy(ctx, N)))) if N else ())


def decode(ctx, w, check: bool = True) -> int:
    ctx = _ctx(ctx)
    digits = _digits(w)
    if check:
        problem = ostrowski_problem(ctx, digits)
        if problem:
            raise DigitError(problem)
    lo = 1 + ctx.shift
    D = ctx.denoms(len(digits) + lo)
    return sum(x * D[j + lo] for j, x in enumerate(digits) if x)


def classify_word(ctx, w) -> str:
    """'invalid', 'untrimmed' or 'trimmed'.

    The empty word is reported as invalid: it stands for 0 and labels no row.
    """
    ctx = _ctx(ctx)
    digits = _digits(w)
    if not digits or ostrowski_problem(ctx, digits):
        return "invalid"
    if digits[0] != 0:
        return "trimmed"
    if ctx.d > 1 and len(digits) > 1 and digits[1] == ctx.d:
        # dropping the 0 would leave a word starting with d
        return "trimmed"
    return "untrimmed"


def out_word(ctx, n: int) -> int:
    """Prepend a zero to the lsd word of n."""
    ctx = _ctx(ctx)
    if n <= 0:
        encode(ctx, n)
        return 0
    lo = 2 + ctx.shift
    D = ctx.denoms(exceed=n)
    return sum(q * D[j + lo] for j, q in _greedy(ctx, n) if q)


def out(ctx, n: int) -> int:
    """floor(alpha*n + 1/alpha), the closed form of out_word."""
    ctx = _ctx(ctx)
    if n < 0:
        raise ValueError(f"out is defined on n >= 0, got {n}")
    if n == 0:
        return 0
    # alpha*n + 1/alpha = ((n - 1)*d + (n + 1)*sqrt(delta)) / 2
    return floor_surd((n - 1) * ctx.d, n + 1, 2, ctx.delta)


def count_out(ctx, V: int) -> int:
    """Number of n >= 1 with out(n) <= V."""
    ctx = _ctx(ctx)
    if V < 1:
        return 0
    d = ctx.d
    # (V + 1 - 1/alpha)/alpha = (V+1+d)*alpha - (V+1)*d - d^2 - 1, never an integer
    x = ctx.alpha * (V + 1 + d) - ((V + 1) * d + d * d + 1)
    return max(x.floor(), 0)


# -- dual system -------------------------------------------------------------

def dual_problem(ctx, digits) -> str | None:
    ctx = _ctx(ctx)
    d = ctx.d
    last = len(digits) - 1
    for j, x in enumerate(digits):
        if not 0 <= x <= d:
            return f"digit {x} at position {j} outside [0, {d}]"
        if x == d and j < last and digits[j + 1] != 0:
            return f"digit {d} at position {j} not followed by 0"
    if digits and digits[-1] == 0:
        return "most significant digit is zero"
    return None


def nut(ctx, n: int) -> int:
    """ceil(-n*alpha), the closed form of nut_word."""
    ctx = _ctx(ctx)
    d = ctx.d
    # -floor(n*alpha) with n*alpha = (n*d + n*sqrt(delta))/2
    return -floor_surd(n * d, n, 2, ctx.delta)


def _dual_digits(ctx: NumerationContext, N: int):
    """Digits of N != 0 in the dual system, least significant first."""
    d, delta = ctx.d, ctx.delta
    # nut(N) = -floor((N*d + N*sqrt(delta))/2)
    s = isqrt(N * N * delta)
    nut_n = -((N * d + (s if N > 0 else -s - 1)) // 2)
    while not 0 < N <= d:
        # ceil(-N/alpha) = d*N + nut(N) since 1/alpha = alpha - d
        N2 = d * N + nut_n
        if N2 == 0:
            raise AssertionError("dual expansion reached zero")
        s = isqrt(N2 * N2 * delta)
        nut2 = -((N2 * d + (s if N2 > 0 else -s - 1)) // 2)
        yield N - nut2
        N, nut_n = N2, nut2
    yield N


def dual_encode(ctx, N: int) -> DualWord:
    """Divide-and-round expansion of any integer in the dual system."""
    ctx = _ctx(ctx)
    return DualWord(tuple(_dual_digits(ctx, N)) if N else ())


def dual_decode(ctx, w, check: bool = True) -> int:
    ctx = _ctx(ctx)
    digits = _digits(w)
    if check:
        problem = dual_problem(ctx, digits)
        if problem:
            raise DigitError(problem)
    D = ctx.denoms(len(digits) + 1)
    # D_{-j} = (-1)^(j+1) D_j
    total = 0
    for j, x in enumerate(digits):
        if x:
            total += x * D[j + 1] if j % 2 == 0 else -x * D[j + 1]
    return total


def nut_word(ctx, n: int) -> int:
    """Append a zero to the msd dual word of n (a new least significant 0)."""
    ctx = _ctx(ctx)
    if n == 0:
        return 0
    total = 0
    sign = -1  # D_{-(j+2)} = (-1)^(j+1) D_{j+2}
    for j, x in enumerate(_dual_digits(ctx, n)):
        if x:
            total += sign * x * ctx.D(j + 2)
        sign = -sign
    return total


# -- trimmed words and radix order ---------------------------------------------

def _scan_trimmed(ctx: NumerationContext, count: int):
    with ctx._lock:
        N = ctx._scan_next
        found = ctx._trimmed
        while len(found) < count:
            if classify_word(ctx, encode(ctx, N)) == "trimmed":
                found.append(N)
            N += 1
        ctx._scan_next = N


def enumerate_trimmed(ctx, count: int) -> list[OstrowskiWord]:
    """The first `count` trimmed words in radix (increasing value) order."""
    ctx = _ctx(ctx)
    if count <= 0:
        return []
    _scan_trimmed(ctx, count)
    return [encode(ctx, v) for v in ctx._trimmed[:count]]


def trimmed_value(ctx, m: int) -> int:
    """Value of the m-th trimmed word (m >= 1), found by scanning words."""
    ctx = _ctx(ctx)
    if m < 1:
        raise ValueError(f"row index must be >= 1, got {m}")
    if len(ctx._trimmed) < m:
        _scan_trimmed(ctx, m)
    return ctx._trimmed[m - 1]


def row_word(ctx, m: int) -> OstrowskiWord:
    return encode(ctx, trimmed_value(ctx, m))


def trimmed_rank(ctx, V: int) -> int:
    """Radix rank of the trimmed word with value V (1-based).

    Trimmed values are exactly the positive integers outside out(N), so the
    rank is V minus the number of out values up to V.
    """
    return V - count_out(ctx, V)
