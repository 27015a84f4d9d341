"""The bi-infinite d-Ostrowski array and the building inside it.

Row m is labelled by the m-th trimmed word w_m; A[m][n] for n >= 1 is the
value of 0^(n-1) w_m and the row extends to all n in Z by the recurrence.
The red wall sits |w_m| columns left of the right wall (between columns 0
and 1); the left wall marks where a sign-alternating copy of a positive row
begins.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .numer import (
    NumerationContext,
    OstrowskiWord,
    _ctx,
    classify_word,
    decode,
    dual_decode,
    dual_encode,
    encode,
    out,
    row_word,
    trimmed_rank,
)


class Unsupported(ValueError):
    """The requested closed form is only established for d >= 2."""


@dataclass(frozen=True)
class TowerRow:
    d: int
    m: int
    word: OstrowskiWord
    a1: int
    a2: int

    @property
    def red_col(self) -> int:
        return 1 - len(self.word)

    def entry(self, n: int) -> int:
        d = self.d
        lo, hi = self.a1, self.a2
        if n >= 1:
            for _ in range(n - 1):
                lo, hi = hi, d * hi + lo
            return lo
        # walk left: A[k-1] = A[k+1] - d*A[k]
        for _ in range(1 - n):
            lo, hi = hi - d * lo, lo
        return lo

    def window(self, lo: int, hi: int) -> list[int]:
        """Terms for columns lo..hi inclusive."""
        d = self.d
        x, y = self.entry(lo), self.entry(lo + 1)
        vals = [x]
        for _ in range(hi - lo):
            vals.append(y)
            x, y = y, d * y + x
        return vals

    def terms(self, lo: int, hi: int) -> dict[int, int]:
        return dict(zip(range(lo, hi + 1), self.window(lo, hi)))

    def neg(self, n: int) -> int:
        """Entry n >= 1 of the negative array, counted left of the red wall."""
        return self.entry(self.red_col - n)


@lru_cache(maxsize=None)
def _row(d: int, m: int) -> TowerRow:
    w = row_word(d, m)
    a1 = decode(d, w)
    a2 = decode(d, (0,) + w.digits)
    return TowerRow(d, m, w, a1, a2)


def tower_row(ctx, m: int) -> TowerRow:
    ctx = _ctx(ctx)
    if m < 1:
        raise ValueError(f"row index must be >= 1, got {m}")
    return _row(ctx.d, m)


def array_entry(ctx, m: int, n: int) -> int:
    return tower_row(ctx, m).entry(n)


def neg_entry(ctx, m: int, n: int) -> int:
    if n < 1:
        raise ValueError(f"negative array columns start at 1, got {n}")
    return tower_row(ctx, m).neg(n)


def neg_entry_dual(ctx, m: int, n: int) -> int:
    """Same entry, read off the label as an msd dual word followed by n-1 zeros."""
    ctx = _ctx(ctx)
    w = tower_row(ctx, m).word.digits
    # the label read msd-first is the reversed lsd word
    digits = (0,) * (n - 1) + tuple(reversed(w))
    while digits and digits[-1] == 0:
        digits = digits[:-1]
    return dual_decode(ctx, digits)


# -- closed forms ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _constants(d: int):
    ctx = _ctx(d)
    a = ctx.alpha
    return {
        "wall_slope": (a - 1).inverse(),
        "beatty_slope": a / (a - 1),
        "beatty_offset": -(a * (a - 1)).inverse(),
    }


def _need_d2(ctx: NumerationContext, what: str):
    if ctx.d < 2:
        raise Unsupported(f"{what} closed form needs d >= 2")


def wall_term(ctx, m: int) -> int:
    """floor(m/(alpha-1)).

    Each Ostrowski suffix v labels the d-1 rows jv (j = 1..d-1), and every
    value out(n) + d gets one more row through a word starting with d, so
    #{rows with wall term < k} = (d-1)k + floor(k/alpha) = floor(k(alpha-1)).
    For d = 2 the slope equals alpha/(alpha+1) = 1/sqrt(2); for d > 2 the
    two differ.
    """
    ctx = _ctx(ctx)
    _need_d2(ctx, "wall term")
    if m < 1:
        raise ValueError(f"row index must be >= 1, got {m}")
    return (_constants(ctx.d)["wall_slope"] * m).floor()


def wall_term_word(ctx, m: int) -> int:
    """Value of the row label with its first digit deleted."""
    ctx = _ctx(ctx)
    return decode(ctx, tower_row(ctx, m).word.digits[1:], check=False)


def first_column(ctx, m: int) -> int:
    """Non-homogeneous Beatty form of A[m][1]."""
    ctx = _ctx(ctx)
    _need_d2(ctx, "first column")
    if m < 1:
        raise ValueError(f"row index must be >= 1, got {m}")
    c = _constants(ctx.d)
    return (c["beatty_slope"] * m + c["beatty_offset"]).floor()


def locate(ctx, N: int) -> tuple[int, int]:
    """(m, n) with n >= 1 and A[m][n] == N."""
    ctx = _ctx(ctx)
    if N == 0:
        raise ValueError("0 only occurs in the wall column")
    if N < 0:
        raise ValueError(f"positive array holds no negative numbers, got {N}")
    digits = encode(ctx, N).digits
    n = 1
    while classify_word(ctx, digits) == "untrimmed":
        digits = digits[1:]
        n += 1
    return trimmed_rank(ctx, decode(ctx, digits, check=False)), n


# -- walls ------------------------------------------------------------------------

@dataclass(frozen=True)
class WallProfile:
    m: int
    red_col: int
    partner_k: int
    offset_i: int

    @property
    def coincide(self) -> bool:
        return self.offset_i == 0

    @property
    def left_col(self) -> int:
        """Column immediately right of the left wall."""
        return self.red_col - self.offset_i


def wall_profile(ctx, m: int, max_offset: int = 3) -> WallProfile:
    """Find the positive row mirrored (in absolute value) left of the red wall."""
    ctx = _ctx(ctx)
    row = tower_row(ctx, m)
    for i in range(max_offset + 1):
        v = abs(row.neg(i + 1))
        if v == 0:
            continue
        k, n = locate(ctx, v)
        if n != 1:
            continue
        partner = tower_row(ctx, k)
        if partner.a2 == abs(row.neg(i + 2)) and partner.entry(3) == abs(row.neg(i + 3)):
            return WallProfile(m, row.red_col, k, i)
    raise AssertionError(f"row {m}: no mirrored row within offset {max_offset}")


def terrace_class(ctx, N: int) -> str:
    """'coinciding' when frac(alpha*N) lies in [1/alpha, 1 - 1/alpha], else 'terrace'."""
    ctx = _ctx(ctx)
    _need_d2(ctx, "terrace criterion")
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    x = ctx.alpha * N
    frac = x - x.floor()
    inv = ctx.inv_alpha
    if (frac - inv).sign() >= 0 and (1 - inv - frac).sign() >= 0:
        return "coinciding"
    return "terrace"


# -- palindromes --------------------------------------------------------------------

@dataclass(frozen=True)
class PalindromeClass:
    kind: str  # 'none', 'deedee' or 'edee'
    multiplier: Fraction = Fraction(0)
    shift: int = 0

    def multiplier_text(self) -> str:
        return str(self.multiplier) if self.kind != "none" else ""


def classify_palindrome(ctx, m: int, margin: int = 4) -> PalindromeClass:
    """Detect rows equal to j*D[n+s] or j*E[n+s].

    The centre of a palindromic row lies inside the building, so only the
    columns from red_col - margin to 2 are searched.
    """
    ctx = _ctx(ctx)
    row = tower_row(ctx, m)
    lo = row.red_col - margin
    vals = row.window(lo, 3)
    D, E = ctx.D, ctx.E
    for idx in range(1, len(vals) - 2):
        t = lo + idx
        y_prev, y, y1, y2 = vals[idx - 1], vals[idx], vals[idx + 1], vals[idx + 2]
        if y == 0:
            j = Fraction(y1, D(1))
            if y2 == j * D(2):
                return PalindromeClass("deedee", j, -t)
        elif y_prev + y1 == 0:
            j = Fraction(y, E(0))
            if y1 == j * E(1) and y2 == j * E(2):
                return PalindromeClass("edee", j, -t)
    return PalindromeClass("none")


# -- audits ---------------------------------------------------------------------------

@dataclass
class StolarskyReport:
    d: int
    limit: int
    positive_missing: list[int] = field(default_factory=list)
    positive_repeated: list[int] = field(default_factory=list)
    negative_missing: list[int] = field(default_factory=list)
    negative_repeated: list[int] = field(default_factory=list)
    zero_outside_wall: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.positive_missing
            or self.positive_repeated
            or self.negative_missing
            or self.negative_repeated
            or self.zero_outside_wall
        )

    def failures(self) -> list[str]:
        out_ = []
        for name in ("positive_missing", "positive_repeated", "negative_missing",
                     "negative_repeated", "zero_outside_wall"):
            vals = getattr(self, name)
            if vals:
                out_.append(f"{name}: {vals[:20]}{' ...' if len(vals) > 20 else ''}")
        return out_


def stolarsky_audit(ctx, limit: int) -> StolarskyReport:
    """Count every occurrence of 1..limit in the positive array and of every
    nonzero |N| <= limit left of the red wall, by direct row materialisation."""
    ctx = _ctx(ctx)
    d = ctx.d
    rep = StolarskyReport(d, limit)
    if limit <= 0:
        return rep
    pos = Counter()
    m = 1
    while True:
        row = tower_row(ctx, m)
        if row.a1 > limit:
            break
        x, y = row.a1, row.a2
        while x <= limit:
            pos[x] += 1
            x, y = y, d * y + x
        m += 1
    rep.positive_missing = [N for N in range(1, limit + 1) if pos[N] == 0]
    rep.positive_repeated = [N for N in range(1, limit + 1) if pos[N] > 1]

    # N = u 0^k in msd dual form sits in the row labelled by u (or 0u), so
    # labels longer than the longest dual word plus one cannot hold |N| <= limit
    neg = Counter()
    L_max = 1 + max(len(dual_encode(ctx, N)) for N in range(-limit, limit + 1))
    m = 1
    while True:
        row = tower_row(ctx, m)
        if len(row.word) > L_max:
            break
        n = 1
        while True:
            v = row.neg(n)
            if abs(v) > limit:
                break
            if v == 0:
                rep.zero_outside_wall.append((m, row.red_col - n))
            else:
                neg[v] += 1
            n += 1
        m += 1
    for N in range(-limit, limit + 1):
        if N == 0:
            continue
        if neg[N] == 0:
            rep.negative_missing.append(N)
        elif neg[N] > 1:
            rep.negative_repeated.append(N)
    return rep


def tail_locate(ctx, B0: int, B1: int, max_steps: int = 10_000) -> tuple[int, int]:
    """(m, shift) with B[n] == A[m][n + shift] for all large n."""
    ctx = _ctx(ctx)
    if B0 == 0 and B1 == 0:
        raise ValueError("the zero sequence is not tail equivalent to any row")
    d = ctx.d
    x, y = B0, B1
    for k in range(max_steps):
        if x >= 1 and y == out(ctx, x):
            m, n = locate(ctx, x)
            return m, n - k
        x, y = y, d * y + x
    raise ValueError(f"sequence ({B0}, {B1}, ...) never settles onto a positive row")


def first_column_differences(ctx, count: int) -> list[int]:
    ctx = _ctx(ctx)
    col = [first_column(ctx, m) for m in range(1, count + 2)]
    return [b - a for a, b in zip(col, col[1:])]


def sturmian_code(ctx, count: int) -> list[int]:
    """Code first-column differences: ceil(alpha/(alpha-1)) as 1, the floor as 0."""
    ctx = _ctx(ctx)
    _need_d2(ctx, "first column")
    slope = _constants(ctx.d)["beatty_slope"]
    hi = slope.ceil()
    lo = slope.floor()
    bits = []
    for diff in first_column_differences(ctx, count):
        if diff == hi:
            bits.append(1)
        elif diff == lo:
            bits.append(0)
        else:
            raise AssertionError(f"unexpected first-column difference {diff}")
    return bits


def column_difference_pattern(ctx, col: int, count: int) -> set[int]:
    ctx = _ctx(ctx)
    if col < 1:
        raise ValueError(f"column must be >= 1, got {col}")
    vals = [array_entry(ctx, m, col) for m in range(1, count + 2)]
    return {b - a for a, b in zip(vals, vals[1:])}
