"""Property suites behind `ostro verify`.

Each suite returns a list of Check records; a suite passes when every check
has no failures.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import numer
from .blocks import block_counts, scan_block_vectorized
from .ostronometry import identity_suite, row_identity_suite
from .towers import (
    first_column,
    stolarsky_audit,
    terrace_class,
    tower_row,
    wall_profile,
    wall_term,
    wall_term_word,
)

SUITES = ("numeration", "towers", "identities", "blocks")
DEFAULT_LIMITS = {"numeration": 10_000, "towers": 10_000, "identities": 20, "blocks": 6}
MAX_SHOWN = 10


@dataclass
class Check:
    name: str
    d: int
    ref: str
    checked: int = 0
    failures: list = field(default_factory=list)
    flagged: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, item):
        self.failures.append(item)

    def as_dict(self) -> dict:
        return {
            "check": self.name,
            "d": self.d,
            "ref": self.ref,
            "ok": self.ok,
            "checked": self.checked,
            "failures": len(self.failures),
            "examples": [list(f) if isinstance(f, tuple) else f for f in self.failures[:MAX_SHOWN]],
            "flagged": self.flagged,
        }


def numeration_checks(d: int, limit: int) -> list[Check]:
    ctx = numer.context(d)
    rt = Check("encode/decode round trip", d, "greedy Ostrowski expansion")
    for N in range(limit + 1):
        w = numer.encode(ctx, N).digits
        rt.checked += 1
        if numer.ostrowski_problem(ctx, w) or numer.decode(ctx, w, check=False) != N:
            rt.fail(N)
    dual = Check("dual round trip and sign law", d, "dual Ostrowski expansion")
    for N in range(-limit, limit + 1):
        w = numer.dual_encode(ctx, N).digits
        dual.checked += 1
        if numer.dual_problem(ctx, w) or numer.dual_decode(ctx, w, check=False) != N:
            dual.fail(N)
        elif N and (N > 0) != (len(w) % 2 == 1):
            dual.fail(N)
    op_out = Check("out: word operator = floor(alpha n + 1/alpha)", d, "prepend-zero operator")
    for n in range(limit + 1):
        op_out.checked += 1
        if numer.out_word(ctx, n) != numer.out(ctx, n):
            op_out.fail(n)
    op_nut = Check("nut: word operator = ceil(-n alpha)", d, "append-zero operator")
    for n in range(-limit, limit + 1):
        op_nut.checked += 1
        if numer.nut_word(ctx, n) != numer.nut(ctx, n):
            op_nut.fail(n)
    return [rt, dual, op_out, op_nut]


def towers_checks(d: int, limit: int) -> list[Check]:
    if d < 2:
        return []
    checks = []
    rep = stolarsky_audit(d, limit)
    st = Check("Stolarsky audit", d, "positive and negative interspersion", checked=limit)
    st.failures = rep.failures()
    checks.append(st)

    walls = Check("wall offset in {0,1}", d, "mirrored row next to the left wall")
    closed = Check("closed-form wall and first columns", d, "Beatty forms of columns 0 and 1")
    coinc = Check("coinciding walls = fractional-part criterion", d, "terrace criterion")
    seen = set()
    for m in range(1, limit + 1):
        wp = wall_profile(d, m)
        walls.checked += 1
        if wp.offset_i not in (0, 1):
            walls.fail(m)
        row = tower_row(d, m)
        closed.checked += 1
        if wall_term(d, m) != wall_term_word(d, m) or first_column(d, m) != row.a1:
            closed.fail(m)
        if wp.offset_i == 0:
            v = row.neg(1)
            seen.add(v)
            coinc.checked += 1
            if v <= 0 or terrace_class(d, v) != "coinciding":
                coinc.fail(m)
    # rows up to `limit` reach every value below limit/(2d) next to the red wall
    for N in range(1, limit // (2 * d) + 1):
        coinc.checked += 1
        if (terrace_class(d, N) == "coinciding") != (N in seen):
            coinc.fail(("N", N))
    checks += [walls, closed, coinc]
    return checks


IDENTITY_FORMS = {
    "cassini": "D_{n+1} D_{n-1} - D_n^2 = (-1)^n",
    "pell": "E_n^2 - delta D_n^2 = 4 (-1)^n",
    "jacobi": "(-1)^c D_a D_{b-c} + (-1)^a D_b D_{c-a} + (-1)^b D_c D_{a-b} = 0",
    "doctagne": "D_m D_{n+1} - D_{m+1} D_n = (-1)^n D_{m-n}",
    "gcd": "gcd(D_m, D_n) = D_gcd(m,n)",
    "divisibility": "D_n | D_m iff n | m",
    "carmichael": "D_1...D_k divides any k consecutive D's",
    "row_pell": "X_n^2 - delta Y_n^2 = (-1)^n C",
    "row_jacobi": "4 (Y_b Y_{a-1} - Y_a Y_{b-1}) = (-1)^(b-1) D_{a-b} C",
    "row_ring": "X_n + Y_n sqrt(delta) = (X_0 + Y_0 sqrt(delta)) (E_n + D_n sqrt(delta)) / 2",
    "row_reconstruction": "2 Y_n = X_0 D_n + Y_0 E_n",
}


def identities_checks(d: int, limit: int) -> list[Check]:
    checks = []
    reports = identity_suite([d])
    if d >= 2:
        reports += row_identity_suite([d], rows=100, bound=limit)
    for rep in reports:
        c = Check(rep.identity, d, IDENTITY_FORMS[rep.identity], rep.checked, list(rep.counterexamples),
                  dict(rep.flagged))
        checks.append(c)
    return checks


def blocks_checks(d: int, limit: int) -> list[Check]:
    if d < 2:
        return []
    c = Check("block counts: logarithm rule = brute force", d, "palindromic rows per block")
    for k in range(1, limit + 1):
        c.checked += 1
        formula, brute = block_counts(d, k), scan_block_vectorized(d, k)
        if formula != brute:
            c.fail((k, list(formula), list(brute)))
    return [c]


_RUNNERS = {
    "numeration": numeration_checks,
    "towers": towers_checks,
    "identities": identities_checks,
    "blocks": blocks_checks,
}


def run_suite(suite: str, d_values, limit: int | None = None) -> list[Check]:
    if suite not in _RUNNERS:
        raise KeyError(suite)
    limit = DEFAULT_LIMITS[suite] if limit is None else limit
    checks = []
    for d in d_values:
        checks += _RUNNERS[suite](d, limit)
    return checks
