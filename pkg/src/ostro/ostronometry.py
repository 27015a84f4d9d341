"""Exact checks of the D/E identity catalogue and of row companions.

Every identity is tested in integer arithmetic, or in Z[sqrt(delta)] via
QuadraticValue when a ring identity is involved.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd, prod

from .exactq import QuadraticValue
from .numer import _ctx
from .towers import tower_row

IDENTITIES = ("cassini", "pell", "jacobi", "doctagne", "gcd", "divisibility", "carmichael")

# default exhaustive ranges
DEFAULT_BOUNDS = {
    "cassini": 50,
    "pell": 50,
    "jacobi": 20,
    "doctagne": 20,
    "gcd": 200,
    "divisibility": 200,
    "carmichael": 50,
}
CARMICHAEL_MAX_WINDOW = 6


class UnknownIdentity(ValueError):
    pass


@dataclass
class IdentityReport:
    identity: str
    d: int
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    # failure counts of rejected alternative forms, summed on merge
    flagged: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def merge(self, other: IdentityReport) -> IdentityReport:
        if (self.identity, self.d) != (other.identity, other.d):
            raise ValueError("can only merge reports of the same identity and d")
        return IdentityReport(
            self.identity,
            self.d,
            self.checked + other.checked,
            self.counterexamples + other.counterexamples,
            self.notes + [n for n in other.notes if n not in self.notes],
            {k: self.flagged.get(k, 0) + other.flagged.get(k, 0)
             for k in self.flagged.keys() | other.flagged.keys()},
        )

    def as_dict(self) -> dict:
        return {
            "identity": self.identity,
            "d": self.d,
            "checked": self.checked,
            "ok": self.ok,
            "counterexamples": [list(c) if isinstance(c, tuple) else c for c in self.counterexamples],
            "notes": self.notes,
            "flagged": self.flagged,
        }


def _sgn(n: int) -> int:
    return -1 if n % 2 else 1


# -- single instances -------------------------------------------------------------
# each returns True when the identity holds for the given parameters

def _cassini(ctx, n):
    D = ctx.D
    return D(n + 1) * D(n - 1) - D(n) ** 2 == _sgn(n)


def _pell(ctx, n):
    return ctx.E(n) ** 2 - ctx.delta * ctx.D(n) ** 2 == 4 * _sgn(n)


def _jacobi(ctx, a, b, c):
    D = ctx.D
    return _sgn(c) * D(a) * D(b - c) + _sgn(a) * D(b) * D(c - a) + _sgn(b) * D(c) * D(a - b) == 0


def _doctagne(ctx, m, n):
    D = ctx.D
    return D(m) * D(n + 1) - D(m + 1) * D(n) == _sgn(n) * D(m - n)


def _gcd(ctx, m, n):
    return gcd(ctx.D(m), ctx.D(n)) == ctx.D(gcd(m, n))


def _divisibility(ctx, n, m):
    return (ctx.D(m) % ctx.D(n) == 0) == (m % n == 0)


def _carmichael(ctx, start, length):
    D = ctx.D
    window = prod(D(start + j) for j in range(length))
    return window % prod(D(j) for j in range(1, length + 1)) == 0


_CHECKS = {
    "cassini": _cassini,
    "pell": _pell,
    "jacobi": _jacobi,
    "doctagne": _doctagne,
    "gcd": _gcd,
    "divisibility": _divisibility,
    "carmichael": _carmichael,
}


def _instances(ctx, identity: str, bound: int):
    if identity in ("cassini", "pell"):
        return ((n,) for n in range(-bound, bound + 1))
    if identity == "jacobi":
        return product(range(-bound, bound + 1), repeat=3)
    if identity == "doctagne":
        return product(range(-bound, bound + 1), repeat=2)
    if identity == "gcd":
        return product(range(1, bound + 1), repeat=2)
    if identity == "divisibility":
        # D_n = 1 for n != 1 (only n = 2 when d = 1) divides everything
        return ((n, m) for n in range(1, bound + 1) if n == 1 or ctx.D(n) != 1
                for m in range(1, bound + 1))
    if identity == "carmichael":
        return product(range(1, bound + 1), range(1, CARMICHAEL_MAX_WINDOW + 1))
    raise UnknownIdentity(identity)


def verify_identity(ctx, identity: str, params=None, bound: int | None = None) -> IdentityReport:
    """Check one instance (params) or the whole default range of an identity.

    bound overrides the default range: |n| <= bound for cassini/pell, indices in
    [-bound, bound] for jacobi/doctagne, 1..bound for gcd/divisibility and
    window starts 1..bound for carmichael.
    """
    ctx = _ctx(ctx)
    if identity not in _CHECKS:
        raise UnknownIdentity(f"unknown identity {identity!r}; choose from {', '.join(IDENTITIES)}")
    check = _CHECKS[identity]
    report = IdentityReport(identity, ctx.d)
    if params is not None:
        cases = [tuple(params) if isinstance(params, (tuple, list)) else (params,)]
    else:
        cases = _instances(ctx, identity, DEFAULT_BOUNDS[identity] if bound is None else bound)
    for case in cases:
        report.checked += 1
        if not check(ctx, *case):
            report.counterexamples.append(case)
    if identity == "divisibility" and ctx.d == 1 and params is None:
        report.notes.append("n = 2 skipped: D_2 = D_1 = 1 divides every term")
    return report


# -- row companions ---------------------------------------------------------------

@dataclass(frozen=True)
class RowCompanion:
    """Y_n = A[m][n] together with X_n, where X_n + Y_n sqrt(delta) = (X_0 + Y_0 sqrt(delta)) alpha^n."""

    d: int
    m: int
    Y0: int
    Y1: int
    X0: int
    C: int

    @property
    def X1(self) -> int:
        return (self.X0 * self.d + (self.d * self.d + 4) * self.Y0) // 2

    @staticmethod
    def _walk(d, x0, x1, n):
        if n >= 0:
            for _ in range(n):
                x0, x1 = x1, d * x1 + x0
            return x0
        for _ in range(-n):
            x0, x1 = x1 - d * x0, x0
        return x0

    def Y(self, n: int) -> int:
        return self._walk(self.d, self.Y0, self.Y1, n)

    def X(self, n: int) -> int:
        return self._walk(self.d, self.X0, self.X1, n)

    def window(self, lo: int, hi: int) -> tuple[list[int], list[int]]:
        """(X_lo..X_hi, Y_lo..Y_hi)."""
        d = self.d
        out = []
        for a, b in ((self.X(lo), self.X(lo + 1)), (self.Y(lo), self.Y(lo + 1))):
            vals = []
            for _ in range(hi - lo + 1):
                vals.append(a)
                a, b = b, d * b + a
            out.append(vals)
        return out[0], out[1]


def row_companion(ctx, m: int) -> RowCompanion:
    ctx = _ctx(ctx)
    row = tower_row(ctx, m)
    d = ctx.d
    Y1 = row.a1
    Y0 = row.a2 - d * row.a1
    X0 = 2 * Y1 - d * Y0
    return RowCompanion(d, m, Y0, Y1, X0, X0 * X0 - ctx.delta * Y0 * Y0)


def verify_row_identity(ctx, m: int, bound: int = 20) -> dict[str, IdentityReport]:
    """Row Pell, the generalized row Jacobi, the ring identity and Y_n from X_0, Y_0.

    Indices run over [-bound, bound]. The Jacobi form checked is
    4 (Y_b Y_{a-1} - Y_a Y_{b-1}) = (-1)^(b-1) D_{a-b} C; failures of the
    opposite sign (-1)^b are counted under `flagged`.
    """
    ctx = _ctx(ctx)
    comp = row_companion(ctx, m)
    d, delta, C = ctx.d, ctx.delta, comp.C
    D, E = ctx.D, ctx.E
    lo = -bound - 1
    Xs, Ys = comp.window(lo, bound)
    X = lambda n: Xs[n - lo]  # noqa: E731
    Y = lambda n: Ys[n - lo]  # noqa: E731

    pell = IdentityReport("row_pell", d)
    ring = IdentityReport("row_ring", d)
    recon = IdentityReport("row_reconstruction", d)
    base = QuadraticValue(comp.X0, comp.Y0, 1, delta)
    unhalved = 0
    for n in range(-bound, bound + 1):
        pell.checked += 1
        if X(n) ** 2 - delta * Y(n) ** 2 != _sgn(n) * C:
            pell.counterexamples.append((m, n))
        ring.checked += 1
        diff = QuadraticValue(X(n), Y(n), 1, delta) - base * QuadraticValue(E(n), D(n), 2, delta)
        if diff.sign() != 0:
            ring.counterexamples.append((m, n))
        recon.checked += 1
        rhs = comp.X0 * D(n) + comp.Y0 * E(n)
        if 2 * Y(n) != rhs:
            recon.counterexamples.append((m, n))
        unhalved += Y(n) != rhs
    recon.flagged["Y_n = X_0 D_n + Y_0 E_n (no factor 1/2)"] = unhalved

    jac = IdentityReport("row_jacobi", d)
    alt_fail = 0
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            lhs = 4 * (Y(b) * Y(a - 1) - Y(a) * Y(b - 1))
            core = D(a - b) * C
            jac.checked += 1
            if lhs != -_sgn(b) * core:
                jac.counterexamples.append((m, a, b))
            alt_fail += lhs != _sgn(b) * core
    jac.flagged["sign (-1)^b instead of (-1)^(b-1)"] = alt_fail
    return {"row_pell": pell, "row_jacobi": jac, "row_ring": ring, "row_reconstruction": recon}


def identity_suite(d_values, bound_scale: float = 1.0) -> list[IdentityReport]:
    """Every catalogue identity at its default range for each d."""
    reports = []
    for d in d_values:
        for ident in IDENTITIES:
            bound = max(1, int(DEFAULT_BOUNDS[ident] * bound_scale))
            reports.append(verify_identity(d, ident, bound=bound))
    return reports


def row_identity_suite(d_values, rows: int = 100, bound: int = 20) -> list[IdentityReport]:
    """Row identities for rows 1..rows, merged per identity and d."""
    reports = []
    for d in d_values:
        merged: dict[str, IdentityReport] = {}
        for m in range(1, rows + 1):
            for key, rep in verify_row_identity(d, m, bound).items():
                merged[key] = merged[key].merge(rep) if key in merged else rep
        reports.extend(merged.values())
    return reports
