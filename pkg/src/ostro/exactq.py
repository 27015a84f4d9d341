"""Exact arithmetic in the real quadratic field Q(sqrt(delta)).

Every floor, ceiling, sign and comparison in the package goes through the
integer routines here; nothing is decided with floating point.
"""

from __future__ import annotations

from math import gcd, isqrt


class DeltaMismatch(ValueError):
    """Raised when combining values that live in different quadratic fields."""


def floor_surd(p: int, q: int, r: int, delta: int) -> int:
    """Return floor((p + q*sqrt(delta)) / r) for r > 0 and non-square delta."""
    if q == 0:
        return p // r
    s = isqrt(q * q * delta)
    # q*sqrt(delta) is irrational, so its floor is s or -s-1
    f = s if q > 0 else -s - 1
    return (p + f) // r


def sign_surd(p: int, q: int, delta: int) -> int:
    """Sign of p + q*sqrt(delta) for non-square delta."""
    if q == 0:
        return (p > 0) - (p < 0)
    if p == 0:
        return 1 if q > 0 else -1
    if (p > 0) == (q > 0):
        return 1 if p > 0 else -1
    # opposite signs: the term with larger square wins
    if p * p > q * q * delta:
        return 1 if p > 0 else -1
    return 1 if q > 0 else -1


class QuadraticValue:
    """The number (p + q*sqrt(delta)) / r, stored in lowest terms."""

    __slots__ = ("p", "q", "r", "delta")

    def __init__(self, p: int, q: int = 0, r: int = 1, delta: int = 5):
        if r == 0:
            raise ZeroDivisionError("denominator must be nonzero")
        if delta <= 0 or isqrt(delta) ** 2 == delta:
            raise ValueError(f"delta must be a positive non-square, got {delta}")
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(p, q), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        self.p = p
        self.q = q
        self.r = r
        self.delta = delta

    @classmethod
    def _raw(cls, p, q, r, delta):
        # caller guarantees r > 0 and a valid delta
        obj = cls.__new__(cls)
        g = gcd(gcd(p, q), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        obj.p, obj.q, obj.r, obj.delta = p, q, r, delta
        return obj

    def __repr__(self):
        return f"QuadraticValue({self.p}, {self.q}, {self.r}, delta={self.delta})"

    def __str__(self):
        num = f"{self.p}{'+' if self.q >= 0 else '-'}{abs(self.q)}*sqrt({self.delta})"
        return num if self.r == 1 else f"({num})/{self.r}"

    def _coerce(self, other) -> QuadraticValue:
        if isinstance(other, QuadraticValue):
            if other.delta != self.delta:
                raise DeltaMismatch(f"delta {self.delta} vs {other.delta}")
            return other
        if isinstance(other, int):
            return QuadraticValue._raw(other, 0, 1, self.delta)
        return NotImplemented

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticValue._raw(
            self.p * o.r + o.p * self.r, self.q * o.r + o.q * self.r, self.r * o.r, self.delta
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadraticValue._raw(-self.p, -self.q, self.r, self.delta)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadraticValue._raw(self.p * other, self.q * other, self.r, self.delta)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticValue._raw(
            self.p * o.p + self.q * o.q * self.delta,
            self.p * o.q + self.q * o.p,
            self.r * o.r,
            self.delta,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticValue:
        return QuadraticValue._raw(self.p, -self.q, self.r, self.delta)

    def norm(self):
        """x * conj(x) as a (numerator, denominator) pair of integers."""
        return self.p * self.p - self.q * self.q * self.delta, self.r * self.r

    def inverse(self) -> QuadraticValue:
        n, _ = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        # 1/x = r * conj / (p^2 - q^2 delta)
        return QuadraticValue(self.r * self.p, -self.r * self.q, n, self.delta)

    def __truediv__(self, other):
        if isinstance(other, int):
            return QuadraticValue(self.p, self.q, self.r * other, self.delta)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadraticValue._raw(1, 0, 1, self.delta)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def sign(self) -> int:
        return sign_surd(self.p, self.q, self.delta)

    def floor(self) -> int:
        return floor_surd(self.p, self.q, self.r, self.delta)

    def ceil(self) -> int:
        return -floor_surd(-self.p, -self.q, self.r, self.delta)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.q == 0 and self.r == 1 and self.p == other
        if not isinstance(other, QuadraticValue):
            return NotImplemented
        return (self.p, self.q, self.r, self.delta) == (other.p, other.q, other.r, other.delta)

    def __hash__(self):
        return hash((self.p, self.q, self.r, self.delta))

    def _cmp(self, other) -> int:
        return (self - other).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0


def qv_combine(x: QuadraticValue, y: QuadraticValue, op: str) -> QuadraticValue:
    if x.delta != y.delta:
        raise DeltaMismatch(f"delta {x.delta} vs {y.delta}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown op {op!r}")


def qv_sign(x: QuadraticValue) -> int:
    return x.sign()


def qv_floor(x: QuadraticValue) -> int:
    return x.floor()


def qv_ceil(x: QuadraticValue) -> int:
    return x.ceil()
