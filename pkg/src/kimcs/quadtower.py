"""Exact arithmetic in Q < F = Q(sqrt(-pt)) < K = F(sqrt(p)).

Elements of K are stored over the basis {1, sqrt(p)} with coefficients in F,
so the generator sigma of Gal(K/F) just negates the second coordinate.
The real quadratic subfield E = Q(sqrt(p)) supplies the fundamental unit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import is_prime, is_squarefree

# The only root of unity in play for the quadratic family.
ZETA_2 = -1

# c in 1, sqrt(p), 1 + sqrt(p), 1 + 2 sqrt(p), ...
RESOLVENT_LIMIT = 16


class InvalidDatum(ValueError):
    """A (p, t) pair violating a family invariant."""


@dataclass(frozen=True)
class FamilyDatum:
    p: int
    t: int
    D: int
    D1: int
    D2: int

    @property
    def m(self) -> int:
        """F = Q(sqrt(-m))."""
        return self.p * self.t


def validate(p: int, t: int) -> FamilyDatum:
    """Check (p, t) and compute the discriminant split D = D1 * D2."""
    if not (isinstance(p, int) and p > 1 and is_prime(p)):
        raise InvalidDatum("p must be prime")
    if p % 4 != 1:
        raise InvalidDatum("p must be congruent to 1 mod 4")
    if not (isinstance(t, int) and t > 0):
        raise InvalidDatum("t must be a positive integer")
    if not is_squarefree(t):
        raise InvalidDatum("t must be squarefree")
    if math.gcd(p, t) != 1:
        raise InvalidDatum("t must be prime to p")
    D = -p * t if (-p * t) % 4 == 1 else -4 * p * t
    return FamilyDatum(p, t, D, p, D // p)


@dataclass(frozen=True)
class FElement:
    """u + v*sqrt(-m) in F."""

    u: Fraction
    v: Fraction
    m: int

    @classmethod
    def of(cls, u, v, m: int) -> "FElement":
        return cls(Fraction(u), Fraction(v), m)

    def __add__(self, o):
        o = self._coerce(o)
        return FElement(self.u + o.u, self.v + o.v, self.m)

    __radd__ = __add__

    def __neg__(self):
        return FElement(-self.u, -self.v, self.m)

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        o = self._coerce(o)
        return FElement(self.u * o.u - self.m * self.v * o.v, self.u * o.v + self.v * o.u, self.m)

    __rmul__ = __mul__

    def conj(self) -> "FElement":
        return FElement(self.u, -self.v, self.m)

    def norm(self) -> Fraction:
        return self.u * self.u + self.m * self.v * self.v

    def inverse(self) -> "FElement":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of 0 in F")
        return FElement(self.u / n, -self.v / n, self.m)

    def __truediv__(self, o):
        return self * self._coerce(o).inverse()

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def is_rational(self) -> bool:
        return self.v == 0

    def _coerce(self, o) -> "FElement":
        if isinstance(o, FElement):
            if o.m != self.m:
                raise ValueError("elements of different fields")
            return o
        return FElement(Fraction(o), Fraction(0), self.m)

    def __str__(self):
        if self.v == 0:
            return str(self.u)
        return f"{self.u} + {self.v}*sqrt(-{self.m})"


@dataclass(frozen=True)
class TowerElement:
    """alpha + beta*sqrt(p) in K with alpha, beta in F."""

    alpha: FElement
    beta: FElement
    datum: FamilyDatum

    @classmethod
    def from_rationals(cls, d: FamilyDatum, a=0, b=0, c=0, e=0) -> "TowerElement":
        """(a + b sqrt(-pt)) + (c + e sqrt(-pt)) sqrt(p)."""
        return cls(FElement.of(a, b, d.m), FElement.of(c, e, d.m), d)

    @classmethod
    def from_f(cls, d: FamilyDatum, f: FElement) -> "TowerElement":
        return cls(f, FElement.of(0, 0, d.m), d)

    def __add__(self, o):
        o = self._coerce(o)
        return TowerElement(self.alpha + o.alpha, self.beta + o.beta, self.datum)

    __radd__ = __add__

    def __neg__(self):
        return TowerElement(-self.alpha, -self.beta, self.datum)

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __mul__(self, o):
        o = self._coerce(o)
        p = self.datum.p
        return TowerElement(
            self.alpha * o.alpha + p * (self.beta * o.beta),
            self.alpha * o.beta + self.beta * o.alpha,
            self.datum,
        )

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self._coerce(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "TowerElement":
        n = norm_K_over_F(self)
        if n.is_zero():
            raise ZeroDivisionError("inverse of 0 in K")
        ninv = n.inverse()
        s = sigma(self)
        return TowerElement(s.alpha * ninv, s.beta * ninv, self.datum)

    def __truediv__(self, o):
        return self * self._coerce(o).inverse()

    def is_zero(self) -> bool:
        return self.alpha.is_zero() and self.beta.is_zero()

    def in_F(self) -> bool:
        return self.beta.is_zero()

    def _coerce(self, o) -> "TowerElement":
        if isinstance(o, TowerElement):
            if o.datum != self.datum:
                raise ValueError("elements of different towers")
            return o
        if isinstance(o, FElement):
            return TowerElement.from_f(self.datum, o)
        return TowerElement.from_rationals(self.datum, o)

    def __eq__(self, o):
        try:
            o = self._coerce(o)
        except (TypeError, ValueError):
            return NotImplemented
        return self.alpha == o.alpha and self.beta == o.beta

    def __hash__(self):
        return hash((self.alpha, self.beta))

    def __str__(self):
        return f"({self.alpha}) + ({self.beta})*sqrt({self.datum.p})"


@dataclass(frozen=True)
class EUnit:
    """r + s*sqrt(p), a unit of the ring of integers of Q(sqrt(p))."""

    r: Fraction
    s: Fraction
    p: int

    def norm(self) -> Fraction:
        return self.r * self.r - self.p * self.s * self.s

    def embed(self, d: FamilyDatum) -> TowerElement:
        if d.p != self.p:
            raise ValueError("unit of a different real quadratic field")
        return TowerElement.from_rationals(d, self.r, 0, self.s, 0)

    def __str__(self):
        return f"{self.r} + {self.s}*sqrt({self.p})"


def sigma(y: TowerElement) -> TowerElement:
    return TowerElement(y.alpha, -y.beta, y.datum)


def norm_K_over_F(y: TowerElement) -> FElement:
    p = y.datum.p
    return y.alpha * y.alpha - p * (y.beta * y.beta)


def fundamental_unit(p: int) -> EUnit:
    """Fundamental unit of Z[(1+sqrt p)/2] for a prime p = 1 mod 4.

    Walks the continued fraction of omega = (1+sqrt p)/2, complete quotients
    kept as (P + sqrt p)/Q; the first convergent h/k with N(h - k*omega) = +-1
    gives the unit. The returned representative is > 1.
    """
    if not (p > 1 and is_prime(p) and p % 4 == 1):
        raise ValueError("p must be a prime congruent to 1 mod 4")
    s = math.isqrt(p)
    P, Q = 1, 2
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    quarter = (p - 1) // 4
    while True:
        a = (P + s) // Q
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        # h/k is now the newest convergent
        if abs(h * h - h * k - quarter * k * k) == 1:
            break
        P = a * Q - P
        Q = (p - P * P) // Q
    # sigma(h - k*omega) = (h - k) + k*omega = (2h - k)/2 + (k/2) sqrt(p)
    unit = EUnit(Fraction(2 * h - k, 2), Fraction(k, 2), p)
    if unit.norm() != -1:
        raise ArithmeticError(f"fundamental unit of Q(sqrt {p}) has norm {unit.norm()}")
    return unit


def norm_minus_one_solution(d: FamilyDatum) -> TowerElement:
    """x in K with Norm_{K/F}(x) = -1, namely the fundamental unit of Q(sqrt p)."""
    x = fundamental_unit(d.p).embed(d)
    n = norm_K_over_F(x)
    assert n == FElement.of(ZETA_2, 0, d.m), n
    return x


def resolvent_seeds(d: FamilyDatum):
    yield TowerElement.from_rationals(d, 1)
    yield TowerElement.from_rationals(d, 0, 0, 1)
    for j in range(1, RESOLVENT_LIMIT - 1):
        yield TowerElement.from_rationals(d, 1, 0, j)


def hilbert90_solve(u: TowerElement) -> TowerElement:
    """Nonzero y with sigma(y) = u*y for u of norm 1, via y = c + u^{-1} sigma(c)."""
    d = u.datum
    if norm_K_over_F(u) != FElement.of(1, 0, d.m):
        raise ValueError("hilbert90_solve needs Norm_{K/F}(u) = 1")
    uinv = sigma(u)  # norm 1
    for c in resolvent_seeds(d):
        y = c + uinv * sigma(c)
        if not y.is_zero():
            assert sigma(y) == u * y
            return y
    raise ArithmeticError("resolvent list exhausted")
