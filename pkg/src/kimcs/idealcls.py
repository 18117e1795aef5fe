"""Ideals of O_F for imaginary quadratic F, and Cl(O_F) via reduced forms.

A prime above q is carried as its root b, 0 <= b < 2q, b^2 = D mod 4q; it is
the lattice qZ + ((-b + sqrt D)/2)Z and corresponds to the form
(q, b, (b^2 - D)/4q). An element (X + Y sqrt D)/2 of O_F lies in that prime
iff (X + bY)/2 = 0 mod q. Inert primes carry no root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import factorize, kronecker, sqrt_mod, valuation
from .quadtower import FElement

SPLIT, INERT, RAMIFIED = "split", "inert", "ramified"


class ParityViolation(ArithmeticError):
    """An odd exponent where the invariant formula guarantees an n-th power."""


@dataclass(frozen=True, order=True)
class PrimeIdeal:
    q: int
    kind: str
    root: int | None = None

    @property
    def norm(self) -> int:
        return self.q * self.q if self.kind == INERT else self.q

    def __str__(self):
        if self.kind == INERT:
            return f"({self.q})"
        return f"P[{self.q},{self.root}]"


def _roots_mod_4q(q: int, D: int) -> list[int]:
    """All b in [0, 2q) with b^2 = D mod 4q."""
    if q == 2:
        return [b for b in range(4) if (b * b - D) % 8 == 0]
    r = sqrt_mod(D, q)
    out = set()
    for s in {r, (-r) % q}:
        # b = s mod q, b = D mod 2
        b = s if (s - D) % 2 == 0 else s + q
        out.add(b % (2 * q))
    return sorted(out)


def splitting_type(q: int, D: int) -> list[PrimeIdeal]:
    """Primes of O_F above the rational prime q (smaller root first when split)."""
    k = kronecker(D, q)
    if k == -1:
        return [PrimeIdeal(q, INERT)]
    roots = _roots_mod_4q(q, D)
    if k == 0:
        return [PrimeIdeal(q, RAMIFIED, roots[0])]
    assert len(roots) == 2, (q, D, roots)
    return [PrimeIdeal(q, SPLIT, roots[0]), PrimeIdeal(q, SPLIT, roots[1])]


def conjugate(P: PrimeIdeal) -> PrimeIdeal:
    if P.kind != SPLIT:
        return P
    return PrimeIdeal(P.q, SPLIT, (-P.root) % (2 * P.q))


@dataclass(frozen=True)
class FactoredIdeal:
    """Fractional ideal as a sorted tuple of (PrimeIdeal, nonzero exponent)."""

    factors: tuple = ()

    @classmethod
    def from_dict(cls, d) -> "FactoredIdeal":
        return cls(tuple(sorted((P, e) for P, e in d.items() if e)))

    def as_dict(self) -> dict:
        return dict(self.factors)

    def __mul__(self, other: "FactoredIdeal") -> "FactoredIdeal":
        d = self.as_dict()
        for P, e in other.factors:
            d[P] = d.get(P, 0) + e
        return FactoredIdeal.from_dict(d)

    def __pow__(self, k: int) -> "FactoredIdeal":
        return FactoredIdeal.from_dict({P: e * k for P, e in self.factors})

    def norm(self) -> Fraction:
        out = Fraction(1)
        for P, e in self.factors:
            out *= Fraction(P.norm) ** e
        return out

    def is_unit(self) -> bool:
        return not self.factors

    def __str__(self):
        if not self.factors:
            return "(1)"
        return "*".join(f"{P}^{e}" for P, e in self.factors)


def _integral_coords(w: FElement, D: int) -> tuple[int, int, int]:
    """(X, Y, delta) with delta*w = (X + Y sqrt D)/2 in O_F, delta a positive integer."""
    delta = math.lcm(w.u.denominator, w.v.denominator)
    u, v = w.u * delta, w.v * delta
    # sqrt(-m) = sqrt(D) when D = -m, and sqrt(D)/2 when D = -4m
    if D % 4 == 1:
        X, Y = 2 * u, 2 * v
    else:
        X, Y = 2 * u, v
    assert X.denominator == 1 and Y.denominator == 1
    return int(X), int(Y), delta


def _split_content(X: int, Y: int, q: int, D: int) -> int:
    """Largest g with (X + Y sqrt D)/2 divisible by q^g in O_F."""
    g = 0
    while X % q == 0 and Y % q == 0:
        Xn, Yn = X // q, Y // q
        if (Xn - D * Yn) % 2:
            break
        X, Y, g = Xn, Yn, g + 1
    return g


def _in_prime(X: int, Y: int, P: PrimeIdeal) -> bool:
    return ((X + P.root * Y) // 2) % P.q == 0


def factor_principal(w: FElement, D: int) -> FactoredIdeal:
    """Factor the fractional ideal w*O_F."""
    if w.is_zero():
        raise ValueError("cannot factor the zero ideal")
    X, Y, delta = _integral_coords(w, D)
    N = (X * X - D * Y * Y) // 4
    primes = set(factorize(N).factors) | set(factorize(delta).factors)
    out: dict[PrimeIdeal, int] = {}
    for q in sorted(primes):
        above = splitting_type(q, D)
        vq_delta = valuation(delta, q)
        vq_N = valuation(N, q)
        kind = above[0].kind
        if kind == INERT:
            assert vq_N % 2 == 0
            out[above[0]] = vq_N // 2 - vq_delta
        elif kind == RAMIFIED:
            out[above[0]] = vq_N - 2 * vq_delta
        else:
            g = _split_content(X, Y, q, D)
            Xg, Yg = X // q**g, Y // q**g
            rest = vq_N - 2 * g
            P, Pc = above
            if rest and _in_prime(Xg, Yg, P):
                vP, vPc = g + rest, g
            else:
                vP, vPc = g, g + rest
            if rest:
                assert _in_prime(Xg, Yg, P) != _in_prime(Xg, Yg, Pc)
            out[P] = vP - vq_delta
            out[Pc] = vPc - vq_delta
    ideal = FactoredIdeal.from_dict(out)
    # norm check: N(w) = N(ideal)
    assert ideal.norm() == w.norm(), (w, ideal)
    return ideal


def ideal_sqrt(I2: FactoredIdeal) -> FactoredIdeal:
    odd = [(P, e) for P, e in I2.factors if e % 2]
    if odd:
        raise ParityViolation(f"odd valuations {[(str(P), e) for P, e in odd]}")
    return FactoredIdeal(tuple((P, e // 2) for P, e in I2.factors))


@dataclass(frozen=True)
class QuadForm:
    A: int
    B: int
    C: int

    @property
    def disc(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    def is_reduced(self) -> bool:
        A, B, C = self.A, self.B, self.C
        if not (abs(B) <= A <= C):
            return False
        if (abs(B) == A or A == C) and B < 0:
            return False
        return True

    def reduced(self) -> "QuadForm":
        A, B, C = self.A, self.B, self.C
        if A <= 0 or B * B - 4 * A * C >= 0:
            raise ValueError("only positive definite forms are reduced here")
        while True:
            # normalize: -A < B <= A
            if not (-A < B <= A):
                r = (A - B) // (2 * A)
                B, C = B + 2 * r * A, A * r * r + B * r + C
            if A > C or (A == C and B < 0):
                A, B, C = C, -B, A
                continue
            return QuadForm(A, B, C)

    def __call__(self, x: int, y: int) -> int:
        return self.A * x * x + self.B * x * y + self.C * y * y

    def __str__(self):
        return f"({self.A},{self.B},{self.C})"


def identity_form(D: int) -> QuadForm:
    if D % 4 == 0:
        return QuadForm(1, 0, -D // 4)
    return QuadForm(1, 1, (1 - D) // 4)


def compose(f: QuadForm, g: QuadForm) -> QuadForm:
    """Gauss composition followed by reduction.

    With e = gcd(a1, a2, (b1+b2)/2) = x*a1 + y*a2 + z*(b1+b2)/2 the composite
    has A = a1*a2/e^2 and B = (x*a1*b2 + y*a2*b1 + z*(b1*b2 + D)/2)/e mod 2A.
    """
    D = f.disc
    if g.disc != D:
        raise ValueError("discriminant mismatch")
    a1, b1 = f.A, f.B
    a2, b2 = g.A, g.B
    s = (b1 + b2) // 2
    d1, x1, y1 = _xgcd(a1, a2)
    e, u, z = _xgcd(d1, s)
    x, y = u * x1, u * y1
    A = a1 * a2 // (e * e)
    num = x * a1 * b2 + y * a2 * b1 + z * (b1 * b2 + D) // 2
    assert num % e == 0
    B = (num // e) % (2 * A)
    assert (B * B - D) % (4 * A) == 0
    return QuadForm(A, B, (B * B - D) // (4 * A)).reduced()


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def form_inverse(f: QuadForm) -> QuadForm:
    return QuadForm(f.A, -f.B, f.C).reduced()


@dataclass(frozen=True)
class ClassGroup:
    D: int
    forms: tuple

    @property
    def h(self) -> int:
        return len(self.forms)

    @property
    def identity(self) -> QuadForm:
        return identity_form(self.D)


def reduced_forms(D: int) -> ClassGroup:
    """All primitive reduced forms of discriminant D < 0."""
    if D >= 0 or D % 4 not in (0, 1):
        raise ValueError("need D < 0 with D = 0, 1 mod 4")
    out = []
    amax = math.isqrt(-D // 3)
    for A in range(1, amax + 1):
        for B in range(-A + 1, A + 1):
            if (B * B - D) % (4 * A):
                continue
            C = (B * B - D) // (4 * A)
            f = QuadForm(A, B, C)
            if C < A or not f.is_reduced():
                continue
            if math.gcd(math.gcd(A, B), C) != 1:
                continue
            out.append(f)
    return ClassGroup(D, tuple(sorted(out, key=lambda f: (f.A, f.B))))


def prime_form(P: PrimeIdeal, D: int) -> QuadForm:
    if P.kind == INERT:
        return identity_form(D)
    b = P.root
    return QuadForm(P.q, b, (b * b - D) // (4 * P.q)).reduced()


def form_power(f: QuadForm, k: int) -> QuadForm:
    if k < 0:
        f, k = form_inverse(f), -k
    out = identity_form(f.disc)
    base = f
    while k:
        if k & 1:
            out = compose(out, base)
        base = compose(base, base)
        k >>= 1
    return out


def ideal_to_form(I: FactoredIdeal, D: int) -> QuadForm:
    """Reduced form of the class of I."""
    out = identity_form(D)
    for P, e in I.factors:
        out = compose(out, form_power(prime_form(P, D), e))
    return out
