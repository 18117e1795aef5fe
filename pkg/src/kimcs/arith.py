"""Exact integer utilities: Kronecker symbols, factorization, modular square roots.

Rationals are plain :class:`fractions.Fraction` values throughout the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

__all__ = [
    "Fraction",
    "Factorization",
    "FactorizationError",
    "kronecker",
    "is_prime",
    "factorize",
    "sqrt_mod",
    "is_squarefree",
    "is_fundamental_discriminant",
    "valuation",
]

# Trial division bound; factors above it go to Pollard rho.
TRIAL_BOUND = 1000
# Give up on a composite cofactor after this many rho iterations (summed over seeds).
RHO_BUDGET = 2_000_000


class FactorizationError(ArithmeticError):
    """A composite cofactor resisted the configured rho budget."""


def kronecker(a: int, b: int) -> int:
    """Kronecker symbol (a|b) with the classical conventions at 2 and at b < 0."""
    if a == 0 and b == 0:
        raise ValueError("kronecker(0, 0) is undefined")
    if b == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if b < 0:
        b = -b
        if a < 0:
            result = -result
    v = 0
    while b % 2 == 0:
        b //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 == 1 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol (a|b), b odd positive
    a %= b
    while a:
        while a % 2 == 0:
            a //= 2
            if b % 8 in (3, 5):
                result = -result
        a, b = b, a
        if a % 4 == 3 and b % 4 == 3:
            result = -result
        a %= b
    return result if b == 1 else 0


# Deterministic Miller-Rabin: these bases are exact for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _strong_lucas_probable_prime(n: int) -> bool:
    """Strong Lucas test with Selfridge parameters (odd n, not a square)."""
    D = 5
    while kronecker(D, n) != -1:
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # Lucas sequences U_d, V_d by binary expansion of d
    U, V, Qk = 1, P, Q % n
    inv2 = (n + 1) // 2
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin below 3.3e24, Baillie-PSW above (no known
    counterexample)."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    if n < _MR_LIMIT:
        return all(_strong_probable_prime(n, a) for a in _MR_BASES)
    r = math.isqrt(n)
    if r * r == n:
        return False
    return _strong_probable_prime(n, 2) and _strong_lucas_probable_prime(n)


@dataclass(frozen=True)
class Factorization:
    sign: int
    factors: dict = field(default_factory=dict)  # prime -> exponent

    def value(self) -> int:
        out = self.sign
        for q, e in self.factors.items():
            out *= q**e
        return out

    def primes(self) -> list:
        return sorted(self.factors)

    def __iter__(self):
        return iter(sorted(self.factors.items()))


def _rho(n: int) -> int:
    """Brent's variant of Pollard rho; returns a nontrivial factor of composite n."""
    spent = 0
    for c in range(1, 64):
        y, r, q, g = 2, 1, 1, 1
        x = ys = 2
        m = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
            spent += r
            if spent > RHO_BUDGET:
                raise FactorizationError(f"no factor of {n} found within the rho budget")
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise FactorizationError(f"rho failed on {n}")


def factorize(n: int) -> Factorization:
    """Complete prime factorization of a nonzero integer.

    Trial division up to ``TRIAL_BOUND``, then Brent-Pollard rho with
    Miller-Rabin / Baillie-PSW certification. Raises FactorizationError
    instead of running unbounded.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    factors: dict[int, int] = {}
    for q in (2, 3, 5):
        while n % q == 0:
            factors[q] = factors.get(q, 0) + 1
            n //= q
    q, step = 7, 4
    while q <= TRIAL_BOUND and q * q <= n:
        while n % q == 0:
            factors[q] = factors.get(q, 0) + 1
            n //= q
        q += step
        step = 6 - step
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _rho(m)
        stack += [d, m // d]
    return Factorization(sign, dict(sorted(factors.items())))


def valuation(n: int, q: int) -> int:
    """q-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % q == 0:
        n //= q
        v += 1
    return v


def sqrt_mod(a: int, q: int) -> int:
    """Smallest r in [0, q) with r^2 = a mod q, for an odd prime q (Tonelli-Shanks)."""
    a %= q
    if a == 0:
        return 0
    if kronecker(a, q) != 1:
        raise ValueError(f"{a} is not a quadratic residue mod {q}")
    if q % 4 == 3:
        r = pow(a, (q + 1) // 4, q)
    else:
        s, e = q - 1, 0
        while s % 2 == 0:
            s //= 2
            e += 1
        z = 2
        while kronecker(z, q) != -1:
            z += 1
        m, c, t, r = e, pow(z, s, q), pow(a, s, q), pow(a, (s + 1) // 2, q)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % q
                i += 1
            b = pow(c, 1 << (m - i - 1), q)
            m, c = i, b * b % q
            t, r = t * c % q, r * b % q
    return min(r, q - r)


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for e in factorize(n).factors.values())


def is_fundamental_discriminant(d: int) -> bool:
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False
