import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kimcs.arith import (
    FactorizationError,
    factorize,
    is_fundamental_discriminant,
    is_prime,
    is_squarefree,
    kronecker,
    sqrt_mod,
    valuation,
)


def naive_primes(n):
    return [q for q in range(2, n) if all(q % r for r in range(2, math.isqrt(q) + 1))]


def legendre_by_enumeration(a, q):
    a %= q
    if a == 0:
        return 0
    return 1 if any((x * x - a) % q == 0 for x in range(1, q)) else -1


def test_is_prime_matches_sieve():
    assert [q for q in range(2000) if is_prime(q)] == naive_primes(2000)


def test_is_prime_large():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    assert is_prime(1_000_000_007)


def test_kronecker_odd_primes_equal_euler_criterion():
    for q in naive_primes(80)[1:]:
        for a in range(-3 * q, 3 * q):
            assert kronecker(a, q) == legendre_by_enumeration(a, q)


def test_kronecker_at_two_and_negatives():
    # (a|2) = 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8
    assert [kronecker(a, 2) for a in range(8)] == [0, 1, 0, -1, 0, -1, 0, 1]
    assert kronecker(-1, -1) == -1
    assert kronecker(1, -1) == 1
    assert kronecker(5, 0) == 0
    assert kronecker(-1, 0) == 1
    with pytest.raises(ValueError):
        kronecker(0, 0)


@given(st.integers(-10**6, 10**6), st.integers(1, 10**4), st.integers(1, 10**4))
def test_kronecker_multiplicative_in_bottom(a, b, c):
    assert kronecker(a, b * c) == kronecker(a, b) * kronecker(a, c)


@given(st.integers(-10**4, 10**4), st.integers(-10**4, 10**4), st.integers(1, 10**4).filter(lambda b: b % 2))
def test_kronecker_multiplicative_in_top(a, b, m):
    assert kronecker(a * b, m) == kronecker(a, m) * kronecker(b, m)


@given(st.integers(1, 10**6).filter(lambda b: b % 2), st.integers(1, 10**6).filter(lambda b: b % 2))
def test_quadratic_reciprocity(a, b):
    if math.gcd(a, b) == 1:
        sign = -1 if a % 4 == 3 and b % 4 == 3 else 1
        assert kronecker(a, b) * kronecker(b, a) == sign


def test_factorize_round_trip_random():
    rng = random.Random(20240601)
    for _ in range(2000):
        n = rng.randrange(1, 2**60)
        f = factorize(n)
        assert f.value() == n
        assert all(is_prime(q) for q in f.factors)


def test_factorize_semiprimes_and_powers():
    p, q = 1_000_003, 999_983
    assert factorize(p * q).factors == {q: 1, p: 1}
    assert factorize(p**2 * 12).factors == {2: 2, 3: 1, p: 2}
    assert factorize(-(2**10)).value() == -1024
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_budget(monkeypatch):
    import kimcs.arith as arith

    monkeypatch.setattr(arith, "RHO_BUDGET", 1)
    with pytest.raises(FactorizationError):
        factorize(1_000_003 * 999_983)


@settings(max_examples=200)
@given(st.integers(1, 2**40))
def test_factorize_property(n):
    f = factorize(n)
    assert f.value() == n
    assert all(valuation(n, q) == e for q, e in f)


def test_sqrt_mod():
    for q in naive_primes(300)[1:]:
        for a in range(q):
            if legendre_by_enumeration(a, q) >= 0:
                r = sqrt_mod(a, q)
                assert r * r % q == a
                assert r <= q - r or r == 0
            else:
                with pytest.raises(ValueError):
                    sqrt_mod(a, q)


def test_squarefree_and_discriminants():
    assert [n for n in range(1, 20) if is_squarefree(n)] == [1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19]
    fundamental = [d for d in range(-30, 0) if is_fundamental_discriminant(d)]
    assert fundamental == [-24, -23, -20, -19, -15, -11, -8, -7, -4, -3]
