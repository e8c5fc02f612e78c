"""Kempner (Smarandache) function S(q), largest prime factor P(q), and the
rewrite of p/q over a factorial denominator.

S(q) is the smallest positive k with q | k!. The fast path computes S from
the prime factorization of q via Legendre's formula; a literal brute-force
version is kept as an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# (prime, exponent) pairs, primes strictly increasing.
Factorization = list[tuple[int, int]]


@dataclass(frozen=True)
class KempnerResult:
    q: int
    s: int  # S(q)
    p: int  # P(q), largest prime factor
    factorization: Factorization


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_up_to(n: int) -> list[int]:
    """Eratosthenes sieve, inclusive."""
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if flags[p]:
            start = p * p
            flags[start :: p] = bytearray(len(range(start, n + 1, p)))
    return [i for i, f in enumerate(flags) if f]


def factorize(q: int) -> Factorization:
    """Prime factorization of q >= 2 by deterministic trial division."""
    if q < 2:
        raise ValueError("factorize requires q >= 2")
    factors: Factorization = []
    rest = q
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                e += 1
                rest //= d
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return factors


def legendre_valuation(p: int, k: int) -> int:
    """Exponent of the prime p in k!: sum of floor(k / p^i)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 0:
        raise ValueError("k must be >= 0")
    total = 0
    power = p
    while power <= k:
        total += k // power
        power *= p
    return total


def kempner_prime_power(p: int, a: int) -> int:
    """Smallest k with p^a | k!, i.e. legendre_valuation(p, k) >= a.

    The answer is a multiple of p and is at most a*p, so a linear walk over
    multiples of p is plenty fast at the scales used here.
    """
    if a < 1:
        raise ValueError("exponent must be >= 1")
    if a == 1:
        return p
    k = p
    while legendre_valuation(p, k) < a:
        k += p
    return k


def kempner_S(q: int, factorization: Factorization | None = None) -> int:
    """S(q): smallest positive k such that q divides k!. S(1) = 1."""
    if q < 1:
        raise ValueError("kempner_S requires q >= 1")
    if q == 1:
        return 1
    if factorization is None:
        factorization = factorize(q)
    return max(kempner_prime_power(p, a) for p, a in factorization)


def kempner_S_naive(q: int) -> int:
    """Literal definition min {k > 0 : q | k!}, tracking k! mod q.

    Independent oracle for kempner_S; intended for q up to ~1e5.
    """
    if q < 1:
        raise ValueError("kempner_S_naive requires q >= 1")
    residue = 1 % q
    k = 1
    while True:
        residue = residue * k % q
        if residue == 0:
            return k
        k += 1


def largest_prime_factor(q: int) -> int:
    """P(q): greatest prime dividing q, for q >= 2."""
    return factorize(q)[-1][0]


def kempner_result(q: int) -> KempnerResult:
    if q < 2:
        raise ValueError("kempner_result requires q >= 2")
    factorization = factorize(q)
    return KempnerResult(
        q=q,
        s=kempner_S(q, factorization),
        p=factorization[-1][0],
        factorization=factorization,
    )


def rewrite_over_factorial(p: int, q: int) -> tuple[int, int]:
    """Rewrite p/q as m/n! with n = S(q) and m = p * S(q)!/q (exact division)."""
    if q < 2:
        raise ValueError("rewrite_over_factorial requires q >= 2")
    n = kempner_S(q)
    fact = math.factorial(n)
    assert fact % q == 0
    m = p * (fact // q)
    assert Fraction(m, fact) == Fraction(p, q)
    return m, n
