"""Irrationality-measure checks for e.

Four lower bounds on |e - p/q| are wired up:

* theorem1     : 1/(S(q)+1)!   -- holds for every q > 1
* weak_prime   : 1/(q+1)!      -- the weakening via S(q) <= q
* prime_factor : 1/(P(q)+1)!   -- holds only for almost all q
* known_eps    : 1/q^(2+eps)   -- the classical continued-fraction measure

plus the sharpness check (the theorem1 factorial cannot be lowered) and a
pointwise comparator of theorem1 vs the classical bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .enclosure import (
    DEFAULT_DEPTH_CAP,
    DepthCapExceeded,
    _depths,
    compare_distance_to_e,
    distance_bracket,
    floor_e_times,
    interval,
)
from .kempner import is_prime, kempner_S, largest_prime_factor
from .rationals import LESS, truncate_decimal

BOUND_NAMES = ("theorem1", "weak_prime", "prime_factor", "known_eps")

MARGIN_DIGITS = 6


@dataclass(frozen=True)
class MeasureVerdict:
    p: int
    q: int
    bound_name: str
    bound: Fraction
    holds: bool
    margin_digits: str  # truncated decimal of |e - p/q| - bound, signed


def theorem1_bound(q: int) -> Fraction:
    """1/(S(q)+1)!, the lower bound of the new measure; requires q >= 2."""
    if q < 2:
        raise ValueError("theorem1_bound requires q >= 2")
    return Fraction(1, math.factorial(kempner_S(q) + 1))


def weak_prime_bound(q: int) -> Fraction:
    """1/(q+1)!, the weakening obtained from S(q) <= q."""
    if q < 2:
        raise ValueError("weak_prime_bound requires q >= 2")
    return Fraction(1, math.factorial(q + 1))


def prime_factor_bound(q: int) -> Fraction:
    """1/(P(q)+1)!; valid for almost all q, not for every q."""
    if q < 2:
        raise ValueError("prime_factor_bound requires q >= 2")
    return Fraction(1, math.factorial(largest_prime_factor(q) + 1))


def render_margin(
    r: Fraction,
    bound: Fraction,
    digits: int = MARGIN_DIGITS,
    depth_cap: int | None = DEFAULT_DEPTH_CAP,
) -> str:
    """Truncated decimal of |e - r| - bound, with sign.

    The margin is irrational (a rational offset of |e - r|), so refining the
    enclosure eventually fixes both its sign and its leading digits.
    """
    for n in _depths(depth_cap):
        lo, hi = distance_bracket(r, n)
        m_lo, m_hi = lo - bound, hi - bound
        if m_lo <= 0 <= m_hi:
            continue
        lo_text = truncate_decimal(m_lo, digits)
        if lo_text == truncate_decimal(m_hi, digits):
            return lo_text
    raise DepthCapExceeded(f"margin of |e - {r}| vs {bound} undecided")


def _verdict(p: int, q: int, bound_name: str, bound: Fraction) -> MeasureVerdict:
    r = Fraction(p, q)
    margin = render_margin(r, bound)
    return MeasureVerdict(
        p=p,
        q=q,
        bound_name=bound_name,
        bound=bound,
        holds=not margin.startswith("-"),
        margin_digits=margin,
    )


def check_theorem1(p: int, q: int) -> MeasureVerdict:
    """|e - p/q| > 1/(S(q)+1)!; must hold for every q >= 2."""
    return _verdict(p, q, "theorem1", theorem1_bound(q))


def check_prime_factor_bound(p: int, q: int) -> MeasureVerdict:
    """|e - p/q| > 1/(P(q)+1)!; may fail (only an almost-all statement)."""
    return _verdict(p, q, "prime_factor", prime_factor_bound(q))


def check_weak_prime(p: int, q: int) -> MeasureVerdict:
    return _verdict(p, q, "weak_prime", weak_prime_bound(q))


def check_known(p: int, q: int, eps: Fraction = Fraction(0)) -> MeasureVerdict:
    """|e - p/q| > 1/q^(2+eps), against the classical measure's bound."""
    return _verdict(p, q, "known_eps", known_measure_bound(q, eps))


def check_sharpness(n: int) -> bool:
    """The theorem1 factorial is sharp at q = n!: both endpoints p of the
    depth-n interval satisfy |e - p/n!| < 1/S(n!)! = 1/n!."""
    if n < 3:
        raise ValueError("check_sharpness requires n >= 3")
    box = interval(n)
    bound = Fraction(1, math.factorial(n))
    return all(
        compare_distance_to_e(endpoint, bound) == LESS
        for endpoint in (box.left, box.right)
    )


def nearest_p_candidates(q: int) -> list[int]:
    """Numerators p for which p/q is closest to e: floor(e*q) +/- 1.

    Any p violating a bound below 1/(2q) must give the nearest fraction, so
    these three candidates suffice for 'for all p' sweeps.
    """
    f = floor_e_times(q)
    return [f - 1, f, f + 1]


def corollary2_scan(n: int) -> dict:
    """Fix q = n!; test the prime-factor bound over the candidate p set.

    All candidates pass iff n is prime; for composite n the interval
    endpoint at depth n is a witness of failure.
    """
    if n < 2:
        raise ValueError("corollary2_scan requires n >= 2")
    q = math.factorial(n)
    box = interval(n)
    candidates = sorted(
        set(nearest_p_candidates(q))
        | {int(box.left * q), int(box.right * q)}
    )
    witness = None
    for p in candidates:
        if not check_prime_factor_bound(p, q).holds:
            witness = (p, q)
            break
    return {
        "n": n,
        "prime": is_prime(n),
        "all_hold": witness is None,
        "witness": witness,
    }


def _nth_root_ceil(value: int, d: int) -> int:
    """Smallest integer r with r**d >= value, for value >= 0, d >= 1."""
    if value < 0:
        raise ValueError("value must be >= 0")
    if value in (0, 1) or d == 1:
        return value
    if d == 2:
        root = math.isqrt(value)
    else:
        # Integer Newton iteration for the floor d-th root.
        root = 1 << -(-value.bit_length() // d)
        while True:
            step = ((d - 1) * root + value // root ** (d - 1)) // d
            if step >= root:
                break
            root = step
    return root if root**d >= value else root + 1


def known_measure_bound(q: int, eps: Fraction = Fraction(0)) -> Fraction:
    """Rational lower bound for 1/q^(2+eps); exact when eps is an integer.

    For eps = c/d the irrational factor q^(c/d) is bracketed from above by
    ceil(root) at 30 decimal digits of precision, keeping the result a true
    lower bound.
    """
    if q < 2:
        raise ValueError("known_measure_bound requires q >= 2")
    if eps < 0:
        raise ValueError("eps must be >= 0")
    c, d = eps.numerator, eps.denominator
    if d == 1:
        return Fraction(1, q ** (2 + c))
    scale = 10**30
    upper = _nth_root_ceil(q**c * scale**d, d)  # >= q^(c/d) * 10^30
    return Fraction(scale, q**2 * upper)


def compare_bounds(q: int, eps: Fraction = Fraction(0)) -> dict:
    """Pointwise strength of theorem1 vs the classical measure at q.

    theorem1 is stronger exactly when (S(q)+1)! < q^(2+eps); the comparison
    is done in integers (both sides raised to the eps denominator), so it is
    exact even for fractional eps.
    """
    if q < 2:
        raise ValueError("compare_bounds requires q >= 2")
    s = kempner_S(q)
    c, d = eps.numerator, eps.denominator
    lhs = math.factorial(s + 1) ** d
    rhs = q ** (2 * d + c)
    if lhs < rhs:
        stronger = "theorem1"
    elif lhs > rhs:
        stronger = "known"
    else:
        stronger = "equal_class"
    return {
        "q": q,
        "eps": eps,
        "stronger": stronger,
        "conjecture1_holds_at_q": q * q < math.factorial(s),
    }


def factorial_square_boundary(n: int) -> bool:
    """(n+1)! < (n!)^2 -- true for n >= 3, false at n = 2."""
    fact = math.factorial(n)
    return (n + 1) * fact < fact * fact
