"""Nested rational intervals enclosing e, and exact decision procedures
built on them.

The construction: I1 = [2, 3]; I_n is the second of n equal subdivisions of
I_{n-1}. The left endpoints are the partial sums of sum(1/k!) and the width
of I_n is exactly 1/n!, so the intervals shrink to the single point e. Every
comparison against e in this package is answered by refining these intervals
until the enclosure decides it; e itself is never materialized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .rationals import GREATER, LESS, truncate_decimal

DEFAULT_DEPTH_CAP = 500


class DepthCapExceeded(RuntimeError):
    """Raised when a comparison is still undecided at the configured depth."""


@dataclass(frozen=True)
class Interval:
    left: Fraction
    right: Fraction
    n: int

    @property
    def width(self) -> Fraction:
        return self.right - self.left

    def contains(self, x: Fraction) -> bool:
        return self.left <= x <= self.right

    def strictly_contains(self, x: Fraction) -> bool:
        return self.left < x < self.right


# Memoized partial sums of 1/k!; _SUMS[n] = sum_{k=0}^{n} 1/k!.
_SUMS: list[Fraction] = [Fraction(1)]


def partial_sum(n: int) -> Fraction:
    """s_n = sum_{k=0}^{n} 1/k!, the left endpoint of I_n for n >= 1."""
    if n < 0:
        raise ValueError("partial_sum requires n >= 0")
    while len(_SUMS) <= n:
        k = len(_SUMS)
        _SUMS.append(_SUMS[-1] + Fraction(1, math.factorial(k)))
    return _SUMS[n]


def interval(n: int) -> Interval:
    """The n-th interval of the construction: [s_n, s_n + 1/n!]."""
    if n < 1:
        raise ValueError("interval requires n >= 1")
    left = partial_sum(n)
    return Interval(left=left, right=left + Fraction(1, math.factorial(n)), n=n)


def subdivide_second(prev: Interval) -> Interval:
    """Inductive step: second of (prev.n + 1) equal parts of prev.

    Equivalent to interval(prev.n + 1); used to test that the closed form
    matches the literal construction.
    """
    n = prev.n + 1
    step = prev.width / n
    return Interval(left=prev.left + step, right=prev.left + 2 * step, n=n)


def distance_bracket(r: Fraction, n: int) -> tuple[Fraction, Fraction]:
    """Exact bracket [lo, hi] containing |e - r|, from the depth-n interval."""
    box = interval(n)
    if r <= box.left:
        return box.left - r, box.right - r
    if r >= box.right:
        return r - box.right, r - box.left
    return Fraction(0), max(r - box.left, box.right - r)


def _depths(depth_cap: int | None):
    n = 4
    while True:
        yield n
        if depth_cap is not None and n >= depth_cap:
            return
        n *= 2
        if depth_cap is not None:
            n = min(n, depth_cap)


def compare_distance_to_e(
    r: Fraction, bound: Fraction, depth_cap: int | None = DEFAULT_DEPTH_CAP
) -> str:
    """Exact truth of |e - r| vs bound: 'greater' or 'less'.

    Never 'equal': r and bound are rational, so |e - r| = bound would make e
    rational. bound = 0 is answered 'greater' immediately for the same
    reason. depth_cap=None removes the safety cap (termination is still
    guaranteed mathematically).
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    if bound == 0:
        return GREATER
    for n in _depths(depth_cap):
        lo, hi = distance_bracket(r, n)
        if lo > bound:
            return GREATER
        if hi < bound:
            return LESS
    raise DepthCapExceeded(
        f"comparison of |e - {r}| against {bound} undecided at depth {depth_cap}"
    )


def render_distance(
    r: Fraction, digits: int, depth_cap: int | None = DEFAULT_DEPTH_CAP
) -> str:
    """Truncated decimal expansion of |e - r|, correct to `digits` places.

    Refines until both bracket endpoints truncate identically.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    for n in _depths(depth_cap):
        lo, hi = distance_bracket(r, n)
        if lo == 0:
            continue
        lo_text = truncate_decimal(lo, digits)
        if lo_text == truncate_decimal(hi, digits):
            return lo_text
    raise DepthCapExceeded(
        f"decimal rendering of |e - {r}| undecided at depth {depth_cap}"
    )


def floor_e_times(q: int, depth_cap: int | None = DEFAULT_DEPTH_CAP) -> int:
    """floor(e * q) for a positive integer q, decided exactly.

    e*q is irrational for q >= 1, so the two endpoint floors agree once the
    enclosure is tight enough.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    for n in _depths(depth_cap):
        box = interval(n)
        lo = (box.left * q).__floor__()
        hi = (box.right * q).__floor__()
        if lo == hi:
            return lo
    raise DepthCapExceeded(f"floor(e * {q}) undecided at depth {depth_cap}")
