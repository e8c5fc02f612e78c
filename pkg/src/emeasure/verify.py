"""End-to-end verification suite: one check per headline claim.

`run_all()` is the canonical reproduction path (exposed as the
`verify-paper` CLI subcommand) and is also what the acceptance tests call.
Every check is exact; `detail` carries the computed values so a failure is
self-explanatory.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

from . import cantor, cfrac, density, enclosure, kempner, measures
from .rationals import GREATER, LESS, truncate_decimal


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


def _check(name: str):
    def wrap(fn):
        fn.check_name = name
        _CHECKS.append(fn)
        return fn

    return wrap


_CHECKS: list = []


@_check("interval construction I1..I4")
def check_intervals() -> tuple[bool, str]:
    expected = {
        1: (Fraction(2), Fraction(3)),
        2: (Fraction(5, 2), Fraction(6, 2)),
        3: (Fraction(16, 6), Fraction(17, 6)),
        4: (Fraction(65, 24), Fraction(66, 24)),
    }
    got = {n: (enclosure.interval(n).left, enclosure.interval(n).right) for n in expected}
    return got == expected, f"{got}"


@_check("sandwich 1/120 < |e - 65/24| < 1/24 with printed digits")
def check_sandwich() -> tuple[bool, str]:
    r = Fraction(65, 24)
    ok = (
        enclosure.compare_distance_to_e(r, Fraction(1, 120)) == GREATER
        and enclosure.compare_distance_to_e(r, Fraction(1, 24)) == LESS
    )
    printed = (
        truncate_decimal(Fraction(1, 120), 5),
        enclosure.render_distance(r, 5),
        truncate_decimal(Fraction(1, 24), 5),
    )
    ok = ok and printed == ("0.00833", "0.00994", "0.04166")
    return ok, f"comparisons exact, digits {printed}"


@_check("Kempner fast/naive agreement on q <= 10^4 and anchor values")
def check_kempner_oracle() -> tuple[bool, str]:
    mismatches = [
        q
        for q in range(1, 10_001)
        if kempner.kempner_S(q) != kempner.kempner_S_naive(q)
    ]
    anchors = (
        kempner.kempner_S(6) == 3
        and all(kempner.kempner_S(q) == q for q in range(1, 6))
        and all(
            kempner.kempner_S(math.factorial(n)) == n for n in range(2, 13)
        )
    )
    return not mismatches and anchors, f"mismatches={mismatches[:5]}, anchors={anchors}"


@_check("lower bound 1/(S(q)+1)! sweep, q in [2, 2000], nearest numerators")
def check_measure_sweep() -> tuple[bool, str]:
    failures = []
    for q in range(2, 2001):
        bound = measures.theorem1_bound(q)
        for p in measures.nearest_p_candidates(q):
            if enclosure.compare_distance_to_e(Fraction(p, q), bound) != GREATER:
                failures.append((p, q))
    return not failures, f"failures={failures[:5]}"


@_check("sharpness for 3 <= n <= 12 and prime-factor-bound scan to 12")
def check_sharpness_and_primality() -> tuple[bool, str]:
    sharp = all(measures.check_sharpness(n) for n in range(3, 13))
    scans = [measures.corollary2_scan(n) for n in range(2, 13)]
    biconditional = all(s["prime"] == s["all_hold"] for s in scans)
    witness4 = next(s for s in scans if s["n"] == 4)["witness"] == (65, 24)
    return sharp and biconditional and witness4, (
        f"sharp={sharp}, biconditional={biconditional}, witness at 4 ok={witness4}"
    )


@_check("first 50 convergents: |e - p/q| < 1/q^2 and inside interval(12)")
def check_convergents() -> tuple[bool, str]:
    box = enclosure.interval(12)
    bad_quality = []
    outside = []
    for conv in cfrac.convergents(50):
        value = conv.value
        quality = enclosure.compare_distance_to_e(
            value, Fraction(1, value.denominator**2), depth_cap=None
        )
        if quality != LESS:
            bad_quality.append(conv.index)
        # Containment in interval(12) kicks in once q_k exceeds 12!: below
        # that a convergent may legitimately sit outside the interval.
        if value.denominator > math.factorial(12) and not box.contains(value):
            outside.append(conv.index)
    return not bad_quality and not outside, (
        f"quality failures={bad_quality}, outside interval(12)={outside}"
    )


@_check("reduced denominator of s_19 equals 19!/4000")
def check_q19() -> tuple[bool, str]:
    record = cfrac.partial_sum_record(19)
    expected = math.factorial(19) // 4000
    return record.q_n == expected, f"q_19={record.q_n}, expected {expected}"


@_check("partial-sum convergent scan to 500 yields exactly n = 1 and 3")
def check_conjecture2() -> tuple[bool, str]:
    hits = cfrac.conjecture2_scan(500)
    rows = cfrac.corollary3_scan(60)
    violations = [r["n"] for r in rows if r["violated"]]
    return hits == [1, 3] and not violations, f"hits={hits}, violations={violations}"


@_check("Cantor series classifications (unit, complement, masked)")
def check_cantor() -> tuple[bool, str]:
    unit = cantor.classify(cantor.unit_family(a0=2))
    comp = cantor.classify(cantor.complement_family(a0=0))
    even = cantor.classify(cantor.masked_unit_family((1, 0)))
    odd = cantor.classify(cantor.masked_unit_family((0, 1)))
    telescoping = all(
        cantor.cantor_partial_sum(cantor.complement_family(0), N)
        == 1 - Fraction(1, math.factorial(N + 1))
        for N in range(0, 21)
    )
    ok = (
        unit.classification == cantor.IRRATIONAL
        and comp.classification == cantor.RATIONAL
        and comp.rational_value == 1
        and even.classification == cantor.IRRATIONAL
        and odd.classification == cantor.IRRATIONAL
        and telescoping
    )
    return ok, (
        f"unit={unit.classification}, complement={comp.classification}"
        f"({comp.rational_value}), masked={even.classification}/{odd.classification},"
        f" telescoping={telescoping}"
    )


@_check("range scan: batch agrees pointwise; exception ratios shrink")
def check_density(x_large: int = 10**6) -> tuple[bool, str]:
    spf = density.sieve_smallest_prime_factor(10_000)
    agree = all(
        r.s == kempner.kempner_S(r.q) and r.p == kempner.largest_prime_factor(r.q)
        for r in density.batch_kempner(10_000, spf)
    )
    small = density.density_report(1000)
    large = density.density_report(x_large)
    shrinking = (
        Fraction(large.count_S_neq_P, large.x) < Fraction(small.count_S_neq_P, small.x)
        and Fraction(large.count_conjecture1_fail, large.x)
        < Fraction(small.count_conjecture1_fail, small.x)
    )
    return agree and shrinking, (
        f"pointwise agreement={agree}; ratios S!=P {small.ratio_S_neq_P} -> "
        f"{large.ratio_S_neq_P}, conj1 {small.ratio_conjecture1_fail} -> "
        f"{large.ratio_conjecture1_fail}"
    )


@_check("(n+1)! < (n!)^2 for 3 <= n <= 100, fails at n = 2")
def check_factorial_boundary() -> tuple[bool, str]:
    holds = all(measures.factorial_square_boundary(n) for n in range(3, 101))
    fails_at_2 = not measures.factorial_square_boundary(2)
    return holds and fails_at_2, f"holds(3..100)={holds}, fails at 2={fails_at_2}"


def run_all() -> list[CheckResult]:
    results = []
    for fn in _CHECKS:
        start = time.perf_counter()
        passed, detail = fn()
        results.append(
            CheckResult(
                name=fn.check_name,
                passed=passed,
                detail=detail,
                seconds=time.perf_counter() - start,
            )
        )
    return results
