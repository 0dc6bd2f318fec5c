"""Term-ratio-difference approximation of sqrt(5).

For the minimal super-increasing sequence {a_i} the term ratio
mu_i = a_i / a_{i-1} is constantly 2; for the minimal extra-super-increasing
sequence {z_i} the term ratio nu_i = z_i / z_{i-1} climbs toward the square
of the golden ratio.  The difference nu_i - mu_i therefore climbs toward the
golden ratio conjugate, and 2 * (nu_i - mu_i) + 1 approximates sqrt(5) from
below, one-sidedly and monotonically.

Sweeps carry a rolling pair of sequence terms, so a scan to index N costs
O(N) big-integer operations and no shared state; point queries recompute
their own prefix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exact import (
    check_digit_cap,
    rational_to_decimal,
    sqrt5_reference_fraction,
)
from .sequences import minimal_super
from .series import iter_partial_sums

# Externally claimed index for a 36-digit conjugate match; carried in reports
# for comparison against the measured indices, never asserted.
CLAIMED_PHI_MATCH_N = 40

_METHODS = ("ratio", "series")


@dataclass(frozen=True)
class RatioRecord:
    """Both term ratios at one index, their difference, and the sqrt(5) value."""

    index: int
    mu: Fraction
    nu: Fraction
    diff: Fraction
    sqrt5_approx: Fraction


@dataclass(frozen=True)
class PhiMatchResult:
    """Smallest indices matching the conjugate under two equality notions.

    ``strict_error_n`` uses absolute error below 10**-digits;``prefix_n``
    uses agreement of the truncated decimal renderings.  ``claimed_n`` is the
    externally claimed index, reported alongside for comparison.
    """

    requested_digits: int
    strict_error_n: int
    prefix_n: int
    claimed_n: int = CLAIMED_PHI_MATCH_N


def _z_pair(i: int) -> tuple[int, int]:
    """(z_{i-1}, z_i) via the linear recurrence z_i = 3*z_{i-1} - z_{i-2}."""
    prev, cur = 1, 2
    for _ in range(i - 1):
        prev, cur = cur, 3 * cur - prev
    return prev, cur


def term_ratio_mu(i: int) -> Fraction:
    """a_i / a_{i-1} computed from generated minimal super-increasing terms."""
    if i < 1:
        raise ValueError("term ratios start at index 1")
    terms = minimal_super(i).terms
    return Fraction(terms[i], terms[i - 1])


def term_ratio_nu(i: int) -> Fraction:
    """z_i / z_{i-1} in lowest terms.

    >>> term_ratio_nu(3)
    Fraction(13, 5)
    """
    if i < 1:
        raise ValueError("term ratios start at index 1")
    prev, cur = _z_pair(i)
    return Fraction(cur, prev)


def ratio_diff(i: int) -> Fraction:
    """The term ratio difference nu_i - mu_i."""
    return term_ratio_nu(i) - term_ratio_mu(i)


def sqrt5_via_ratio(n: int) -> Fraction:
    """sqrt(5) approximant 2 * (nu_n - mu_n) + 1.

    >>> sqrt5_via_ratio(8)
    Fraction(682, 305)
    """
    if n < 1:
        raise ValueError("the approximant starts at index 1")
    return 2 * ratio_diff(n) + 1


def ratio_record(i: int) -> RatioRecord:
    mu = term_ratio_mu(i)
    nu = term_ratio_nu(i)
    diff = nu - mu
    return RatioRecord(i, mu, nu, diff, 2 * diff + 1)


def iter_ratio_records(start: int = 1) -> Iterator[RatioRecord]:
    """Rolling sweep of records from ``start`` upward, O(1) work per step."""
    if start < 1:
        raise ValueError("term ratios start at index 1")
    z_prev, z_cur = _z_pair(start)
    a_prev, a_cur = 1 << (start - 1), 1 << start
    i = start
    while True:
        mu = Fraction(a_cur, a_prev)
        nu = Fraction(z_cur, z_prev)
        diff = nu - mu
        yield RatioRecord(i, mu, nu, diff, 2 * diff + 1)
        z_prev, z_cur = z_cur, 3 * z_cur - z_prev
        a_prev, a_cur = a_cur, 2 * a_cur
        i += 1


def find_min_n(
    method: str,
    target_digits: int,
    *,
    guard_digits: int = 10,
    cap: int | None = None,
) -> int:
    """Smallest n with |approx(n) - sqrt(5)| < 10**-target_digits.

    The reference carries ``guard_digits`` extra digits so the threshold
    verdict is reliable.  A linear scan from n = 1 returns the minimum
    because both methods have strictly decreasing absolute error.
    """
    if method not in _METHODS:
        raise ValueError(f"unknown method {method!r}")
    if target_digits < 1:
        raise ValueError("target digit count must be at least 1")
    check_digit_cap(target_digits, cap)
    oracle_digits = target_digits + guard_digits
    reference = sqrt5_reference_fraction(oracle_digits, cap=oracle_digits)
    epsilon = Fraction(1, 10 ** target_digits)
    if method == "series":
        for n, partial in iter_partial_sums():
            if n >= 1 and abs(partial - reference) < epsilon:
                return n
    else:
        for record in iter_ratio_records():
            if abs(record.sqrt5_approx - reference) < epsilon:
                return record.index
    raise AssertionError("unreachable")


def phi_match_report(
    precision_digits: int,
    *,
    guard_digits: int = 10,
    cap: int | None = None,
) -> PhiMatchResult:
    """Find the smallest matching index under both equality notions.

    The strict notion asks for absolute error below 10**-precision_digits
    against the conjugate reference (sqrt(5) - 1) / 2 carried at
    ``guard_digits`` extra digits.  The prefix notion asks for the truncated
    decimal renderings of the difference and of the reference to agree on
    the first ``precision_digits`` fractional digits.
    """
    if precision_digits < 1:
        raise ValueError("precision must be at least 1 digit")
    check_digit_cap(precision_digits, cap)
    oracle_digits = precision_digits + guard_digits
    conjugate = (sqrt5_reference_fraction(oracle_digits, cap=oracle_digits) - 1) / 2
    epsilon = Fraction(1, 10 ** precision_digits)
    wanted_prefix = str(rational_to_decimal(conjugate, precision_digits))
    strict_n: int | None = None
    prefix_n: int | None = None
    for record in iter_ratio_records():
        if strict_n is None and abs(record.diff - conjugate) < epsilon:
            strict_n = record.index
        if prefix_n is None and (
            str(rational_to_decimal(record.diff, precision_digits)) == wanted_prefix
        ):
            prefix_n = record.index
        if strict_n is not None and prefix_n is not None:
            return PhiMatchResult(precision_digits, strict_n, prefix_n)
    raise AssertionError("unreachable")


def find_phi_match_n(
    precision_digits: int,
    *,
    guard_digits: int = 10,
    cap: int | None = None,
) -> int:
    """Smallest n whose term ratio difference matches the conjugate strictly."""
    report = phi_match_report(
        precision_digits, guard_digits=guard_digits, cap=cap
    )
    return report.strict_error_n
