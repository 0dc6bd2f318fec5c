"""Binomial-series approximation of sqrt(5) with exact rational partial sums.

sqrt(5) = 2 * (1 + 1/4)**(1/2), and the square-root binomial series at
x = 1/4 gives sqrt(5) = 2 * sum(c_n / 4**n) with

    c_0 = 1,  c_n = (-1)**(n-1) * (2n)! / (4**n * (n!)**2 * (2n - 1)).

Coefficients are advanced incrementally by the rational step between
consecutive coefficients, which keeps a length-N sweep linear in N.  Every
partial sum has a power-of-two denominator, so its decimal expansion
terminates and can be rendered exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator


@dataclass(frozen=True)
class SeriesTerm:
    """One series term: coefficient c_n and its contribution 2 * c_n / 4**n."""

    index: int
    coefficient: Fraction
    contribution: Fraction


def _coefficient_step(n: int) -> Fraction:
    # c_n / c_{n-1}; simplification of (2n)(2n-1)/(4 n^2) * (2n-3)/(2n-1) with sign flip
    return Fraction(-(2 * n - 3), 2 * n)


def iter_terms() -> Iterator[SeriesTerm]:
    """Infinite stream of series terms, starting at index 0."""
    coefficient = Fraction(1)
    scale = Fraction(2)
    n = 0
    while True:
        yield SeriesTerm(n, coefficient, coefficient * scale)
        n += 1
        coefficient *= _coefficient_step(n)
        scale /= 4


def binomial_coefficient_term(n: int) -> Fraction:
    """The coefficient c_n.

    c_0 is 1 by definition: at n = 0 the sign factor and the (2n - 1)
    denominator factor are both -1 and cancel, and hard-coding the product
    avoids raising -1 to a negative power.

    >>> [str(binomial_coefficient_term(n)) for n in range(4)]
    ['1', '1/2', '-1/8', '1/16']
    """
    if n < 0:
        raise ValueError("coefficient index must be nonnegative")
    coefficient = Fraction(1)
    for k in range(1, n + 1):
        coefficient *= _coefficient_step(k)
    return coefficient


def iter_partial_sums() -> Iterator[tuple[int, Fraction]]:
    """Pairs (n, S_n) where S_n = 2 * sum(c_k / 4**k for k <= n)."""
    total = Fraction(0)
    for term in iter_terms():
        total += term.contribution
        yield term.index, total


def sqrt5_series_partial(n: int) -> Fraction:
    """Exact n-th partial sum of the series for sqrt(5).

    >>> sqrt5_series_partial(1)
    Fraction(9, 4)
    """
    if n < 0:
        raise ValueError("partial sum index must be nonnegative")
    for index, total in iter_partial_sums():
        if index == n:
            return total
    raise AssertionError("unreachable")
