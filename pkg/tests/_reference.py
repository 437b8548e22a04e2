"""Independent reference constants for the test suite.

Everything here is computed with exact Fraction arithmetic from classical
series that have nothing to do with the code under test: e from its
factorial series, pi from Machin's arctangent formula, zeta from a scaled
prefix sum plus an Euler-Maclaurin tail.  Accuracy bounds are stated per
constant; test_reference.py pins 20-digit decimal prefixes so a regression
here fails loudly rather than silently weakening every numeric comparison.
"""

from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def e_ref() -> Fraction:
    """sum of 1/k! for k = 0..40; error below 1e-49."""
    total = Fraction(0)
    fact = 1
    for k in range(41):
        if k:
            fact *= k
        total += Fraction(1, fact)
    return total


def _arctan_inv(m: int, terms: int) -> Fraction:
    """arctan(1/m) by the alternating Taylor series, `terms` terms."""
    total = Fraction(0)
    for k in range(terms):
        term = Fraction(1, (2 * k + 1) * m ** (2 * k + 1))
        total += -term if k % 2 else term
    return total


@lru_cache(maxsize=None)
def pi_ref() -> Fraction:
    """Machin: pi = 16 arctan(1/5) - 4 arctan(1/239); error below 1e-80."""
    return 16 * _arctan_inv(5, 60) - 4 * _arctan_inv(239, 20)


_ZETA_N = 10**4
_ZETA_SCALE = 10**36


@lru_cache(maxsize=None)
def zeta_ref(d: int) -> Fraction:
    """zeta(d) for integer d >= 2; error below 1e-25.

    Prefix sum over k < N as one scaled integer (each term truncated at
    36 decimal places, so the prefix undershoots by < N * 1e-36), then the
    Euler-Maclaurin tail N^(1-d)/(d-1) + N^-d/2 + (d/12) N^(-d-1)
    - (d(d+1)(d+2)/720) N^(-d-3), whose own error is O(N^(-d-5)).
    """
    if not isinstance(d, int) or d < 2:
        raise ValueError("zeta_ref needs an integer d >= 2")
    n = _ZETA_N
    prefix = sum(_ZETA_SCALE // k**d for k in range(1, n))
    total = Fraction(prefix, _ZETA_SCALE)
    nf = Fraction(n)
    total += nf ** (1 - d) / (d - 1)
    total += nf ** (-d) / 2
    total += Fraction(d, 12) * nf ** (-d - 1)
    total -= Fraction(d * (d + 1) * (d + 2), 720) * nf ** (-d - 3)
    return total


def harmonic(m: int) -> Fraction:
    """H_m = sum of 1/j for j = 1..m."""
    return sum((Fraction(1, j) for j in range(1, m + 1)), Fraction(0))


def decimal_prefix(q: Fraction, digits: int) -> str:
    """Truncated decimal rendering used to pin reference digits."""
    sign = "-" if q < 0 else ""
    n, d = abs(q.numerator), q.denominator
    whole, rem = divmod(n, d)
    frac = rem * 10**digits // d
    return f"{sign}{whole}.{frac:0{digits}d}"
