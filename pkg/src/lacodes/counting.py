"""Exact big-integer evaluation of the construction counts and bounds.

Everything is computed in exact integer arithmetic; base-2 logarithms are
taken at the end from the exact value (bit length plus a 64-bit leading
mantissa), so reported log2 values carry far more than the required 50
mantissa bits.
"""

from __future__ import annotations

from math import comb, factorial, log, log2

from .isometries import coset_count
from .scaffold import seed_count
from .words import exponent


def log2_int(x: int) -> float:
    """log2 of a positive integer, exact to float precision at any size."""
    if x <= 0:
        raise ValueError("log2 of a non-positive integer")
    b = x.bit_length()
    if b <= 64:
        return log2(x)
    return (b - 64) + log2(x >> (b - 64))


def log2_ratio(num: int, den: int) -> float:
    return log2_int(num) - log2_int(den)


def _check_n(n: int) -> int:
    m = exponent(n)
    if m < 4:
        raise ValueError(f"counting formulas need n = 2^m >= 16, got {n}")
    return m


def _suffix_weight(n: int, level: int) -> int:
    """Product of seed-set sizes above the given level (empty product = 1)."""
    m = exponent(n)
    out = 1
    for i in range(level + 1, m):
        out *= seed_count(n, i)
    return out


def la_code_count(n: int) -> int:
    """Exact number of codes the nondegenerate construction produces."""
    m = _check_n(n)
    total = coset_count(n, m - 1)
    for t in range(1, m - 1):
        d = coset_count(n, t)
        v = seed_count(n, t + 1)
        total *= (d**v - d * v) ** _suffix_weight(n, t + 1)
    return total


def la_code_count_upper(n: int) -> int:
    """Exact value of the representative-count upper bound."""
    m = _check_n(n)
    total = coset_count(n, m - 1)
    for t in range(1, m - 1):
        total *= coset_count(n, t) ** _suffix_weight(n, t)
    return total


def la_code_count_kform(n: int) -> int:
    """The same exact count, evaluated from its k-parameterized product form.

    Independent cross-check of `la_code_count`: per k = 2, 4, ..., n/4 the
    factor is (d^v - d*v)^e with d = 2*(C(k,k/2)/2)^(n/k), v = 2^(n/2k - 1)
    and e = 2^(n/2k - log2(n/2k) - 1).
    """
    _check_n(n)
    total = factorial(n) // (6 * factorial(n // 4) ** 4)
    k = 2
    while k <= n // 4:
        d = 2 * (comb(k, k // 2) // 2) ** (n // k)
        v = 1 << (n // (2 * k) - 1)
        e = 1 << (n // (2 * k) - (n // (2 * k)).bit_length())  # n/2k - log2(n/2k) - 1
        total *= (d**v - d * v) ** e
        k *= 2
    return total


def asymptotic_factors(n: int) -> list[tuple[int, float]]:
    """Per-k log2 factors of the asymptotic product form.

    Each entry is (k, log2 of the k-th factor); the k-th factor is
    (2 * 2^(-n/k) * C(k,k/2)^(n/k)) raised to 2^(n/2k-1) * 2^(n/2k - log2(n/2k) - 1).
    Their sum plus the top-level representative count gives the upper bound.
    """
    _check_n(n)
    out = []
    k = 2
    while k <= n // 4:
        base_log2 = 1 - n // k + (n // k) * log2_int(comb(k, k // 2))
        exp = (1 << (n // (2 * k) - 1)) * (
            1 << (n // (2 * k) - (n // (2 * k)).bit_length())
        )
        out.append((k, exp * base_log2))
        k *= 2
    return out


def asymptotic_log2(n: int) -> float:
    """log2 of the asymptotic form, rebuilt from the per-k factors."""
    m = _check_n(n)
    return sum(f for _, f in asymptotic_factors(n)) + log2_int(coset_count(n, m - 1))


def vasilev_bound_log2(n: int) -> float:
    """log2 of the earliest doubling-construction lower bound.

    Product of 2^(2^(h - log2 h - 1)) over h = n/2, n/4, ..., 2.
    """
    _check_n(n)
    total = 0
    h = n // 2
    while h >= 2:
        total += 1 << (h - h.bit_length())  # h - log2(h) - 1
        h //= 2
    return float(total)


def krotov2000_bound_log2(n: int) -> float:
    """log2 of the previously best lower bound (two-factor form)."""
    _check_n(n)
    half = n // 2
    quarter = n // 4
    return float(
        (1 << (half - half.bit_length()))
        + (1 << (quarter - 1)) * log2(3)
        + (1 << (quarter - quarter.bit_length()))
    )


def upper_bound_log2(x: int) -> float:
    """log2 of the classical upper bound 2^(2^(x - 1.5*log2(x) + log2(1 + ln x))).

    Evaluated verbatim as a function of its argument; callers pass both
    plausible readings of the argument (the power-of-two length and the
    punctured length).
    """
    if x < 2:
        raise ValueError("upper bound argument must be at least 2")
    # the bound is doubly exponential; its log2 is the inner power of two
    return float(2 ** (x - 1.5 * log2(x) + log2(1 + log(x))))


def historical_bounds(n: int) -> dict[str, float]:
    """log2 values of the pre-existing bounds at length n = 2^m."""
    _check_n(n)
    return {
        "vasilev": vasilev_bound_log2(n),
        "krotov2000": krotov2000_bound_log2(n),
        "upper_avgust": upper_bound_log2(n),
        "upper_avgust_alt": upper_bound_log2(n - 1),
    }


def nonequivalence_bounds(n: int) -> tuple[float, float]:
    """log2 counts of inequivalent (extended, punctured) codes guaranteed.

    The quotients divide out the isometry-class and kernel overcounting;
    values may be negative at small n and are reported as-is.
    """
    _check_n(n)
    count_log2 = log2_int(la_code_count(n))
    extended = count_log2 - log2_int(factorial(n)) - (n - 5)
    punctured = count_log2 - log2_int(factorial(n - 1)) - (n - 5)
    return extended, punctured


def format_count(x: int) -> str:
    """Full decimal plus the 2^e form with two decimals."""
    return f"{x} = 2^{log2_int(x):.2f}"
