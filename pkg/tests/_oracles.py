"""Independent reference implementations used only by the test suite.

Everything here is written from the raw definitions, deliberately not
sharing code paths with the package: compositions come from separator
bitmasks, partitions from an ascending-part recursion, the rational sums
from literal sawtooth products, and the floating sums from mpmath complex
exponentials.
"""

from __future__ import annotations

from fractions import Fraction


def compositions_bitmask(n: int) -> set[tuple[int, ...]]:
    """All compositions of n, one per separator bitmask."""
    out = set()
    for mask in range(1 << (n - 1)):
        parts = []
        run = 1
        for i in range(n - 1):
            if mask >> i & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.add(tuple(parts))
    return out


def partitions_ascending(n: int, least: int = 1) -> set[tuple[int, ...]]:
    """All partitions of n as descending tuples, built smallest-part-first."""
    if n == 0:
        return {()}
    out = set()
    for part in range(least, n + 1):
        for rest in partitions_ascending(n - part, part):
            out.add(tuple(sorted(rest + (part,), reverse=True)))
    return out


def fib_list(upto: int) -> list[int]:
    values = [0, 1]
    while len(values) <= upto:
        values.append(values[-1] + values[-2])
    return values[: upto + 1]


def triangular(n: int) -> bool:
    m = 0
    while m * (m + 1) // 2 < n:
        m += 1
    return m * (m + 1) // 2 == n


def q_table_literal(upto: int) -> list[int]:
    """Distinct-count recurrence with the uncorrected linear shifts 3k-1, 3k+1."""
    values = [1]
    for n in range(1, upto + 1):
        total = 1 if triangular(n) else 0
        k = 1
        while 3 * k - 1 <= n:
            sign = 1 if k % 2 else -1
            term = values[n - (3 * k - 1)]
            if 3 * k + 1 <= n:
                term += values[n - (3 * k + 1)]
            total += sign * term
            k += 1
        values.append(total)
    return values


def q_table_corrected(upto: int) -> list[int]:
    """Same recurrence with the quadratic shifts k(3k-1), k(3k+1)."""
    values = [1]
    for n in range(1, upto + 1):
        total = 1 if triangular(n) else 0
        k = 1
        while k * (3 * k - 1) <= n:
            sign = 1 if k % 2 else -1
            term = values[n - k * (3 * k - 1)]
            if k * (3 * k + 1) <= n:
                term += values[n - k * (3 * k + 1)]
            total += sign * term
            k += 1
        values.append(total)
    return values


def sawtooth_def(x: Fraction) -> Fraction:
    if x.denominator == 1:
        return Fraction(0)
    floor = x.numerator // x.denominator
    return x - floor - Fraction(1, 2)


def dedekind_def(h: int, k: int) -> Fraction:
    return sum(
        (sawtooth_def(Fraction(j, k)) * sawtooth_def(Fraction(h * j, k)) for j in range(1, k)),
        Fraction(0),
    )


def hagis_def(h: int, k: int) -> Fraction:
    return sum(
        (
            sawtooth_def(Fraction(2 * j - 1, 2 * k)) * sawtooth_def(Fraction(h * (2 * j - 1), k))
            for j in range(1, k + 1)
        ),
        Fraction(0),
    )


def kloosterman_complex(k: int, n: int, dps_bits: int = 256):
    """Exponential sum evaluated as literal mpmath complex exponentials."""
    import math

    from mpmath import mp, mpc, exp, mpf, pi

    with mp.workprec(dps_bits):
        total = mpc(0)
        for h in range(k):
            if h == 0 and k != 1:
                continue
            if h and math.gcd(h, k) != 1:
                continue
            s = dedekind_def(h, k)
            angle = mpf(s.numerator) / s.denominator - mpf(2 * n * h) / k
            total += exp(mpc(0, 1) * pi * angle)
        return total
