"""Truncated formal power series over exact integers.

A TruncatedSeries holds coefficients for x^0..x^N; every operation is
exact integer arithmetic, and binary operations truncate to the smaller
operand order.  Infinite products are truncated to factors with exponent
at most N, which cannot disturb coefficients up to N since every dropped
factor is 1 + O(x^(N+1)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import DomainError


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError("series needs at least the constant coefficient")
        for c in self.coeffs:
            if not isinstance(c, int):
                raise DomainError(f"non-integer coefficient {c!r}")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        if not 0 <= i <= self.order:
            raise DomainError(f"coefficient index {i} outside 0..{self.order}")
        return self.coeffs[i]

    @classmethod
    def from_list(cls, coeffs, order: int | None = None) -> "TruncatedSeries":
        values = list(coeffs)
        if order is not None:
            if order < 0:
                raise DomainError(f"order must be >= 0, got {order}")
            values = values[: order + 1] + [0] * (order + 1 - len(values))
        return cls(tuple(values))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_list([1], order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: int = 1) -> "TruncatedSeries":
        if power < 0:
            raise DomainError(f"power must be >= 0, got {power}")
        values = [0] * (order + 1)
        if power <= order:
            values[power] = coeff
        return cls(tuple(values))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self.coeffs[i] - other.coeffs[i] for i in range(n + 1)))

    def scale(self, factor: int) -> "TruncatedSeries":
        return TruncatedSeries(tuple(factor * c for c in self.coeffs))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller operand order."""
    n = min(a.order, b.order)
    out = [0] * (n + 1)
    for i, ai in enumerate(a.coeffs[: n + 1]):
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            bj = b.coeffs[j]
            if bj:
                out[i + j] += ai * bj
    return TruncatedSeries(tuple(out))


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse at the same order; constant term must be +-1."""
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise DomainError(f"series with constant term {a0} has no integer inverse")
    n = a.order
    out = [0] * (n + 1)
    out[0] = a0
    for i in range(1, n + 1):
        acc = 0
        for k in range(1, i + 1):
            ak = a.coeffs[k]
            if ak:
                acc += ak * out[i - k]
        out[i] = -a0 * acc
    return TruncatedSeries(tuple(out))


def _multiply_geometric(coeffs: list[int], step: int) -> None:
    # in-place product with 1/(1-x^step)
    for i in range(step, len(coeffs)):
        coeffs[i] += coeffs[i - step]


def partition_gf(N: int) -> TruncatedSeries:
    """Product of 1/(1-x^j) for j = 1..N; coefficient n counts partitions of n."""
    if N < 0:
        raise DomainError(f"order must be >= 0, got {N}")
    coeffs = [1] + [0] * N
    for j in range(1, N + 1):
        _multiply_geometric(coeffs, j)
    return TruncatedSeries(tuple(coeffs))


def compositions_gf(N: int) -> TruncatedSeries:
    """x/(1-2x): coefficient n is 2^(n-1) for n >= 1, constant term 0."""
    if N < 1:
        raise DomainError(f"order must be >= 1, got {N}")
    one_minus_2x = TruncatedSeries.from_list([1, -2], N)
    return series_mul(TruncatedSeries.monomial(1, N), series_inverse(one_minus_2x))


def distinct_partitions_ell_gf(ell: int, N: int) -> TruncatedSeries:
    """x^(ell(ell+1)/2) / prod_{i=1..ell}(1-x^i).

    Coefficient n counts partitions of n into exactly ell distinct parts:
    the staircase ell + (ell-1) + ... + 1 is the least such partition and
    the geometric factors distribute the remaining weight.
    """
    if ell < 0:
        raise DomainError(f"ell must be >= 0, got {ell}")
    if N < 0:
        raise DomainError(f"order must be >= 0, got {N}")
    staircase = ell * (ell + 1) // 2
    coeffs = [0] * (N + 1)
    if staircase > N:
        return TruncatedSeries(tuple(coeffs))
    coeffs[staircase] = 1
    for i in range(1, ell + 1):
        _multiply_geometric(coeffs, i)
    return TruncatedSeries(tuple(coeffs))


def distinct_compositions_gf(N: int) -> TruncatedSeries:
    """Sum over ell of ell! times the exactly-ell distinct-partition series.

    Each partition into ell distinct parts orders in ell! ways, so the
    coefficient at x^n counts compositions of n with pairwise distinct
    parts.  The sum is finite: ell(ell+1)/2 <= N bounds ell.
    """
    if N < 0:
        raise DomainError(f"order must be >= 0, got {N}")
    total = [0] * (N + 1)
    ell = 0
    while ell * (ell + 1) // 2 <= N:
        factor = math.factorial(ell)
        for i, c in enumerate(distinct_partitions_ell_gf(ell, N).coeffs):
            if c:
                total[i] += factor * c
        ell += 1
    return TruncatedSeries(tuple(total))
