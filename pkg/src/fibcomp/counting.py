"""Exact counters: powers of two, Fibonacci numbers, and the two classic
partition recurrences, all over arbitrary-precision integers.

Also home to the floating-point Binet evaluation used to demonstrate where
double-width arithmetic stops rounding to the true Fibonacci value, and to
a small line-oriented cache format for the memo tables.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from pathlib import Path

from .core import DomainError

BigCount = int

TABLE_KINDS = ("p", "q", "fib")


def c_count(n: int) -> int:
    """Number of compositions of n: 2^(n-1)."""
    if n < 1:
        raise DomainError(f"c_count needs n >= 1, got {n}")
    return 1 << (n - 1)


def is_triangular(n: int) -> bool:
    """True when n = m(m+1)/2 for some m >= 0; n = 0 counts."""
    if n < 0:
        return False
    root = math.isqrt(8 * n + 1)
    return root * root == 8 * n + 1


def _extend_fib(values: list[int], upto: int) -> None:
    while len(values) <= upto:
        values.append(values[-1] + values[-2])


def _extend_p(values: list[int], upto: int) -> None:
    # p(n) = sum_{j>=1} (-1)^(j-1) [ p(n - j(3j-1)/2) + p(n - j(3j+1)/2) ]
    while len(values) <= upto:
        n = len(values)
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            sign = 1 if j % 2 else -1
            term = values[n - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= n:
                term += values[n - g2]
            total += sign * term
            j += 1
        values.append(total)


def _extend_q(values: list[int], upto: int) -> None:
    # q(n) + sum_{k>=1} (-1)^k [ q(n - k(3k-1)) + q(n - k(3k+1)) ]
    #   = 1 if n is triangular else 0
    while len(values) <= upto:
        n = len(values)
        total = 1 if is_triangular(n) else 0
        k = 1
        while True:
            g1 = k * (3 * k - 1)
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            term = values[n - g1]
            g2 = k * (3 * k + 1)
            if g2 <= n:
                term += values[n - g2]
            total += sign * term
            k += 1
        values.append(total)


_EXTENDERS = {"fib": _extend_fib, "p": _extend_p, "q": _extend_q}
_BASES = {"fib": [0, 1], "p": [1], "q": [1]}

_fib_values = list(_BASES["fib"])
_p_values = list(_BASES["p"])
_q_values = list(_BASES["q"])


def fibonacci(n: int) -> int:
    """F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}, by the recurrence itself."""
    if n < 0:
        raise DomainError(f"fibonacci needs n >= 0, got {n}")
    _extend_fib(_fib_values, n)
    return _fib_values[n]


def Q_count(n: int) -> int:
    """Number of compositions of n into odd parts; equals F_n."""
    if n < 1:
        raise DomainError(f"Q_count needs n >= 1, got {n}")
    return fibonacci(n)


def p_recurrence(n: int) -> int:
    """Number of partitions of n via the alternating pentagonal-shift recurrence."""
    if n < 0:
        raise DomainError(f"p_recurrence needs n >= 0, got {n}")
    _extend_p(_p_values, n)
    return _p_values[n]


def q_recurrence(n: int) -> int:
    """Number of partitions of n into distinct parts (equivalently odd parts).

    Uses the alternating recurrence with shifts k(3k-1) and k(3k+1) and a
    right side of 1 exactly at triangular n.
    """
    if n < 0:
        raise DomainError(f"q_recurrence needs n >= 0, got {n}")
    _extend_q(_q_values, n)
    return _q_values[n]


def q_recurrence_residual(n: int) -> int:
    """Left side of the distinct-partition recurrence at n.

    Returns q(n) + sum_{k>=1} (-1)^k [q(n - k(3k-1)) + q(n - k(3k+1))],
    which should equal 1 at triangular n and 0 elsewhere.
    """
    if n < 0:
        raise DomainError(f"residual needs n >= 0, got {n}")
    q_recurrence(n)
    total = _q_values[n]
    k = 1
    while True:
        g1 = k * (3 * k - 1)
        if g1 > n:
            break
        sign = -1 if k % 2 else 1
        term = _q_values[n - g1]
        g2 = k * (3 * k + 1)
        if g2 <= n:
            term += _q_values[n - g2]
        total += sign * term
        k += 1
    return total


@dataclass(frozen=True)
class BinetReport:
    n: int
    float_estimate: float
    exact: int
    abs_error: float
    round_correct: bool


def binet_float(n: int) -> BinetReport:
    """Evaluate ((1+sqrt5)^n - (1-sqrt5)^n) / (2^n sqrt5) in double precision.

    Overflow is reported as round_correct=False with infinite error rather
    than raised.
    """
    if n < 0:
        raise DomainError(f"binet_float needs n >= 0, got {n}")
    exact = fibonacci(n)
    s5 = math.sqrt(5.0)
    try:
        estimate = ((1.0 + s5) ** n - (1.0 - s5) ** n) / (2.0**n * s5)
    except OverflowError:
        estimate = math.inf
    if math.isfinite(estimate):
        try:
            err = abs(estimate - exact)
        except OverflowError:
            err = math.inf
        correct = round(estimate) == exact
    else:
        err = math.inf
        correct = False
    return BinetReport(n, estimate, exact, err, correct)


def binet_first_failure(limit: int = 100) -> int | None:
    """Smallest n <= limit whose Binet estimate rounds wrong, or None."""
    for n in range(limit + 1):
        if not binet_float(n).round_correct:
            return n
    return None


@dataclass
class MemoTable:
    """Values 0..N of one recurrence kind, suitable for saving and loading."""

    kind: str
    values: list[int]

    @property
    def max_n(self) -> int:
        return len(self.values) - 1


def build_table(kind: str, max_n: int) -> MemoTable:
    if kind not in TABLE_KINDS:
        raise DomainError(f"unknown table kind {kind!r}")
    if max_n < len(_BASES[kind]) - 1:
        raise DomainError(f"table for {kind!r} needs max_n >= {len(_BASES[kind]) - 1}")
    values = list(_BASES[kind])
    _EXTENDERS[kind](values, max_n)
    return MemoTable(kind, values)


_HEADER_RE = re.compile(r"fibcomp-table v1 kind=(p|q|fib) max=(0|[1-9][0-9]*)\Z")


def save_table(table: MemoTable, path) -> None:
    lines = [f"fibcomp-table v1 kind={table.kind} max={table.max_n}"]
    lines.extend(str(v) for v in table.values)
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")


def _check_index(kind: str, values: list[int], i: int) -> bool:
    base = _BASES[kind]
    if i < len(base):
        return values[i] == base[i]
    if kind == "fib":
        return values[i] == values[i - 1] + values[i - 2]
    probe = values[: i]
    _EXTENDERS[kind](probe, i)
    return probe[i] == values[i]


def load_table(path) -> MemoTable:
    """Load a saved table, re-deriving a 16-index sample before trusting it."""
    text = Path(path).read_text(encoding="ascii")
    lines = text.splitlines()
    if not lines:
        raise DomainError(f"{path}: empty table file")
    header = _HEADER_RE.match(lines[0])
    if not header:
        raise DomainError(f"{path}: bad table header {lines[0]!r}")
    kind, max_n = header.group(1), int(header.group(2))
    body = lines[1:]
    if len(body) != max_n + 1:
        raise DomainError(f"{path}: expected {max_n + 1} values, found {len(body)}")
    try:
        values = [int(line) for line in body]
    except ValueError as exc:
        raise DomainError(f"{path}: non-integer table line ({exc})") from exc
    # deterministic sample so a given file always gets the same audit
    rng = random.Random(f"{kind}:{max_n}")
    sample = rng.sample(range(max_n + 1), min(16, max_n + 1))
    for i in sorted(sample):
        if not _check_index(kind, values, i):
            raise DomainError(f"{path}: table fails its recurrence at index {i}")
    return MemoTable(kind, values)


def cached_table(kind: str, max_n: int, cache_dir) -> MemoTable:
    """Fetch a table from cache_dir, extending and rewriting it as needed."""
    directory = Path(cache_dir)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{kind}.table"
    if path.exists():
        table = load_table(path)
        if table.kind != kind:
            raise DomainError(f"{path}: holds kind {table.kind!r}, wanted {kind!r}")
        if table.max_n >= max_n:
            return table
        _EXTENDERS[kind](table.values, max_n)
    else:
        table = build_table(kind, max_n)
    save_table(table, path)
    return table
