"""Exhaustive generators for constrained compositions and partitions.

These streams are the independent oracles that every closed-form counter,
recurrence, and generating function in this package is validated against,
so they favor obviousness over speed.

Ordering is part of the contract: compositions are emitted in lexicographic
order of their part tuples, partitions in reverse-lexicographic order
(largest first).  Generators are lazy; counting never materializes a stream.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .core import Composition, DomainError, Partition

COMPOSITION_KINDS = ("all", "odd-parts", "min-part-2", "distinct-parts")
PARTITION_KINDS = ("all", "odd-parts", "distinct-parts", "distinct-ell")


@dataclass(frozen=True)
class CompositionClass:
    kind: str

    def __post_init__(self):
        if self.kind not in COMPOSITION_KINDS:
            raise DomainError(f"unknown composition class {self.kind!r}")

    def __str__(self) -> str:
        return f"compositions:{self.kind}"


@dataclass(frozen=True)
class PartitionClass:
    kind: str
    ell: int | None = None

    def __post_init__(self):
        if self.kind not in PARTITION_KINDS:
            raise DomainError(f"unknown partition class {self.kind!r}")
        if self.kind == "distinct-ell":
            if self.ell is None or self.ell < 0:
                raise DomainError("distinct-ell class needs ell >= 0")
        elif self.ell is not None:
            raise DomainError(f"class {self.kind!r} does not take ell")

    def __str__(self) -> str:
        if self.kind == "distinct-ell":
            return f"partitions:distinct-ell={self.ell}"
        return f"partitions:{self.kind}"


EnumClass = Union[CompositionClass, PartitionClass]


def parse_class(text: str) -> EnumClass:
    """Parse "compositions:<kind>" or "partitions:<kind>[=ell]" class names."""
    family, sep, kind = text.partition(":")
    if not sep:
        raise DomainError(f"class must look like family:kind, got {text!r}")
    if family == "compositions":
        return CompositionClass(kind)
    if family == "partitions":
        if kind.startswith("distinct-ell="):
            tail = kind[len("distinct-ell="):]
            if not tail.isdigit():
                raise DomainError(f"bad ell value in {text!r}")
            return PartitionClass("distinct-ell", int(tail))
        return PartitionClass(kind)
    raise DomainError(f"unknown class family {family!r}")


def _comps_all(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _comps_all(n - first):
            yield (first,) + rest


def _comps_odd(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1, 2):
        for rest in _comps_odd(n - first):
            yield (first,) + rest


def _comps_min2(n: int) -> Iterator[tuple[int, ...]]:
    for first in range(2, n + 1):
        rem = n - first
        if rem == 0:
            yield (first,)
        elif rem >= 2:
            for rest in _comps_min2(rem):
                yield (first,) + rest


def _comps_distinct(n: int, used: frozenset[int]) -> Iterator[tuple[int, ...]]:
    for first in range(1, n + 1):
        if first in used:
            continue
        rem = n - first
        if rem == 0:
            yield (first,)
        else:
            for rest in _comps_distinct(rem, used | {first}):
                yield (first,) + rest


def gen_compositions(n: int, cls: CompositionClass) -> Iterator[Composition]:
    """Yield each composition of n in cls exactly once, lexicographically."""
    if not isinstance(cls, CompositionClass):
        raise DomainError(f"expected a composition class, got {cls}")
    if n < 1:
        raise DomainError(f"compositions need n >= 1, got {n}")
    if cls.kind == "all":
        source = _comps_all(n)
    elif cls.kind == "odd-parts":
        source = _comps_odd(n)
    elif cls.kind == "min-part-2":
        if n < 2:
            raise DomainError(f"min-part-2 compositions need n >= 2, got {n}")
        source = _comps_min2(n)
    else:
        source = _comps_distinct(n, frozenset())
    return (Composition(parts) for parts in source)


def _parts_all(n: int, maxp: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxp), 0, -1):
        for rest in _parts_all(n - first, first):
            yield (first,) + rest


def _parts_odd(n: int, maxp: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    top = min(n, maxp)
    if top % 2 == 0:
        top -= 1
    for first in range(top, 0, -2):
        for rest in _parts_odd(n - first, first):
            yield (first,) + rest


def _parts_distinct(n: int, maxp: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxp), 0, -1):
        for rest in _parts_distinct(n - first, first - 1):
            yield (first,) + rest


def _parts_distinct_ell(n: int, ell: int, maxp: int) -> Iterator[tuple[int, ...]]:
    if ell == 0:
        if n == 0:
            yield ()
        return
    # the ell-1 smaller parts need at least 1+2+...+(ell-1)
    floor_rest = ell * (ell - 1) // 2
    for first in range(min(n - floor_rest, maxp), 0, -1):
        for rest in _parts_distinct_ell(n - first, ell - 1, first - 1):
            yield (first,) + rest


def gen_partitions(n: int, cls: PartitionClass) -> Iterator[Partition]:
    """Yield each partition of n in cls exactly once, largest-first."""
    if not isinstance(cls, PartitionClass):
        raise DomainError(f"expected a partition class, got {cls}")
    if n < 0:
        raise DomainError(f"partitions need n >= 0, got {n}")
    if cls.kind == "all":
        source = _parts_all(n, n)
    elif cls.kind == "odd-parts":
        source = _parts_odd(n, n)
    elif cls.kind == "distinct-parts":
        source = _parts_distinct(n, n)
    else:
        source = _parts_distinct_ell(n, cls.ell, n)
    return (Partition(parts) for parts in source)


def count_by_enumeration(n: int, cls: EnumClass) -> int:
    """Length of the class stream, computed by exhausting it lazily."""
    if isinstance(cls, CompositionClass):
        stream: Iterator = gen_compositions(n, cls)
    else:
        stream = gen_partitions(n, cls)
    return sum(1 for _ in stream)
