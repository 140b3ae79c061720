"""Composition and partition value types and the bit-sequence codec.

A composition of n is an ordered tuple of positive parts summing to n.
Drawing n units in a row and marking a node in each of a chosen subset of
the n-1 interior gaps cuts the row into consecutive runs; reading run
lengths left to right recovers a composition.  Recording the gaps as a
binary string (bit i is 1 exactly when a node sits between unit i+1 and
unit i+2) gives a bijection between compositions of n and bit strings of
length n-1.  Complementing the bits is an involution on compositions,
called conjugation here.

Bit strings are exposed as BitSeq values and rendered as '0'/'1' text with
no separators.  Compositions render canonically as "a1+a2+..." with no
whitespace.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class DomainError(ValueError):
    """Raised when an input lies outside an operation's documented domain."""


@dataclass(frozen=True)
class Composition:
    """Ordered tuple of positive integer parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise DomainError("composition must have at least one part")
        for i, p in enumerate(self.parts):
            if not isinstance(p, int) or p < 1:
                raise DomainError(f"part {p!r} at position {i} is not a positive integer")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def ell(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return format_composition(self)


@dataclass(frozen=True)
class BitSeq:
    """Binary string encoding a composition; length n-1 for a composition of n."""

    bits: tuple[int, ...]

    def __post_init__(self):
        for b in self.bits:
            if b not in (0, 1):
                raise DomainError(f"bit value {b!r} is not 0 or 1")

    @property
    def length(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive parts; the empty partition sums to 0."""

    parts: tuple[int, ...]

    def __post_init__(self):
        for i, p in enumerate(self.parts):
            if not isinstance(p, int) or p < 1:
                raise DomainError(f"part {p!r} at position {i} is not a positive integer")
            if i and self.parts[i - 1] < p:
                raise DomainError("partition parts must be weakly decreasing")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts)


def make_composition(parts) -> Composition:
    """Validate a sequence of integers and return it as a Composition."""
    return Composition(tuple(parts))


_COMPOSITION_RE = re.compile(r"[1-9][0-9]*(\+[1-9][0-9]*)*\Z")


def parse_composition(text: str) -> Composition:
    """Parse canonical "a1+a2+..." text; whitespace and leading zeros rejected."""
    if not _COMPOSITION_RE.match(text):
        raise DomainError(f"not a composition in a1+a2+... form: {text!r}")
    return Composition(tuple(int(p) for p in text.split("+")))


def format_composition(c: Composition) -> str:
    return "+".join(str(p) for p in c.parts)


def to_bitseq(c: Composition) -> BitSeq:
    """Encode a composition as its gap bit string.

    Bit i (0-indexed, left to right) is 1 iff a node separates unit i+1
    and unit i+2, so each part of size p contributes p-1 zeros followed
    by a 1, except the last part which contributes only the zeros.
    """
    bits: list[int] = []
    for p in c.parts[:-1]:
        bits.extend([0] * (p - 1))
        bits.append(1)
    bits.extend([0] * (c.parts[-1] - 1))
    return BitSeq(tuple(bits))


def from_bitseq(b: BitSeq) -> Composition:
    """Decode a bit string of length L into the composition of L+1 it encodes."""
    parts: list[int] = []
    run = 1
    for bit in b.bits:
        if bit:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return Composition(tuple(parts))


def conjugate(c: Composition) -> Composition:
    """Complement the bit string: an involution sending ell parts to n-ell+1 parts."""
    encoded = to_bitseq(c)
    return from_bitseq(BitSeq(tuple(1 - b for b in encoded.bits)))


# Glyphs chosen to render the unit row unambiguously in terminals:
# U+2212 minus sign for a unit, U+00B7 middle dot for a node.
_UNIT = "−"
_NODE = "·"


def render_graph(c: Composition) -> str:
    """Render n unit glyphs with a node glyph at each marked gap."""
    out = [_UNIT]
    for bit in to_bitseq(c).bits:
        if bit:
            out.append(_NODE)
        out.append(_UNIT)
    return "".join(out)
