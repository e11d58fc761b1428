"""Element sets as integer bitmasks over dense element indices."""

from __future__ import annotations

from typing import Iterable, Iterator


def mask(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << x
    return m


def full(n: int) -> int:
    return (1 << n) - 1


def members(m: int) -> list[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def iter_bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def size(m: int) -> int:
    return m.bit_count()


def subsets(m: int) -> Iterator[int]:
    """All non-empty submasks of ``m``, in increasing numeric order."""
    sub = 0
    while True:
        sub = (sub - m) & m
        if not sub:
            return
        yield sub
