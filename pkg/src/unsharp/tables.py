"""Partial and set-valued binary tables over dense element indices."""

from __future__ import annotations

from array import array
from typing import Optional, Sequence

from .report import StructureError

PartialTable = tuple[tuple[Optional[int], ...], ...]
SetTable = tuple[tuple[int, ...], ...]


def normalize(table: Sequence[Sequence[Optional[int]]], n: int, name: str = "table") -> PartialTable:
    """Validate shape and range; ``None`` marks an undefined cell."""
    if len(table) != n:
        raise StructureError(f"{name}: expected {n} rows, got {len(table)}")
    rows = []
    for i, row in enumerate(table):
        if len(row) != n:
            raise StructureError(f"{name}: row {i} has {len(row)} cells, expected {n}")
        out = []
        for j, v in enumerate(row):
            if v is None or (isinstance(v, int) and v < 0):
                out.append(None)
            elif isinstance(v, int) and v < n:
                out.append(v)
            else:
                raise StructureError(f"{name}: entry ({i},{j}) = {v!r} out of range")
        rows.append(tuple(out))
    return tuple(rows)


def normalize_sets(table: Sequence[Sequence[int]], n: int, name: str = "table") -> SetTable:
    if len(table) != n or any(len(row) != n for row in table):
        raise StructureError(f"{name}: set table must be {n}x{n}")
    limit = 1 << n
    for i, row in enumerate(table):
        for j, m in enumerate(row):
            if not (isinstance(m, int) and 0 <= m < limit):
                raise StructureError(f"{name}: entry ({i},{j}) is not an element set")
    return tuple(tuple(row) for row in table)


def flat(table: PartialTable) -> array:
    return array("q", [-1 if v is None else v for row in table for v in row])


def image_left(table: PartialTable, A: int, y: int) -> int:
    """``{a*y | a in A}``; raises if some product is undefined."""
    out = 0
    while A:
        low = A & -A
        a = low.bit_length() - 1
        v = table[a][y]
        if v is None:
            raise StructureError(f"required product ({a},{y}) is undefined")
        out |= 1 << v
        A ^= low
    return out


def image_right(table: PartialTable, y: int, A: int) -> int:
    """``{y*a | a in A}``; raises if some product is undefined."""
    out = 0
    row = table[y]
    while A:
        low = A & -A
        a = low.bit_length() - 1
        v = row[a]
        if v is None:
            raise StructureError(f"required product ({y},{a}) is undefined")
        out |= 1 << v
        A ^= low
    return out
