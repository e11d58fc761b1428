"""Finite bounded posets, cone operators and antitone involutions.

Element sets are bitmasks (see :mod:`unsharp.bits`). Every order keeps its
principal down-sets and up-sets, so a cone of a set is an intersection of
principals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .bits import full, iter_bits, mask, members
from .report import Report, StructureError


@dataclass(frozen=True)
class Carrier:
    labels: tuple[str, ...]
    zero: int = 0
    one: int = -1

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        n = len(labels)
        if n < 1:
            raise StructureError("carrier must be non-empty")
        if len(set(labels)) != n:
            raise StructureError("carrier labels must be distinct")
        one = self.one % n
        object.__setattr__(self, "one", one)
        if not (0 <= self.zero < n):
            raise StructureError("zero index out of range")
        if n >= 2 and self.zero == one:
            raise StructureError("zero and one must differ")

    @classmethod
    def of_size(cls, n: int) -> "Carrier":
        if n == 1:
            return cls(("0",), 0, 0)
        mids = [f"x{i}" for i in range(1, n - 1)]
        return cls(("0", *mids, "1"), 0, n - 1)

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def fmt_set(self, m: int) -> str:
        return "{" + ",".join(self.labels[i] for i in iter_bits(m)) + "}"


class OrderRelation:
    """A partial order on ``0..n-1`` stored as principal down-/up-set masks."""

    __slots__ = ("n", "down", "up", "_full")

    def __init__(self, leq: Sequence[Sequence[bool]]):
        n = len(leq)
        down = [0] * n
        up = [0] * n
        for x in range(n):
            row = leq[x]
            if len(row) != n:
                raise StructureError("order table must be square")
            for y in range(n):
                if row[y]:
                    up[x] |= 1 << y
                    down[y] |= 1 << x
        self.n = n
        self.down = tuple(down)
        self.up = tuple(up)
        self._full = full(n)

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "OrderRelation":
        leq = [[x == y for y in range(n)] for x in range(n)]
        for x, y in pairs:
            leq[x][y] = True
        return cls(leq)

    def __eq__(self, other):
        return isinstance(other, OrderRelation) and self.down == other.down

    def __hash__(self):
        return hash(self.down)

    def __repr__(self):
        return f"OrderRelation(n={self.n})"

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def table(self) -> list[list[bool]]:
        return [[self.leq(x, y) for y in range(self.n)] for x in range(self.n)]

    def comparable(self, x: int, y: int) -> bool:
        return bool((self.up[x] | self.down[x]) >> y & 1)

    def lower_cone(self, A: int) -> int:
        out = self._full
        down = self.down
        while A:
            low = A & -A
            out &= down[low.bit_length() - 1]
            A ^= low
        return out

    def upper_cone(self, A: int) -> int:
        out = self._full
        up = self.up
        while A:
            low = A & -A
            out &= up[low.bit_length() - 1]
            A ^= low
        return out

    def set_leq(self, A: int, B: int) -> bool:
        """True iff every element of ``A`` is below every element of ``B``."""
        if not A or not B:
            return True
        return A & ~self.lower_cone(B) == 0

    def min_elements(self, A: int) -> int:
        out = 0
        for x in iter_bits(A):
            if self.down[x] & A == 1 << x:
                out |= 1 << x
        return out

    def max_elements(self, A: int) -> int:
        out = 0
        for x in iter_bits(A):
            if self.up[x] & A == 1 << x:
                out |= 1 << x
        return out

    def linear_extension(self, within: int | None = None) -> list[int]:
        if within is None:
            within = self._full
        return sorted(iter_bits(within), key=lambda x: (self.down[x].bit_count(), x))

    def antichains(self, within: int | None = None) -> Iterator[int]:
        """Yield every non-empty antichain inside ``within`` exactly once."""
        elems = self.linear_extension(within)
        bits = [1 << x for x in elems]
        comp = [self.down[x] | self.up[x] for x in elems]
        k = len(elems)
        stack = [(i, bits[i], comp[i]) for i in range(k - 1, -1, -1)]
        while stack:
            i, chosen, blocked = stack.pop()
            yield chosen
            for j in range(k - 1, i, -1):
                if not blocked & bits[j]:
                    stack.append((j, chosen | bits[j], blocked | comp[j]))

    def count_antichains(self, within: int | None = None) -> int:
        return sum(1 for _ in self.antichains(within))

    def covers(self) -> list[tuple[int, int]]:
        out = []
        for x in range(self.n):
            above = self.up[x] & ~(1 << x)
            for y in iter_bits(above):
                between = above & self.down[y] & ~(1 << y)
                if not between:
                    out.append((x, y))
        return out

    def check_bounded(self, zero: int, one: int) -> Report:
        """Reflexivity, antisymmetry, transitivity and the two bounds."""
        r = Report("bounded poset")
        r.check("reflexive", "antisymmetric", "transitive", "bounded")
        n = self.n
        for x in range(n):
            if not self.leq(x, x):
                r.fail("reflexive", x=x)
            for y in range(n):
                if x != y and self.leq(x, y) and self.leq(y, x):
                    r.fail("antisymmetric", x=x, y=y)
                if self.leq(x, y) and self.up[y] & ~self.up[x]:
                    z = members(self.up[y] & ~self.up[x])[0]
                    r.fail("transitive", x=x, y=y, z=z)
            if not (self.leq(zero, x) and self.leq(x, one)):
                r.fail("bounded", x=x)
        return r

    def is_lattice(self) -> Report:
        """Pass iff every pair has a join and a meet."""
        r = Report("lattice")
        r.check("join", "meet")
        for x in range(self.n):
            for y in range(x + 1, self.n):
                pair = 1 << x | 1 << y
                mub = self.min_elements(self.upper_cone(pair))
                if mub.bit_count() != 1:
                    r.fail("join", "no least upper bound",
                           pair=(x, y), minimal_upper_bounds=frozenset(members(mub)))
                mlb = self.max_elements(self.lower_cone(pair))
                if mlb.bit_count() != 1:
                    r.fail("meet", "no greatest lower bound",
                           pair=(x, y), maximal_lower_bounds=frozenset(members(mlb)))
        return r


def image(fmap: Sequence[int], A: int) -> int:
    """Elementwise image of a set under a unary map."""
    out = 0
    for x in iter_bits(A):
        out |= 1 << fmap[x]
    return out


def check_involution(fmap: Sequence[int], order: OrderRelation | None = None) -> Report:
    """Bijection, self-inverse, and (given an order) antitone."""
    r = Report("involution")
    n = len(fmap)
    r.check("bijection", "involution")
    if sorted(fmap) != list(range(n)):
        r.fail("bijection", map=tuple(fmap))
        return r
    for x in range(n):
        if fmap[fmap[x]] != x:
            r.fail("involution", x=x)
    if order is not None:
        r.merge(check_antitone(fmap, order))
    return r


def check_antitone(fmap: Sequence[int], order: OrderRelation, tag: str = "antitone") -> Report:
    r = Report(tag)
    r.check(tag)
    for x in range(order.n):
        for y in iter_bits(order.up[x]):
            if not order.leq(fmap[y], fmap[x]):
                r.fail(tag, x=x, y=y)
    return r


def inverse_map(fmap: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(fmap)
    for x, y in enumerate(fmap):
        inv[y] = x
    return tuple(inv)


__all__ = [
    "Carrier", "OrderRelation", "image", "check_involution", "check_antitone",
    "inverse_map", "mask", "members",
]
