"""Unsharp residuated posets, commutative and general.

Arrows are set-valued; adjointness compares cones of sets, and every
quantified statement is checked over all triples of elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import kernels
from .bits import members
from .order import Carrier, OrderRelation, check_antitone, check_involution
from .report import Report
from .tables import PartialTable, SetTable, flat, image_left, image_right


@dataclass(frozen=True)
class CommUnsharpResiduatedPoset:
    carrier: Carrier
    order: OrderRelation
    comp: tuple[int, ...]
    odot: PartialTable
    arrow: SetTable

    @property
    def n(self) -> int:
        return self.carrier.size


@dataclass(frozen=True)
class UnsharpResiduatedPoset:
    carrier: Carrier
    order: OrderRelation
    lcomp: tuple[int, ...]
    rcomp: tuple[int, ...]
    odot: PartialTable
    arrow: SetTable
    squiggle: SetTable

    @property
    def n(self) -> int:
        return self.carrier.size


def kleene_eq(a: Optional[int], b: Optional[int]) -> bool:
    return a == b


def _monoid(r: Report, prefix: str, odot: PartialTable, one: int) -> None:
    n = len(odot)
    r.check(f"{prefix}-associative", f"{prefix}-unit")
    bad = kernels.assoc_violation(flat(odot), n)
    if bad is not None:
        x, y, z = bad
        r.fail(f"{prefix}-associative", x=x, y=y, z=z)
    for x in range(n):
        if odot[x][one] != x or odot[one][x] != x:
            r.fail(f"{prefix}-unit", x=x)


def _definedness(r: Report, tag: str, odot: PartialTable, order: OrderRelation, pre) -> None:
    """``x.y`` defined iff ``pre[x] <= y``."""
    r.check(tag)
    n = len(odot)
    for x in range(n):
        for y in range(n):
            if (odot[x][y] is not None) != order.leq(pre[x], y):
                r.fail(tag, x=x, y=y)


def _leq_defined(order, a, b) -> bool:
    return a is not None and b is not None and order.leq(a, b)


def _adjointness(r: Report, tag: str, order: OrderRelation, odot: PartialTable,
                 pre, arrow: SetTable, side: str) -> None:
    """``L(U(x, pre y) . y) <= UL(y, z)`` iff ``LU(x, pre y) <= U(y -> z)``.

    ``side`` selects ``U . y`` ("left") or ``y . U`` ("right"). Cones are
    precomputed per pair so the triple loop is mask arithmetic.
    """
    n = order.n
    L, U = order.lower_cone, order.upper_cone
    r.check(f"{tag}(=>)", f"{tag}(<=)")
    lhs_cone = [[0] * n for _ in range(n)]   # L(U(x, pre y) . y)
    lu = [[0] * n for _ in range(n)]         # LU(x, pre y)
    for x in range(n):
        for y in range(n):
            up = U(1 << x | 1 << pre[y])
            img = image_left(odot, up, y) if side == "left" else image_right(odot, y, up)
            lhs_cone[x][y] = L(img)
            lu[x][y] = L(up)
    lul = [[L(U(L(1 << y | 1 << z))) for z in range(n)] for y in range(n)]
    luarr = [[L(U(arrow[y][z])) for z in range(n)] for y in range(n)]
    for x in range(n):
        for y in range(n):
            a = lhs_cone[x][y]
            b = lu[x][y]
            for z in range(n):
                left = a & ~lul[y][z] == 0
                right = b & ~luarr[y][z] == 0
                if left and not right:
                    r.fail(f"{tag}(=>)", x=x, y=y, z=z)
                elif right and not left:
                    r.fail(f"{tag}(<=)", x=x, y=y, z=z)


def check_curp(S: CommUnsharpResiduatedPoset) -> Report:
    """(C1) through (C4)."""
    r = Report("commutative unsharp residuated poset")
    o, c, odot, n = S.order, S.comp, S.odot, S.n
    zero, one = S.carrier.zero, S.carrier.one
    r.merge(o.check_bounded(zero, one), "C1-")
    r.merge(check_involution(c, o), "C1-")
    if r.failed("C1-bijection"):
        return r

    _monoid(r, "C2", odot, one)
    r.check("C2-commutative", "C2-monotone")
    for x in range(n):
        for y in range(x + 1, n):
            if odot[x][y] != odot[y][x]:
                r.fail("C2-commutative", x=x, y=y)
    _definedness(r, "C2-definedness", odot, o, c)
    for z in range(n):
        for x in members(o.up[c[z]]):
            for y in members(o.up[x]):
                if not _leq_defined(o, odot[x][z], odot[y][z]):
                    r.fail("C2-monotone", x=x, y=y, z=z)

    _adjointness(r, "C3", o, odot, c, S.arrow, "left")

    r.check("C4")
    for x in range(n):
        if S.arrow[x][zero] != 1 << c[x]:
            r.fail("C4", "x->0 != {x'}", x=x)
    return r


def check_curp_divisible(S: CommUnsharpResiduatedPoset) -> Report:
    """``x <= y`` implies ``y . (y -> x) = L(x)``."""
    r = Report("divisible")
    r.check("divisible")
    o = S.order
    for x in range(S.n):
        for y in members(o.up[x]):
            if image_right(S.odot, y, S.arrow[y][x]) != o.down[x]:
                r.fail("divisible", x=x, y=y)
    return r


def check_curp_consequences(S: CommUnsharpResiduatedPoset) -> Report:
    """``x . x' = 0``, and ``x . y = 0`` only for ``y = x'``."""
    r = Report("commutative consequences")
    r.check("complement-product", "zero-product")
    zero = S.carrier.zero
    for x in range(S.n):
        if S.odot[x][S.comp[x]] != zero:
            r.fail("complement-product", x=x)
        for y in range(S.n):
            if S.odot[x][y] == zero and y != S.comp[x]:
                r.fail("zero-product", x=x, y=y)
    return r


def check_urp(S: UnsharpResiduatedPoset) -> Report:
    """(R1) through (R7)."""
    r = Report("unsharp residuated poset")
    o, lc, rc, odot, n = S.order, S.lcomp, S.rcomp, S.odot, S.n
    zero, one = S.carrier.zero, S.carrier.one
    r.merge(o.check_bounded(zero, one), "R1-")

    r.check("R2-inverse")
    for m in (lc, rc):
        if sorted(m) != list(range(n)):
            r.fail("R2-inverse", "not a bijection", map=tuple(m))
            return r
    for x in range(n):
        if rc[lc[x]] != x or lc[rc[x]] != x:
            r.fail("R2-inverse", x=x)
    r.merge(check_antitone(lc, o, "R2-antitone-lcomp"))
    r.merge(check_antitone(rc, o, "R2-antitone-rcomp"))

    _monoid(r, "R3", odot, one)
    _definedness(r, "R3-definedness", odot, o, rc)
    r.check("R3-monotone-right", "R3-monotone-left")
    for z in range(n):
        for x in members(o.up[lc[z]]):
            for y in members(o.up[x]):
                if not _leq_defined(o, odot[x][z], odot[y][z]):
                    r.fail("R3-monotone-right", x=x, y=y, z=z)
        for x in members(o.up[rc[z]]):
            for y in members(o.up[x]):
                if not _leq_defined(o, odot[z][x], odot[z][y]):
                    r.fail("R3-monotone-left", x=x, y=y, z=z)

    _adjointness(r, "R4", o, odot, lc, S.arrow, "left")
    _adjointness(r, "R5", o, odot, rc, S.squiggle, "right")

    r.check("R6")
    for x in range(n):
        if S.arrow[x][zero] != 1 << lc[x] or S.squiggle[x][zero] != 1 << rc[x]:
            r.fail("R6", x=x)

    r.check("R7")
    for x in range(n):
        for y in range(n):
            a = odot[lc[x]][lc[y]]
            b = odot[rc[x]][rc[y]]
            left = None if a is None else rc[a]
            right = None if b is None else lc[b]
            if not kleene_eq(left, right):
                r.fail("R7", x=x, y=y)
    return r


def check_urp_divisible(S: UnsharpResiduatedPoset) -> Report:
    """``x <= y`` implies ``(y -> x) . y = y . (y ~> x) = L(x)``."""
    r = Report("divisible")
    r.check("divisible-arrow", "divisible-squiggle")
    o = S.order
    for x in range(S.n):
        for y in members(o.up[x]):
            if image_left(S.odot, S.arrow[y][x], y) != o.down[x]:
                r.fail("divisible-arrow", x=x, y=y)
            if image_right(S.odot, y, S.squiggle[y][x]) != o.down[x]:
                r.fail("divisible-squiggle", x=x, y=y)
    return r


def check_urp_consequences(S: UnsharpResiduatedPoset) -> Report:
    """``x . rcomp(x) = lcomp(x) . x = 0``."""
    r = Report("residuated consequences")
    r.check("right-complement-product", "left-complement-product")
    zero = S.carrier.zero
    for x in range(S.n):
        if S.odot[x][S.rcomp[x]] != zero:
            r.fail("right-complement-product", x=x)
        if S.odot[S.lcomp[x]][x] != zero:
            r.fail("left-complement-product", x=x)
    return r
