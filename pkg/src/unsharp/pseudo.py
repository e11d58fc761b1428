"""Pseudoeffect algebras ``(P, +, bar, tilde, 0, 1)``.

``lcomp`` is the left complement (``u + x = 1``) and ``rcomp`` the right one
(``x + w = 1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from . import kernels, monotone
from .effect import EffectAlgebra, left_shift, order_from_sums, right_shift
from .monotone import EXHAUSTIVE, MonotonicityMode
from .order import Carrier, OrderRelation
from .report import Report, StructureError
from .tables import PartialTable, flat, normalize


def complements(plus: PartialTable, one: int) -> tuple[list[list[int]], list[list[int]]]:
    n = len(plus)
    left = [[u for u in range(n) if plus[u][x] == one] for x in range(n)]
    right = [[w for w in range(n) if plus[x][w] == one] for x in range(n)]
    return left, right


def check_pea_axioms(carrier: Carrier, plus, lcomp: Sequence[int] | None = None,
                     rcomp: Sequence[int] | None = None) -> Report:
    """(P1) through (P4); stored complements are cross-checked against (P3)."""
    n = carrier.size
    plus = normalize(plus, n, "plus")
    zero, one = carrier.zero, carrier.one
    r = Report("pseudoeffect algebra axioms")
    r.check("P1", "P2", "P3", "P4")
    for x in range(n):
        for y in range(n):
            s = plus[x][y]
            if s is None:
                continue
            if not any(plus[u][x] == s for u in range(n)):
                r.fail("P1", "no u with u+x = x+y", x=x, y=y)
            if not any(plus[y][w] == s for w in range(n)):
                r.fail("P1", "no w with y+w = x+y", x=x, y=y)
    bad = kernels.assoc_violation(flat(plus), n)
    if bad is not None:
        x, y, z = bad
        r.fail("P2", "(x+y)+z and x+(y+z) differ", x=x, y=y, z=z)
    left, right = complements(plus, one)
    for x in range(n):
        if len(left[x]) != 1:
            r.fail("P3", f"{len(left[x])} left complements", x=x)
        elif lcomp is not None and lcomp[x] != left[x][0]:
            r.fail("P3", "stored left complement disagrees with +", x=x)
        if len(right[x]) != 1:
            r.fail("P3", f"{len(right[x])} right complements", x=x)
        elif rcomp is not None and rcomp[x] != right[x][0]:
            r.fail("P3", "stored right complement disagrees with +", x=x)
    for x in range(n):
        if x != zero and (plus[one][x] is not None or plus[x][one] is not None):
            r.fail("P4", "1+x or x+1 defined for x != 0", x=x)
    return r


@dataclass(frozen=True, eq=False)
class PseudoEffectAlgebra:
    carrier: Carrier
    plus: PartialTable
    lcomp: tuple[int, ...]
    rcomp: tuple[int, ...]

    @classmethod
    def build(cls, carrier: Carrier, plus, lcomp: Sequence[int] | None = None,
              rcomp: Sequence[int] | None = None, check: bool = True) -> "PseudoEffectAlgebra":
        n = carrier.size
        plus = normalize(plus, n, "plus")
        if check:
            r = check_pea_axioms(carrier, plus, lcomp, rcomp)
            if not r.ok:
                raise StructureError(r.format(carrier.labels))
        left, right = complements(plus, carrier.one)
        if lcomp is None:
            if any(len(s) != 1 for s in left):
                raise StructureError("left complement is not unique")
            lcomp = [s[0] for s in left]
        if rcomp is None:
            if any(len(s) != 1 for s in right):
                raise StructureError("right complement is not unique")
            rcomp = [s[0] for s in right]
        return cls(carrier, plus, tuple(lcomp), tuple(rcomp))

    @property
    def n(self) -> int:
        return self.carrier.size

    @property
    def zero(self) -> int:
        return self.carrier.zero

    @property
    def one(self) -> int:
        return self.carrier.one

    def add(self, x: int, y: int) -> Optional[int]:
        return self.plus[x][y]

    @cached_property
    def order(self) -> OrderRelation:
        return pea_induced_order(self)

    def is_commutative(self) -> bool:
        return all(self.plus[x][y] == self.plus[y][x]
                   for x in range(self.n) for y in range(x + 1, self.n))

    def __eq__(self, other):
        return (isinstance(other, PseudoEffectAlgebra) and self.carrier == other.carrier
                and self.plus == other.plus and self.lcomp == other.lcomp
                and self.rcomp == other.rcomp)

    def __hash__(self):
        return hash((self.carrier, self.plus, self.lcomp, self.rcomp))


def pea_induced_order(P: PseudoEffectAlgebra) -> OrderRelation:
    """Order by right divisibility, checked bounded and equal to left divisibility."""
    order = order_from_sums(P.plus)
    r = order.check_bounded(P.zero, P.one)
    if not r.ok:
        raise StructureError("induced relation is not a bounded order: "
                             + r.format(P.carrier.labels))
    n = P.n
    left = [[False] * n for _ in range(n)]
    for e in range(n):
        for a in range(n):
            b = P.plus[e][a]
            if b is not None:
                left[a][b] = True
    if OrderRelation(left) != order:
        raise StructureError("left and right divisibility orders differ")
    return order


def check_good(P: PseudoEffectAlgebra) -> Report:
    """``tilde(bar x + bar y) = bar(tilde x + tilde y)`` whenever ``tilde x <= y``."""
    r = Report("good")
    r.check("good")
    o, lc, rc = P.order, P.lcomp, P.rcomp
    for x in range(P.n):
        for y in range(P.n):
            if not o.leq(rc[x], y):
                continue
            a = P.plus[lc[x]][lc[y]]
            b = P.plus[rc[x]][rc[y]]
            if a is None or b is None or rc[a] != lc[b]:
                r.fail("good", x=x, y=y)
    return r


def check_pea_monotonous(P: PseudoEffectAlgebra, mode: MonotonicityMode = EXHAUSTIVE,
                         max_size: int = monotone.DEFAULT_MAX_SIZE,
                         pair_budget: int = monotone.DEFAULT_PAIR_BUDGET) -> Report:
    """Both one-sided cone-monotonicity conditions, reported separately.

    ``monotonous-right``: ``A u B <= bar x`` gives ``L(A+x) <= U(B+x)``;
    ``monotonous-left``: ``A u B <= tilde x`` gives ``L(x+A) <= U(x+B)``.
    """
    o = P.order
    right = []
    left = []
    for x in range(P.n):
        dom = o.down[P.lcomp[x]]
        right.append((x, dom, right_shift(P.plus, x, dom)))
        dom = o.down[P.rcomp[x]]
        left.append((x, dom, left_shift(P.plus, x, dom)))
    r = Report("pseudoeffect monotonous")
    monotone.scan(o, right, mode, r, "monotonous-right", max_size, pair_budget)
    monotone.scan(o, left, mode, r, "monotonous-left", max_size, pair_budget)
    return r


def check_pea_basic_lemma(P: PseudoEffectAlgebra) -> Report:
    r = Report("pseudoeffect basic properties")
    r.check(*(f"({c})" for c in ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix")))
    S, lc, rc, o, n = P.plus, P.lcomp, P.rcomp, P.order, P.n
    zero, one = P.zero, P.one
    for a in range(n):
        if lc[rc[a]] != a or rc[lc[a]] != a:
            r.fail("(i)", a=a)
        if S[a][zero] != a or S[zero][a] != a:
            r.fail("(vii)", a=a)
        for b in range(n):
            le = o.leq(a, b)
            if le and not (o.leq(lc[b], lc[a]) and o.leq(rc[b], rc[a])):
                r.fail("(ii)", a=a, b=b)
            if (S[a][b] is not None) != o.leq(a, lc[b]):
                r.fail("(iii)", a=a, b=b)
            right_div = any(S[a][d] == b for d in range(n))
            left_div = any(S[e][a] == b for e in range(n))
            if not (le == right_div == left_div):
                r.fail("(ix)", a=a, b=b)
            if not le:
                continue
            s = S[lc[b]][a]
            v1 = None if s is None else S[a][rc[s]]
            s = S[a][rc[b]]
            v2 = None if s is None else S[lc[s]][a]
            if v1 != b or v2 != b:
                r.fail("(vi)", a=a, b=b)
            for c in range(n):
                bc = S[b][c]
                if bc is not None:
                    ac = S[a][c]
                    if ac is None or not o.leq(ac, bc):
                        r.fail("(iv)", a=a, b=b, c=c)
                cb = S[c][b]
                if cb is not None:
                    ca = S[c][a]
                    if ca is None or not o.leq(ca, cb):
                        r.fail("(v)", a=a, b=b, c=c)
    if not (lc[zero] == rc[zero] == one and lc[one] == rc[one] == zero):
        r.fail("(viii)")
    return r


def embed_commutative(E: EffectAlgebra) -> PseudoEffectAlgebra:
    """An effect algebra as a pseudoeffect algebra with both complements equal to ``'``."""
    return PseudoEffectAlgebra(E.carrier, E.plus, E.comp, E.comp)


def forget_commutative(P: PseudoEffectAlgebra) -> EffectAlgebra:
    if P.lcomp != P.rcomp or not P.is_commutative():
        raise StructureError("pseudoeffect algebra is not commutative")
    return EffectAlgebra(P.carrier, P.plus, P.lcomp)
