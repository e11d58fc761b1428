"""Effect algebras ``(E, +, ', 0, 1)`` on finite carriers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from . import kernels, monotone
from .bits import iter_bits, members
from .monotone import EXHAUSTIVE, MonotonicityMode
from .order import Carrier, OrderRelation
from .report import Report, StructureError
from .tables import PartialTable, flat, normalize


def supplements(plus: PartialTable, one: int) -> list[list[int]]:
    """For each x, every u with x + u = 1."""
    return [[u for u, v in enumerate(row) if v == one] for row in plus]


def check_effect_axioms(carrier: Carrier, plus, comp: Sequence[int] | None = None) -> Report:
    """(E1) through (E4); ``comp``, when given, is cross-checked against (E3)."""
    n = carrier.size
    plus = normalize(plus, n, "plus")
    zero, one = carrier.zero, carrier.one
    r = Report("effect algebra axioms")
    r.check("E1", "E2", "E3", "E4")
    for x in range(n):
        for y in range(x, n):
            if plus[x][y] != plus[y][x]:
                r.fail("E1", "x+y and y+x differ", x=x, y=y)
    t = flat(plus)
    bad = kernels.assoc_violation(t, n)
    if bad is not None:
        x, y, z = bad
        r.fail("E2", "(x+y)+z and x+(y+z) differ", x=x, y=y, z=z)
    for x, sups in enumerate(supplements(plus, one)):
        if len(sups) != 1:
            r.fail("E3", f"{len(sups)} supplements", x=x, supplements=frozenset(sups))
        elif comp is not None and comp[x] != sups[0]:
            r.fail("E3", "stored supplement disagrees with +", x=x, stored=comp[x], derived=sups[0])
    for x in range(n):
        if x != zero and plus[one][x] is not None:
            r.fail("E4", "1+x defined for x != 0", x=x)
    return r


def order_from_sums(plus: PartialTable) -> OrderRelation:
    n = len(plus)
    leq = [[False] * n for _ in range(n)]
    for x in range(n):
        for y in plus[x]:
            if y is not None:
                leq[x][y] = True
    return OrderRelation(leq)


@dataclass(frozen=True, eq=False)
class EffectAlgebra:
    carrier: Carrier
    plus: PartialTable
    comp: tuple[int, ...]

    @classmethod
    def build(cls, carrier: Carrier, plus, comp: Sequence[int] | None = None,
              check: bool = True) -> "EffectAlgebra":
        """Normalise tables, derive ``'`` from ``+`` and (optionally) verify (E1)-(E4)."""
        n = carrier.size
        plus = normalize(plus, n, "plus")
        if check:
            r = check_effect_axioms(carrier, plus, comp)
            if not r.ok:
                raise StructureError(r.format(carrier.labels))
        if comp is None:
            sups = supplements(plus, carrier.one)
            if any(len(s) != 1 for s in sups):
                raise StructureError("supplement is not unique")
            comp = [s[0] for s in sups]
        return cls(carrier, plus, tuple(comp))

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
        return induced_order(self)

    def __eq__(self, other):
        return (isinstance(other, EffectAlgebra) and self.carrier == other.carrier
                and self.plus == other.plus and self.comp == other.comp)

    def __hash__(self):
        return hash((self.carrier, self.plus, self.comp))


def induced_order(E: EffectAlgebra) -> OrderRelation:
    """``x <= y`` iff ``x + z = y`` for some z; verified to be a bounded order."""
    order = order_from_sums(E.plus)
    r = order.check_bounded(E.zero, E.one)
    if not r.ok:
        raise StructureError("induced relation is not a bounded order: "
                             + r.format(E.carrier.labels))
    return order


def check_basic_lemma(E: EffectAlgebra) -> Report:
    """The seven standard consequences of the axioms, over all tuples."""
    r = Report("effect algebra basic properties")
    r.check(*(f"({c})" for c in ("i", "ii", "iii", "iv", "v", "vi", "vii")))
    P, c, n, o = E.plus, E.comp, E.n, E.order
    for a in range(n):
        if c[c[a]] != a:
            r.fail("(i)", a=a)
        if P[a][E.zero] != a or P[E.zero][a] != a:
            r.fail("(vi)", a=a)
        for b in range(n):
            le = o.leq(a, b)
            if le and not o.leq(c[b], c[a]):
                r.fail("(ii)", a=a, b=b)
            if (P[a][b] is not None) != o.leq(a, c[b]):
                r.fail("(iii)", a=a, b=b)
            if le:
                s = P[a][c[b]]
                v = None if s is None else P[a][c[s]]
                if v != b:
                    r.fail("(v)", "a+(a+b')' != b", a=a, b=b)
                for cc in range(n):
                    bc = P[b][cc]
                    if bc is None:
                        continue
                    ac = P[a][cc]
                    if ac is None or not o.leq(ac, bc):
                        r.fail("(iv)", a=a, b=b, c=cc)
    if c[E.zero] != E.one or c[E.one] != E.zero:
        r.fail("(vii)", zero_comp=c[E.zero], one_comp=c[E.one])
    return r


def left_shift(plus: PartialTable, x: int, domain: int) -> list[Optional[int]]:
    """Map ``a -> x + a`` on ``domain``."""
    shift: list[Optional[int]] = [None] * len(plus)
    for a in iter_bits(domain):
        shift[a] = plus[x][a]
    return shift


def right_shift(plus: PartialTable, x: int, domain: int) -> list[Optional[int]]:
    """Map ``a -> a + x`` on ``domain``."""
    shift: list[Optional[int]] = [None] * len(plus)
    for a in iter_bits(domain):
        shift[a] = plus[a][x]
    return shift


def monotonicity_instances(E: EffectAlgebra):
    o = E.order
    out = []
    for x in range(E.n):
        dom = o.down[E.comp[x]]
        out.append((x, dom, left_shift(E.plus, x, dom)))
    return out


def check_monotonous(E: EffectAlgebra, mode: MonotonicityMode = EXHAUSTIVE,
                     max_size: int = monotone.DEFAULT_MAX_SIZE,
                     pair_budget: int = monotone.DEFAULT_PAIR_BUDGET) -> Report:
    """``A u B <= x'`` and ``L(A) <= U(B)`` imply ``L(x+A) <= U(x+B)``.

    Exhaustive mode quantifies over antichain pairs and raises
    :class:`ThresholdExceeded` above the size limits; sampled mode only
    reports "no counterexample found".
    """
    r = Report("monotonous")
    return monotone.scan(E.order, monotonicity_instances(E), mode, r, "monotonous",
                         max_size, pair_budget)


def odot_map(E: EffectAlgebra, a: int, domain: int) -> list[Optional[int]]:
    """Map ``x -> (a' + x')'`` on ``domain`` (elements above ``a'``)."""
    c = E.comp
    shift: list[Optional[int]] = [None] * E.n
    for x in iter_bits(domain):
        s = E.plus[c[a]][c[x]]
        if s is None:
            raise StructureError(f"a'+x' undefined for a={a}, x={x}")
        shift[x] = c[s]
    return shift


def check_dual_monotonicity(E: EffectAlgebra, mode: MonotonicityMode = EXHAUSTIVE,
                            max_size: int = monotone.DEFAULT_MAX_SIZE,
                            pair_budget: int = monotone.DEFAULT_PAIR_BUDGET) -> Report:
    """``a' <= A u B`` and ``L(A) <= U(B)`` imply ``L(a.A) <= U(a.B)``."""
    o = E.order
    instances = []
    for a in range(E.n):
        dom = o.up[E.comp[a]]
        instances.append((a, dom, odot_map(E, a, dom)))
    r = Report("dual monotonicity")
    return monotone.scan(o, instances, mode, r, "dual-monotonous", max_size, pair_budget)


def _sums(plus: PartialTable, Z: int, U: int) -> int:
    out = 0
    for z in iter_bits(Z):
        row = plus[z]
        for u in iter_bits(U):
            v = row[u]
            if v is not None:
                out |= 1 << v
    return out


def check_decomposition_sufficiency(E: EffectAlgebra,
                                    max_size: int = monotone.DEFAULT_MAX_SIZE,
                                    pair_budget: int = monotone.DEFAULT_PAIR_BUDGET) -> Report:
    """The two decomposition conditions that together imply monotonicity.

    For every y and antichain A below y': each x in L(y+A) is z+u with
    z in L(y), u in L(A); each x in U(y+A) is z+u with z in U(y), u in U(A).
    Antichains suffice because both sides only see Min A (resp. Max A).
    When both hold, monotonicity is re-checked and a disagreement is
    reported under the "lemma" tag.
    """
    o = E.order
    instances = monotonicity_instances(E)
    monotone.check_budget(o, instances, max_size, pair_budget)
    r = Report("decomposition sufficiency")
    r.check("decomposition-L", "decomposition-U")
    L, U = o.lower_cone, o.upper_cone
    for y, dom, shift in instances:
        seen_l: dict[tuple[int, int], bool] = {}
        seen_u: dict[tuple[int, int], bool] = {}
        for A in o.antichains(dom):
            yA = monotone.shift_image(shift, A)
            key = (L(yA), L(A))
            if key not in seen_l:
                missing = key[0] & ~_sums(E.plus, o.down[y], key[1])
                seen_l[key] = not missing
                if missing:
                    r.fail("decomposition-L", "no z in L(y), u in L(A) with z+u=x",
                           y=y, A=frozenset(members(A)), x=members(missing)[0])
            key = (U(yA), U(A))
            if key not in seen_u:
                missing = key[0] & ~_sums(E.plus, o.up[y], key[1])
                seen_u[key] = not missing
                if missing:
                    r.fail("decomposition-U", "no z in U(y), u in U(A) with z+u=x",
                           y=y, A=frozenset(members(A)), x=members(missing)[0])
    if r.ok:
        r.check("lemma")
        mono = check_monotonous(E, EXHAUSTIVE, max_size, pair_budget)
        if not mono.ok:
            f = mono.failures["monotonous"]
            r.fail("lemma", "decomposition holds but monotonicity fails", **f.witness)
    return r


def is_lattice_ordered(E: EffectAlgebra) -> Report:
    return E.order.is_lattice()
