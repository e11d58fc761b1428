"""Isomorphism-free enumeration of small effect and pseudoeffect algebras.

Elements are ``0``, the middle elements ``1..n-2`` and the top ``n-1``.
The complement is fixed first in a canonical cycle form (up to relabelling
every structure has one), which leaves the centraliser of the complement as
the group of relabellings still to factor out. Cells are filled row-major
with associativity checked on every fully determined instance, and a partial
table is abandoned as soon as some relabelling makes its determined prefix
lexicographically smaller. Leaves are canonical exactly when no relabelling
gives a smaller table.
"""

from __future__ import annotations

import random
import time
from array import array
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterator, Optional, Sequence

from . import kernels
from .effect import EffectAlgebra, check_monotonous
from .order import Carrier
from .pseudo import PseudoEffectAlgebra, check_good, check_pea_monotonous, embed_commutative
from .report import StructureError

UNDEF = -1
UNSET = -2

KINDS = ("effect", "pea")
PREDICATES = ("monotonous", "good", "lattice_ordered", "commutative")
MAX_ORDER = {"effect": 9, "pea": 9}


class BudgetExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchSpec:
    order: int
    kind: str = "effect"
    predicates: tuple[str, ...] = ()
    node_budget: Optional[int] = None
    time_budget: Optional[float] = None
    max_order: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        if self.order < 2:
            raise ValueError("order must be at least 2")
        limit = self.max_order if self.max_order is not None else MAX_ORDER[self.kind]
        if self.order > limit:
            raise ValueError(f"order {self.order} exceeds the {self.kind} limit {limit}")
        unknown = set(self.predicates) - set(PREDICATES)
        if unknown:
            raise ValueError(f"unknown predicates {sorted(unknown)}")


@dataclass
class CensusRow:
    order: int
    kind: str
    total: int = 0
    counts: dict[tuple[tuple[str, bool], ...], int] = field(default_factory=dict)
    representatives: list = field(default_factory=list)
    complete: bool = True
    nodes: int = 0


def carrier(n: int) -> Carrier:
    if n == 1:
        return Carrier(("0",), 0, 0)
    mids = [chr(ord("a") + i) for i in range(n - 2)] if n - 2 <= 26 else \
        [f"x{i}" for i in range(1, n - 1)]
    return Carrier(("0", *mids, "1"), 0, n - 1)


def partitions(m: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    if largest is None:
        largest = m
    if m == 0:
        yield ()
        return
    for k in range(min(m, largest), 0, -1):
        for rest in partitions(m - k, k):
            yield (k,) + rest


def complement_shapes(n: int, kind: str) -> list[tuple[int, ...]]:
    """Canonical complement maps (as the map ``x -> u`` with ``u + x = 1``)."""
    m = n - 2
    shapes = []
    if kind == "effect":
        cycle_types = [(2,) * k + (1,) * (m - 2 * k) for k in range(m // 2 + 1)]
    else:
        cycle_types = list(partitions(m))
    for ct in cycle_types:
        comp = list(range(n))
        comp[0], comp[n - 1] = n - 1, 0
        start = 1
        for length in ct:
            for i in range(length):
                comp[start + i] = start + (i + 1) % length
            start += length
        shapes.append(tuple(comp))
    return shapes


def centraliser(comp: Sequence[int]) -> list[tuple[int, ...]]:
    """Relabellings fixing 0 and 1 that commute with ``comp``."""
    n = len(comp)
    out = []
    for p in permutations(range(1, n - 1)):
        perm = (0, *p, n - 1)
        if all(perm[comp[x]] == comp[perm[x]] for x in range(n)):
            out.append(perm)
    return out


def _perm_block(perms: Sequence[Sequence[int]]) -> array:
    flatp = array("q")
    for p in perms:
        inv = [0] * len(p)
        for i, v in enumerate(p):
            inv[v] = i
        flatp.extend(p)
        flatp.extend(inv)
    return flatp


def _initial_table(n: int, lcomp: Sequence[int]) -> array:
    t = array("q", [UNSET] * (n * n))
    top = n - 1
    for x in range(n):
        t[x] = x
        t[x * n] = x
        if x:
            t[top * n + x] = UNDEF
            t[x * n + top] = UNDEF
    t[top] = top
    t[top * n] = top
    for x in range(1, n - 1):
        t[lcomp[x] * n + x] = top
    return t


def _cells(n: int, t: array, commutative: bool) -> list[tuple[int, int]]:
    out = []
    for x in range(1, n - 1):
        for y in range(x if commutative else 1, n - 1):
            if t[x * n + y] == UNSET:
                out.append((x, y))
    return out


class _Search:
    def __init__(self, n, kind, lcomp, canonical=True, rng=None, budget=None):
        self.n = n
        self.kind = kind
        self.commutative = kind == "effect"
        self.lcomp = lcomp
        self.t = _initial_table(n, lcomp)
        self.cells = _cells(n, self.t, self.commutative)
        self.rng = rng
        self.budget = budget
        if canonical:
            perms = [p for p in centraliser(lcomp) if p != tuple(range(n))]
            self.perms = _perm_block(perms)
            self.nperm = len(perms)
        else:
            self.perms = array("q")
            self.nperm = 0
        # canonicity is re-tested on entering a new row
        self.row_start = {i for i in range(1, len(self.cells))
                          if self.cells[i][0] != self.cells[i - 1][0]}

    def values(self):
        vals = [UNDEF] + list(range(1, self.n - 1))
        if self.rng is not None:
            self.rng.shuffle(vals)
        return vals

    def run(self) -> Iterator[tuple[int, ...]]:
        n, t, cells = self.n, self.t, self.cells
        k = len(cells)
        if k == 0:
            if (self.nperm == 0 or kernels.canon_smaller(t, n, self.perms, self.nperm) < 0) \
                    and kernels.assoc_violation(t, n) is None:
                yield tuple(t)
            return
        stack = [self.values()]
        depth = 0
        while depth >= 0:
            x, y = cells[depth]
            options = stack[depth]
            if not options:
                t[x * n + y] = UNSET
                if self.commutative:
                    t[y * n + x] = UNSET
                stack.pop()
                depth -= 1
                continue
            v = options.pop(0)
            t[x * n + y] = v
            if self.commutative:
                t[y * n + x] = v
            if self.budget is not None:
                self.budget.tick()
            if kernels.touching_conflict(t, n, x, y) or (
                    self.commutative and x != y and kernels.touching_conflict(t, n, y, x)):
                continue
            nxt = depth + 1
            if nxt == k:
                if self.nperm == 0 or kernels.canon_smaller(t, n, self.perms, self.nperm) < 0:
                    yield tuple(t)
                continue
            if nxt in self.row_start and self.nperm and \
                    kernels.canon_smaller(t, n, self.perms, self.nperm) >= 0:
                continue
            stack.append(self.values())
            depth = nxt


class _Budget:
    def __init__(self, nodes=None, seconds=None):
        self.nodes = 0
        self.max_nodes = nodes
        self.deadline = None if seconds is None else time.monotonic() + seconds

    def tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExhausted(f"node budget {self.max_nodes} exhausted")
        if self.deadline is not None and self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            raise BudgetExhausted("time budget exhausted")


def _to_structure(n: int, kind: str, flat_table: Sequence[int]):
    rows = [[None if v < 0 else v for v in flat_table[i * n:(i + 1) * n]] for i in range(n)]
    c = carrier(n)
    if kind == "effect":
        return EffectAlgebra.build(c, rows)
    return PseudoEffectAlgebra.build(c, rows)


def structures(n: int, kind: str = "effect", budget: Optional[_Budget] = None) -> Iterator:
    """All structures of order ``n`` up to isomorphism, in a fixed canonical order."""
    if n == 2:
        shapes = [(1, 0)]
    else:
        shapes = complement_shapes(n, kind)
    for lcomp in shapes:
        search = _Search(n, kind, lcomp, budget=budget)
        for flat_table in search.run():
            try:
                S = _to_structure(n, kind, flat_table)
            except StructureError:
                continue
            yield S


def predicate_values(S, names: Sequence[str]) -> tuple[tuple[str, bool], ...]:
    out = []
    for name in names:
        if name == "monotonous":
            if isinstance(S, EffectAlgebra):
                v = check_monotonous(S).ok
            else:
                v = check_pea_monotonous(S).ok
        elif name == "good":
            P = embed_commutative(S) if isinstance(S, EffectAlgebra) else S
            v = check_good(P).ok
        elif name == "lattice_ordered":
            v = S.order.is_lattice().ok
        elif name == "commutative":
            v = isinstance(S, EffectAlgebra) or S.is_commutative()
        else:
            raise ValueError(name)
        out.append((name, v))
    return tuple(out)


def enumerate_structures(spec: SearchSpec) -> CensusRow:
    """Census of one order and kind; a budget overrun yields ``complete=False``."""
    row = CensusRow(spec.order, spec.kind)
    budget = _Budget(spec.node_budget, spec.time_budget)
    try:
        for S in structures(spec.order, spec.kind, budget):
            row.total += 1
            key = predicate_values(S, spec.predicates)
            row.counts[key] = row.counts.get(key, 0) + 1
            row.representatives.append(S)
    except BudgetExhausted:
        row.complete = False
    row.nodes = budget.nodes
    return row


def find_witness(spec: SearchSpec, profile: dict[str, bool], min_order: int = 2):
    """First structure (smallest order, then canonical order) matching ``profile``.

    Orders ``min_order..spec.order`` are searched. Raises
    :class:`BudgetExhausted` when the budget runs out before an answer.
    """
    names = tuple(profile)
    budget = _Budget(spec.node_budget, spec.time_budget)
    for n in range(min_order, spec.order + 1):
        for S in structures(n, spec.kind, budget):
            if dict(predicate_values(S, names)) == profile:
                return S
    return None


def random_structure(n: int, kind: str = "effect", rng: Optional[random.Random] = None,
                     node_budget: int = 10**6):
    """A random (not canonical) model of order ``n`` from a shuffled search."""
    rng = rng or random.Random()
    shapes = complement_shapes(n, kind) if n > 2 else [(1, 0)]
    rng.shuffle(shapes)
    for lcomp in shapes:
        search = _Search(n, kind, lcomp, canonical=False, rng=rng, budget=_Budget(node_budget))
        try:
            for flat_table in search.run():
                try:
                    S = _to_structure(n, kind, flat_table)
                except StructureError:
                    continue
                return S
        except BudgetExhausted:
            continue
    return None
