"""Cone-monotonicity quantifier engine.

The generic statement checked here, for a family of instances
``(x, domain, shift)``, is

    A, B non-empty subsets of domain, L(A) <= U(B)  ==>  L(shift A) <= U(shift B)

where ``shift`` is order-preserving on ``domain``. Because of that,
``L(A) = L(Min A)``, ``L(shift A) = L(shift Min A)`` and dually for ``U`` and
``Max``, so it is enough to let ``A`` and ``B`` range over antichains.
"""

from __future__ import annotations

import random
from array import array
from dataclasses import dataclass
from typing import Optional, Sequence

from . import kernels
from .bits import iter_bits, members
from .order import OrderRelation
from .report import Report, ThresholdExceeded

DEFAULT_MAX_SIZE = 12
DEFAULT_PAIR_BUDGET = 10**7


@dataclass(frozen=True)
class MonotonicityMode:
    kind: str = "exhaustive"
    trials: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown monotonicity mode {self.kind!r}")
        if self.kind == "sampled" and self.trials < 1:
            raise ValueError("sampled mode needs trials >= 1")

    @classmethod
    def exhaustive(cls) -> "MonotonicityMode":
        return cls("exhaustive")

    @classmethod
    def sampled(cls, trials: int, seed: int = 0) -> "MonotonicityMode":
        return cls("sampled", trials, seed)


EXHAUSTIVE = MonotonicityMode.exhaustive()

# (x, domain mask, shift map with None outside the domain)
Instance = tuple[int, int, Sequence[Optional[int]]]


def shift_image(shift: Sequence[Optional[int]], A: int) -> int:
    out = 0
    for a in iter_bits(A):
        out |= 1 << shift[a]
    return out


def random_antichain(order: OrderRelation, domain: int, rng: random.Random) -> int:
    """Greedy antichain from a random permutation of ``domain``, random target size."""
    elems = members(domain)
    if not elems:
        return 0
    rng.shuffle(elems)
    k = rng.randint(1, len(elems))
    chosen = blocked = 0
    count = 0
    for e in elems:
        if not blocked >> e & 1:
            chosen |= 1 << e
            blocked |= order.down[e] | order.up[e]
            count += 1
            if count == k:
                break
    return chosen


def check_budget(order: OrderRelation, instances: Sequence[Instance],
                 max_size: int = DEFAULT_MAX_SIZE, pair_budget: int = DEFAULT_PAIR_BUDGET) -> int:
    """Number of antichain pairs an exhaustive scan would visit; raises above the limits."""
    if order.n > max_size:
        raise ThresholdExceeded(
            f"carrier of size {order.n} exceeds exhaustive limit {max_size}; use sampled mode")
    total = 0
    for _, dom, _ in instances:
        count = 0
        for _ in order.antichains(dom):
            count += 1
            if total + count * count > pair_budget:
                raise ThresholdExceeded(
                    f"antichain-pair budget {pair_budget} exceeded; use sampled mode")
        total += count * count
    return total


def scan(order: OrderRelation, instances: Sequence[Instance], mode: MonotonicityMode,
         report: Report, tag: str, max_size: int = DEFAULT_MAX_SIZE,
         pair_budget: int = DEFAULT_PAIR_BUDGET) -> Report:
    report.check(tag)
    if mode.kind == "exhaustive":
        pairs = check_budget(order, instances, max_size, pair_budget)
        _exhaustive(order, instances, report, tag)
        report.notes[f"{tag}.mode"] = "exhaustive"
        report.notes[f"{tag}.antichain_pairs"] = pairs
    else:
        _sampled(order, instances, mode, report, tag)
    return report


def _exhaustive(order, instances, report, tag):
    L = order.lower_cone
    U = order.upper_cone
    for x, dom, shift in instances:
        a_side: dict[tuple[int, int], int] = {}
        b_side: dict[tuple[int, int], int] = {}
        for S in order.antichains(dom):
            fS = shift_image(shift, S)
            a_side.setdefault((L(S), L(fS)), S)
            b_side.setdefault((L(U(S)), L(U(fS))), S)
        a_keys = list(a_side)
        b_keys = list(b_side)
        _, i, j = kernels.mono_violation(
            array("Q", [k[0] for k in a_keys]), array("Q", [k[1] for k in a_keys]),
            array("Q", [k[0] for k in b_keys]), array("Q", [k[1] for k in b_keys]))
        if i >= 0:
            A = a_side[a_keys[i]]
            B = b_side[b_keys[j]]
            report.fail(tag, "cone monotonicity fails", x=x,
                        A=frozenset(members(A)), B=frozenset(members(B)))
            return


def _sampled(order, instances, mode, report, tag):
    rng = random.Random(mode.seed)
    hits = 0
    L = order.lower_cone
    U = order.upper_cone
    for _ in range(mode.trials):
        x, dom, shift = instances[rng.randrange(len(instances))]
        A = random_antichain(order, dom, rng)
        B = random_antichain(order, dom, rng)
        if L(A) & ~L(U(B)):
            continue
        hits += 1
        if L(shift_image(shift, A)) & ~L(U(shift_image(shift, B))):
            report.fail(tag, "cone monotonicity fails", x=x,
                        A=frozenset(members(A)), B=frozenset(members(B)))
            break
    report.notes[f"{tag}.mode"] = f"sampled(trials={mode.trials}, seed={mode.seed})"
    report.notes[f"{tag}.hypothesis_hits"] = hits
    if not report.failed(tag):
        report.notes[f"{tag}.verdict"] = "no counterexample found"
