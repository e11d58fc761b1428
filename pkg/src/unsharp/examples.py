"""Built-in structures: the nine-element table example and the even-subset example."""

from __future__ import annotations

from itertools import combinations

from .effect import EffectAlgebra
from .order import Carrier

EX1_LABELS = ("0", "a", "b", "c", "d", "e", "f", "g", "1")

# Rows of the + table in carrier order; "-" marks an undefined sum.
EX1_PLUS = """
0 a b c d e f g 1
a - e f - - - 1 -
b e d g f - 1 - -
c f g - - 1 - - -
d - f - 1 - - - -
e - - 1 - - - - -
f - 1 - - - - - -
g 1 - - - - - - -
1 - - - - - - - -
"""

EX1_COMP = {"0": "1", "a": "g", "b": "f", "c": "e", "d": "d",
            "e": "c", "f": "b", "g": "a", "1": "0"}


def ex1() -> EffectAlgebra:
    carrier = Carrier(EX1_LABELS, 0, 8)
    idx = {s: i for i, s in enumerate(EX1_LABELS)}
    rows = [line.split() for line in EX1_PLUS.strip().splitlines()]
    plus = [[None if s == "-" else idx[s] for s in row] for row in rows]
    comp = [idx[EX1_COMP[s]] for s in EX1_LABELS]
    return EffectAlgebra.build(carrier, plus, comp)


def ex2_sets() -> list[frozenset[int]]:
    """Even-cardinality subsets of {1..6}: empty set first, full set last."""
    out = []
    for k in (0, 2, 4, 6):
        out.extend(frozenset(c) for c in combinations(range(1, 7), k))
    return out


def set_label(s: frozenset[int]) -> str:
    return "e" + ("".join(str(i) for i in sorted(s)) or "0")


def ex2() -> EffectAlgebra:
    sets = ex2_sets()
    idx = {s: i for i, s in enumerate(sets)}
    top = frozenset(range(1, 7))
    plus = [[idx[a | b] if not a & b else None for b in sets] for a in sets]
    comp = [idx[top - a] for a in sets]
    carrier = Carrier(tuple(set_label(s) for s in sets), 0, len(sets) - 1)
    return EffectAlgebra.build(carrier, plus, comp)


BUILTINS = {"ex1": ex1, "ex2": ex2}
