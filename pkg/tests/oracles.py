"""Independent brute-force oracles. Nothing here calls the library's checkers."""

from __future__ import annotations

from itertools import permutations, product


def _sum_closed(t, n):
    for x, y, z in product(range(n), repeat=3):
        s = t[x][y]
        left = None if s is None else t[s][z]
        u = t[y][z]
        right = None if u is None else t[x][u]
        if left != right:
            return False
    return True


def is_effect_algebra(t, n, zero=0, one=None):
    one = n - 1 if one is None else one
    for x in range(n):
        for y in range(n):
            if t[x][y] != t[y][x]:
                return False
    if not _sum_closed(t, n):
        return False
    for x in range(n):
        if sum(1 for u in range(n) if t[x][u] == one) != 1:
            return False
        if x != zero and t[one][x] is not None:
            return False
    return True


def is_pseudoeffect_algebra(t, n, zero=0, one=None):
    one = n - 1 if one is None else one
    for x in range(n):
        for y in range(n):
            s = t[x][y]
            if s is None:
                continue
            if not any(t[u][x] == s for u in range(n)):
                return False
            if not any(t[y][w] == s for w in range(n)):
                return False
    if not _sum_closed(t, n):
        return False
    for x in range(n):
        if sum(1 for u in range(n) if t[u][x] == one) != 1:
            return False
        if sum(1 for w in range(n) if t[x][w] == one) != 1:
            return False
        if x != zero and (t[one][x] is not None or t[x][one] is not None):
            return False
    return True


def canonical_form(t, n):
    """Lexicographically least relabelled table over permutations fixing 0 and n-1."""
    best = None
    for p in permutations(range(1, n - 1)):
        perm = (0, *p, n - 1)
        inv = [0] * n
        for i, v in enumerate(perm):
            inv[v] = i
        form = tuple(
            -1 if t[inv[i]][inv[j]] is None else perm[t[inv[i]][inv[j]]]
            for i in range(n) for j in range(n))
        if best is None or form < best:
            best = form
    return best


def raw_census_order3(kind="effect"):
    """Every 3x3 partial table, no normal form assumed."""
    n = 3
    check = is_effect_algebra if kind == "effect" else is_pseudoeffect_algebra
    forms = set()
    for cells in product([None, 0, 1, 2], repeat=9):
        t = [cells[0:3], cells[3:6], cells[6:9]]
        if check(t, n):
            forms.add(canonical_form(t, n))
    return forms


def naive_census(n, kind="effect"):
    """Canonical forms of all models of order ``n``.

    Rows and columns of 0 and 1 are put in normal form (x+0 = 0+x = x, 1+x
    undefined for x != 0); every other cell ranges over undefined and all
    non-zero elements, with early rejection only on determined associativity
    instances and on a second 1 in a row or column.
    """
    one = n - 1
    t = [[None] * n for _ in range(n)]
    for x in range(n):
        t[0][x] = t[x][0] = x
    commutative = kind == "effect"
    mids = range(1, n - 1)
    if commutative:
        cells = [(x, y) for x in mids for y in mids if x <= y]
    else:
        cells = [(x, y) for x in mids for y in mids]
    unset = object()
    for x, y in cells:
        t[x][y] = unset
        t[y][x] = unset
    values = [None] + list(range(1, n))
    check = is_effect_algebra if commutative else is_pseudoeffect_algebra
    forms = set()

    def ok_partial():
        for x in range(n):
            if sum(1 for u in range(n) if t[x][u] == one) > 1:
                return False
            if sum(1 for u in range(n) if t[u][x] == one) > 1:
                return False
        for x, y, z in product(range(n), repeat=3):
            s = t[x][y]
            if s is unset:
                continue
            left = None if s is None else t[s][z]
            if left is unset:
                continue
            u = t[y][z]
            if u is unset:
                continue
            right = None if u is None else t[x][u]
            if right is unset:
                continue
            if left != right:
                return False
        return True

    def rec(i):
        if i == len(cells):
            if check(t, n):
                forms.add(canonical_form(t, n))
            return
        x, y = cells[i]
        for v in values:
            t[x][y] = v
            if commutative:
                t[y][x] = v
            if ok_partial():
                rec(i + 1)
        t[x][y] = unset
        if commutative:
            t[y][x] = unset

    rec(0)
    return forms


def monotonous_all_subsets(plus, comp, leq, n):
    """Monotonicity quantified over all non-empty subsets, straight from the definition.

    ``L(A) <= U(B)`` is evaluated by materialising both cones.
    """
    def lower(S):
        return [z for z in range(n) if all(leq[z][s] for s in S)]

    def upper(S):
        return [z for z in range(n) if all(leq[s][z] for s in S)]

    def below(X, Y):
        return all(leq[a][b] for a in X for b in Y)

    for x in range(n):
        dom = [a for a in range(n) if leq[a][comp[x]]]
        subsets = []
        for bits in range(1, 1 << len(dom)):
            S = [dom[i] for i in range(len(dom)) if bits >> i & 1]
            xS = [plus[x][a] for a in S]
            subsets.append((lower(S), upper(S), lower(xS), upper(xS)))
        hyp_a = {}
        for LA, _, LxA, _ in subsets:
            hyp_a[tuple(LA)] = hyp_a.get(tuple(LA), set()) | {tuple(LxA)}
        for _, UB, _, UxB in subsets:
            for LA, lxas in hyp_a.items():
                if below(LA, UB):
                    for LxA in lxas:
                        if not below(LxA, UxB):
                            return False
    return True
