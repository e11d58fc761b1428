"""Pure-Python kernels. Same contracts as the compiled ``_ckernels`` module.

Tables are flat ``array('q')`` of length ``n*n``; ``-1`` marks an undefined
cell and ``-2`` (enumeration only) an unassigned one. Masks are ``array('Q')``.
"""

UNDEF = -1
UNSET = -2


def assoc_violation(t, n):
    """First ``(x, y, z)`` where ``(x+y)+z`` and ``x+(y+z)`` differ (Kleene), else None."""
    for x in range(n):
        row = x * n
        for y in range(n):
            s = t[row + y]
            for z in range(n):
                left = -1 if s < 0 else t[s * n + z]
                u = t[y * n + z]
                right = -1 if u < 0 else t[row + u]
                if left != right:
                    return (x, y, z)
    return None


def mono_violation(la, lxa, lub, luxb):
    """Scan antichain pairs for a broken cone-monotonicity implication.

    Pair ``(i, j)`` satisfies the hypothesis when ``la[i]`` lies inside
    ``lub[j]`` and the conclusion when ``lxa[i]`` lies inside ``luxb[j]``.
    Returns ``(hypothesis_pairs, i, j)`` with ``i = j = -1`` when no pair breaks.
    """
    hits = 0
    nb = len(lub)
    for i in range(len(la)):
        a = la[i]
        xa = lxa[i]
        for j in range(nb):
            if a & ~lub[j] == 0:
                hits += 1
                if xa & ~luxb[j] != 0:
                    return hits, i, j
    return hits, -1, -1


def _triple_conflict(t, n, a, b, c):
    s = t[a * n + b]
    if s == UNSET:
        return False
    if s == UNDEF:
        left = UNDEF
    else:
        left = t[s * n + c]
        if left == UNSET:
            return False
    u = t[b * n + c]
    if u == UNSET:
        return False
    if u == UNDEF:
        right = UNDEF
    else:
        right = t[a * n + u]
        if right == UNSET:
            return False
    return left != right


def touching_conflict(t, n, p, q):
    """True if some fully determined associativity instance using cell ``(p, q)`` fails."""
    for c in range(n):
        if _triple_conflict(t, n, p, q, c):
            return True
    for a in range(n):
        if _triple_conflict(t, n, a, p, q):
            return True
    for a in range(n):
        row = a * n
        for b in range(n):
            if t[row + b] == p and _triple_conflict(t, n, a, b, q):
                return True
            if t[row + b] == q and _triple_conflict(t, n, p, a, b):
                return True
    return False


def canon_smaller(t, n, perms, nperm):
    """Index of a relabelling that makes the (partial) table lexicographically smaller.

    ``perms`` holds ``nperm`` permutations back to back, each followed by its
    inverse (``2*n`` entries per permutation). Comparison runs row-major and
    stops, inconclusive, at the first unassigned cell. Returns -1 if none.
    """
    nn = n * n
    for k in range(nperm):
        base = 2 * n * k
        for cell in range(nn):
            i, j = divmod(cell, n)
            mine = t[cell]
            if mine == UNSET:
                break
            src = t[perms[base + n + i] * n + perms[base + n + j]]
            if src == UNSET:
                break
            theirs = src if src < 0 else perms[base + src]
            if theirs != mine:
                if theirs < mine:
                    return k
                break
    return -1
