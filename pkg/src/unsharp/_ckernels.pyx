# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; contracts documented in ``_kernels_py``."""

cdef enum:
    UNDEF = -1
    UNSET = -2


def assoc_violation(const long long[:] t, Py_ssize_t n):
    cdef Py_ssize_t x, y, z
    cdef long long s, u, left, right
    for x in range(n):
        for y in range(n):
            s = t[x * n + y]
            for z in range(n):
                left = -1 if s < 0 else t[s * n + z]
                u = t[y * n + z]
                right = -1 if u < 0 else t[x * n + u]
                if left != right:
                    return (x, y, z)
    return None


def mono_violation(const unsigned long long[:] la, const unsigned long long[:] lxa,
                   const unsigned long long[:] lub, const unsigned long long[:] luxb):
    cdef Py_ssize_t i, j, na = la.shape[0], nb = lub.shape[0]
    cdef long long hits = 0
    cdef unsigned long long a, xa
    for i in range(na):
        a = la[i]
        xa = lxa[i]
        for j in range(nb):
            if a & ~lub[j] == 0:
                hits += 1
                if xa & ~luxb[j] != 0:
                    return hits, i, j
    return hits, -1, -1


cdef inline bint _triple_conflict(const long long[:] t, Py_ssize_t n,
                                  long long a, long long b, long long c) noexcept:
    cdef long long s, u, left, right
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


def touching_conflict(const long long[:] t, Py_ssize_t n, long long p, long long q):
    cdef Py_ssize_t a, b, c
    cdef long long v
    for c in range(n):
        if _triple_conflict(t, n, p, q, c):
            return True
    for a in range(n):
        if _triple_conflict(t, n, a, p, q):
            return True
    for a in range(n):
        for b in range(n):
            v = t[a * n + b]
            if v == p and _triple_conflict(t, n, a, b, q):
                return True
            if v == q and _triple_conflict(t, n, p, a, b):
                return True
    return False


def canon_smaller(const long long[:] t, Py_ssize_t n, const long long[:] perms, Py_ssize_t nperm):
    cdef Py_ssize_t k, cell, i, j, base, nn = n * n
    cdef long long mine, src, theirs
    for k in range(nperm):
        base = 2 * n * k
        for cell in range(nn):
            i = cell // n
            j = cell % n
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
