"""Constructions between effect-type algebras and unsharp residuated posets.

Constructions are total on verified inputs. With ``check=True`` the
structure a construction is supposed to produce is re-verified, and any
failure is raised as :class:`TheoremViolation` rather than as an ordinary
axiom failure.
"""

from __future__ import annotations

from dataclasses import fields
from typing import Optional

from .bits import iter_bits
from .order import OrderRelation
from .effect import EffectAlgebra, check_effect_axioms, order_from_sums
from .pseudo import PseudoEffectAlgebra, check_good, check_pea_axioms
from .report import Report, StructureError, TheoremViolation
from .residuation import (CommUnsharpResiduatedPoset, UnsharpResiduatedPoset, check_curp,
                          check_curp_divisible, check_urp, check_urp_divisible)


def _sum_set(plus, left: Optional[int], A: int, right: Optional[int] = None) -> int:
    """``left + A`` when ``left`` is given, else ``A + right``."""
    out = 0
    for u in iter_bits(A):
        v = plus[left][u] if left is not None else plus[u][right]
        if v is None:
            raise StructureError("sum needed by the construction is undefined")
        out |= 1 << v
    return out


def ea_to_curp(E: EffectAlgebra, check: bool = False,
               assumption: str = "unverified") -> CommUnsharpResiduatedPoset:
    """``x.y = (x'+y')'`` when ``x' <= y``; ``x -> y = x' + L(x, y)``.

    ``assumption`` records how monotonicity of ``E`` was established and is
    attached to the report of a failed post-check.
    """
    o, c, P, n = E.order, E.comp, E.plus, E.n
    odot = tuple(tuple(c[P[c[x]][c[y]]] if o.leq(c[x], y) else None for y in range(n))
                 for x in range(n))
    arrow = tuple(tuple(_sum_set(P, c[x], o.down[x] & o.down[y]) for y in range(n))
                  for x in range(n))
    S = CommUnsharpResiduatedPoset(E.carrier, o, c, odot, arrow)
    if check:
        r = check_curp(S).merge(check_curp_divisible(S))
        r.notes["monotonicity"] = assumption
        if not r.ok:
            raise TheoremViolation(r)
    return S


def curp_to_ea(C: CommUnsharpResiduatedPoset, check: bool = False) -> EffectAlgebra:
    """``x + y = (x'.y')'`` when ``x <= y'``."""
    o, c, n = C.order, C.comp, C.n
    plus = []
    for x in range(n):
        row = []
        for y in range(n):
            if o.leq(x, c[y]):
                v = C.odot[c[x]][c[y]]
                if v is None:
                    raise StructureError(f"odot undefined at ({c[x]},{c[y]})")
                row.append(c[v])
            else:
                row.append(None)
        plus.append(tuple(row))
    E = EffectAlgebra(C.carrier, tuple(plus), c)
    if check:
        r = check_effect_axioms(E.carrier, E.plus, E.comp)
        r.check("induced-order")
        if r.ok and order_from_sums(E.plus) != o:
            r.fail("induced-order", "induced order differs from the poset order")
        if not r.ok:
            raise TheoremViolation(r)
    return E


def pea_to_urp(P: PseudoEffectAlgebra, check: bool = False,
               assumption: str = "unverified") -> UnsharpResiduatedPoset:
    """``x.y = tilde(bar x + bar y)`` when ``tilde x <= y``;
    ``x -> y = bar x + L(x, y)``; ``x ~> y = L(x, y) + tilde x``."""
    o, lc, rc, S, n = P.order, P.lcomp, P.rcomp, P.plus, P.n
    odot = tuple(tuple(rc[S[lc[x]][lc[y]]] if o.leq(rc[x], y) else None for y in range(n))
                 for x in range(n))
    arrow = tuple(tuple(_sum_set(S, lc[x], o.down[x] & o.down[y]) for y in range(n))
                  for x in range(n))
    squiggle = tuple(tuple(_sum_set(S, None, o.down[x] & o.down[y], rc[x]) for y in range(n))
                     for x in range(n))
    R = UnsharpResiduatedPoset(P.carrier, o, lc, rc, odot, arrow, squiggle)
    if check:
        r = check_urp(R).merge(check_urp_divisible(R))
        r.notes["hypotheses"] = assumption
        if not r.ok:
            raise TheoremViolation(r)
    return R


def urp_to_pea(R: UnsharpResiduatedPoset, check: bool = False) -> PseudoEffectAlgebra:
    """``x + y = tilde(bar x . bar y)`` when ``x <= bar y``."""
    o, lc, rc, n = R.order, R.lcomp, R.rcomp, R.n
    plus = []
    for x in range(n):
        row = []
        for y in range(n):
            if o.leq(x, lc[y]):
                v = R.odot[lc[x]][lc[y]]
                if v is None:
                    raise StructureError(f"odot undefined at ({lc[x]},{lc[y]})")
                row.append(rc[v])
            else:
                row.append(None)
        plus.append(tuple(row))
    P = PseudoEffectAlgebra(R.carrier, tuple(plus), lc, rc)
    if check:
        r = check_pea_axioms(P.carrier, P.plus, P.lcomp, P.rcomp)
        r.check("induced-order")
        if r.ok:
            if order_from_sums(P.plus) != o:
                r.fail("induced-order", "induced order differs from the poset order")
            else:
                r.merge(check_good(P))
        if not r.ok:
            raise TheoremViolation(r)
    return P


def _first_difference(X, Y) -> Optional[dict]:
    for f in fields(X):
        a, b = getattr(X, f.name), getattr(Y, f.name)
        if a == b:
            continue
        if isinstance(a, tuple) and isinstance(b, tuple) and len(a) == len(b):
            for i, (u, v) in enumerate(zip(a, b)):
                if u == v:
                    continue
                if isinstance(u, tuple) and isinstance(v, tuple):
                    j = next(k for k in range(min(len(u), len(v))) if u[k] != v[k])
                    return {"field": f.name, "cell": (i, j), "left": u[j], "right": v[j]}
                return {"field": f.name, "cell": i, "left": u, "right": v}
        return {"field": f.name}
    return None


def roundtrip_ea(E: EffectAlgebra) -> Report:
    """Literal equality of ``E`` and the effect algebra rebuilt from its residuated poset."""
    r = Report("effect round trip")
    r.check("roundtrip")
    back = curp_to_ea(ea_to_curp(E))
    diff = _first_difference(E, back)
    if diff is not None:
        r.fail("roundtrip", "rebuilt structure differs", **diff)
    return r


def roundtrip_pea(P: PseudoEffectAlgebra) -> Report:
    r = Report("pseudoeffect round trip")
    r.check("roundtrip")
    back = urp_to_pea(pea_to_urp(P))
    diff = _first_difference(P, back)
    if diff is not None:
        r.fail("roundtrip", "rebuilt structure differs", **diff)
    return r


def first_difference(X, Y) -> Optional[dict]:
    if type(X) is not type(Y):
        raise TypeError(f"cannot compare {type(X).__name__} with {type(Y).__name__}")
    return _first_difference(X, Y)


def structures_equal(X, Y) -> bool:
    """Cellwise equality of two structures of the same kind."""
    return first_difference(X, Y) is None


# -- isomorphism ------------------------------------------------------------

def _signature(X):
    """Unary maps, partial tables, set tables and the order of a structure."""
    unary, binary, sets = [], [], []
    for f in fields(X):
        v = getattr(X, f.name)
        if f.name in ("comp", "lcomp", "rcomp"):
            unary.append(v)
        elif f.name in ("plus", "odot"):
            binary.append(v)
        elif f.name in ("arrow", "squiggle"):
            sets.append(v)
    order = getattr(X, "order")
    return unary, binary, sets, order


def _invariant(unary, binary, order, x):
    inv = [order.down[x].bit_count(), order.up[x].bit_count()]
    for m in unary:
        inv.append(m[x] == x)
    for t in binary:
        inv.append(sum(v is not None for v in t[x]))
        inv.append(sum(row[x] is not None for row in t))
        inv.append(t[x][x] is None)
    return tuple(inv)


def _map_set(phi, m: int) -> int:
    out = 0
    for a in iter_bits(m):
        out |= 1 << phi[a]
    return out


def find_isomorphism(X, Y) -> Optional[tuple[int, ...]]:
    """A bijection ``X -> Y`` fixing 0 and 1 and preserving every operation, or None."""
    if type(X) is not type(Y):
        raise TypeError(f"cannot compare {type(X).__name__} with {type(Y).__name__}")
    n = X.carrier.size
    if n != Y.carrier.size:
        return None
    ux, bx, sx, ox = _signature(X)
    uy, by, sy, oy = _signature(Y)
    inv_x = [_invariant(ux, bx, ox, a) for a in range(n)]
    inv_y = [_invariant(uy, by, oy, a) for a in range(n)]
    if sorted(inv_x) != sorted(inv_y):
        return None

    def assign(phi, used, a, b, queue):
        if phi[a] is not None:
            return phi[a] == b
        if used[b] or inv_x[a] != inv_y[b]:
            return False
        phi[a] = b
        used[b] = True
        queue.append(a)
        return True

    def propagate(phi, used, queue):
        while queue:
            a = queue.pop()
            b = phi[a]
            for mx, my in zip(ux, uy):
                if not assign(phi, used, mx[a], my[b], queue):
                    return False
            for c in range(n):
                d = phi[c]
                if d is None:
                    continue
                if ox.leq(a, c) != oy.leq(b, d) or ox.leq(c, a) != oy.leq(d, b):
                    return False
                for tx, ty in zip(bx, by):
                    for (p, q), (pp, qq) in (((a, c), (b, d)), ((c, a), (d, b))):
                        v, w = tx[p][q], ty[pp][qq]
                        if (v is None) != (w is None):
                            return False
                        if v is not None and not assign(phi, used, v, w, queue):
                            return False
        return True

    def full_check(phi):
        for sxt, syt in zip(sx, sy):
            for a in range(n):
                for c in range(n):
                    if _map_set(phi, sxt[a][c]) != syt[phi[a]][phi[c]]:
                        return False
        return True

    def search(phi, used):
        try:
            a = phi.index(None)
        except ValueError:
            return tuple(phi) if full_check(phi) else None
        for b in range(n):
            if used[b] or inv_x[a] != inv_y[b]:
                continue
            phi2, used2 = list(phi), list(used)
            queue: list[int] = []
            if assign(phi2, used2, a, b, queue) and propagate(phi2, used2, queue):
                found = search(phi2, used2)
                if found is not None:
                    return found
        return None

    phi: list[Optional[int]] = [None] * n
    used = [False] * n
    queue: list[int] = []
    if not (assign(phi, used, X.carrier.zero, Y.carrier.zero, queue)
            and assign(phi, used, X.carrier.one, Y.carrier.one, queue)
            and propagate(phi, used, queue)):
        return None
    return search(phi, used)


def relabel(X, perm):
    """The structure transported along ``perm`` (old index -> new index); labels follow."""
    n = X.carrier.size
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    kwargs = {}
    for f in fields(X):
        v = getattr(X, f.name)
        name = f.name
        if name == "carrier":
            c = X.carrier
            kwargs[name] = type(c)(tuple(c.labels[inv[i]] for i in range(n)),
                                   perm[c.zero], perm[c.one])
        elif name in ("comp", "lcomp", "rcomp"):
            kwargs[name] = tuple(perm[v[inv[i]]] for i in range(n))
        elif name in ("plus", "odot"):
            kwargs[name] = tuple(tuple(None if v[inv[i]][inv[j]] is None else perm[v[inv[i]][inv[j]]]
                                       for j in range(n)) for i in range(n))
        elif name in ("arrow", "squiggle"):
            kwargs[name] = tuple(tuple(_map_set(perm, v[inv[i]][inv[j]]) for j in range(n))
                                 for i in range(n))
        elif name == "order":
            kwargs[name] = OrderRelation([[v.leq(inv[i], inv[j]) for j in range(n)]
                                          for i in range(n)])
    return type(X)(**kwargs)
