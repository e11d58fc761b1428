"""Specific values of the two built-in examples, each derived by hand or brute force."""

import pytest

from unsharp.bits import mask, members
from unsharp.effect import check_decomposition_sufficiency
from unsharp.enumeration import SearchSpec, enumerate_structures, find_witness, structures
from unsharp.examples import ex2_sets
from unsharp.monotone import MonotonicityMode
from unsharp.pseudo import check_good, check_pea_axioms, check_pea_monotonous, embed_commutative
from unsharp.residuation import check_curp, check_urp
from unsharp.transforms import curp_to_ea, ea_to_curp, find_isomorphism, pea_to_urp, relabel


def ix(E, *names):
    return mask(E.carrier.index(s) for s in names)


def names(E, m):
    return {E.carrier.labels[i] for i in members(m)}


def test_cones_of_the_nine_element_example(E1):
    o = E1.order
    assert names(E1, o.lower_cone(ix(E1, "e", "a"))) == {"0", "a"}
    assert names(E1, o.lower_cone(ix(E1, "1"))) == set(E1.carrier.labels)
    assert names(E1, o.upper_cone(ix(E1, "a", "b"))) == {"e", "f", "1"}
    assert names(E1, o.upper_cone(ix(E1, "0"))) == set(E1.carrier.labels)
    # a + z = g has no solution, so g is not above a
    assert names(E1, o.upper_cone(ix(E1, "a"))) == {"a", "e", "f", "1"}


def test_cones_of_the_even_subset_example(E2):
    assert names(E2, E2.order.lower_cone(ix(E2, "e12", "e13"))) == {"e0"}


def test_set_order_and_extremes(E1):
    o = E1.order
    assert o.set_leq(ix(E1, "a", "b"), ix(E1, "e"))
    assert not o.set_leq(ix(E1, "e"), ix(E1, "f"))
    assert o.set_leq(ix(E1, "0"), ix(E1, "g", "c"))
    assert names(E1, o.min_elements(ix(E1, "a", "e", "f"))) == {"a"}
    assert names(E1, o.max_elements(ix(E1, "a", "b", "e"))) == {"e"}
    assert sum(1 for _ in o.antichains(ix(E1, "a", "b", "c"))) == 7
    assert [names(E1, A) for A in o.antichains(ix(E1, "d"))] == [{"d"}]


def test_orders(E1, E2):
    o = E1.order
    assert o.leq(1, 5)                                     # a <= e
    assert (4, 6) in o.covers()                            # d covered by f
    sets = ex2_sets()
    for i, A in enumerate(sets):
        for j, B in enumerate(sets):
            assert E2.order.leq(i, j) == (A <= B)


def test_mutated_sum_is_rejected(E1):
    plus = [list(r) for r in E1.plus]
    plus[1][2] = 6                                         # a+b := f
    from unsharp.effect import check_effect_axioms
    r = check_effect_axioms(E1.carrier, plus, E1.comp)
    assert not r.ok and ({"E1", "E2", "E3"} & set(r.failures))


def test_basic_lemma_clause_values(E1):
    P, c = E1.plus, E1.comp
    b, f = 2, 6
    assert P[b][c[P[b][c[f]]]] == f
    assert c[0] == 8
    Q = embed_commutative(E1)
    s = Q.plus[Q.lcomp[f]][b]
    assert Q.plus[b][Q.rcomp[s]] == f


def test_decomposition_fails_on_the_smallest_non_monotonous_algebra():
    E = find_witness(SearchSpec(6), {"monotonous": False})
    r = check_decomposition_sufficiency(E)
    assert not r.ok and not r.failed("lemma")


def test_p1_violation_from_mutated_pea():
    from test_pseudo import three_cycle
    P = three_cycle()
    plus = [list(r) for r in P.plus]
    plus[1][2] = 4                                         # a+b := 1 as well
    r = check_pea_axioms(P.carrier, plus)
    assert not r.ok


def test_every_small_pea_is_good():
    for n in range(2, 9):
        row = enumerate_structures(SearchSpec(n, "pea", ("good",)))
        assert row.counts.get((("good", False),), 0) == 0


def test_embedded_even_subset_example_is_not_monotonous(E2):
    P = embed_commutative(E2)
    assert check_good(P).ok
    r = check_pea_monotonous(P, MonotonicityMode.sampled(100_000, seed=7))
    assert r.failed("monotonous-right") and r.failed("monotonous-left")


def test_odot_and_arrow_cells(E1):
    C = ea_to_curp(E1)
    lab = C.carrier.labels
    at = lab.index
    assert [lab[C.odot[at(x)][at("f")]] for x in "feg"] == ["d", "a", "c"]
    assert names(E1, C.arrow[at("e")][at("a")]) == {"c", "f"}
    assert names(E1, C.arrow[at("f")][at("f")]) == {"b", "d", "e", "f", "g", "1"}
    assert names(E1, C.arrow[at("d")][at("b")]) == {"d", "f"}
    assert C.arrow[8][8] == (1 << 9) - 1
    for x in range(9):
        assert C.arrow[x][0] == 1 << E1.comp[x] and C.odot[8][x] == x


def test_divisibility_cells(E1):
    C = ea_to_curp(E1)
    f, d = 6, 4
    assert names(E1, C.arrow[f][d]) == {"b", "d", "f"}
    image = {C.odot[f][u] for u in members(C.arrow[f][d])}
    assert {C.carrier.labels[v] for v in image} == {"0", "b", "d"} == names(E1, C.order.down[d])


def test_mutated_arrow_breaks_adjointness():
    E = next(E for E in structures(5, "effect"))
    C = ea_to_curp(E)
    assert check_curp(C).ok
    arrow = [list(r) for r in C.arrow]
    arrow[1][1] = 1 << E.comp[1]
    D = type(C)(C.carrier, C.order, C.comp, C.odot, tuple(map(tuple, arrow)))
    r = check_curp(D)
    assert r.failed("C3(=>)") or r.failed("C3(<=)")
    f = r.failures.get("C3(=>)") or r.failures["C3(<=)"]
    assert set(f.witness) == {"x", "y", "z"}


def test_even_subset_sums_recovered(E2):
    assert curp_to_ea(ea_to_curp(E2)) == E2


def test_embedding_arrows_coincide(E1):
    C = ea_to_curp(E1)
    R = pea_to_urp(embed_commutative(E1))
    assert R.arrow == R.squiggle == C.arrow and R.odot == C.odot
    assert set(check_urp(R).failures) <= {"R4(=>)", "R4(<=)", "R5(=>)", "R5(<=)"}


def test_isomorphism_examples(E1):
    assert find_isomorphism(E1, E1) == tuple(range(9))
    F = relabel(E1, (0, 3, 1, 2, 4, 6, 5, 7, 8))
    assert F != E1 and find_isomorphism(E1, F) is not None
    small = [S for S in structures(3, "effect")][0]
    bigger = [S for S in structures(4, "effect")][0]
    assert find_isomorphism(small, bigger) is None
    with pytest.raises(TypeError):
        find_isomorphism(E1, embed_commutative(E1))


def test_witness_profiles(E1):
    W = find_witness(SearchSpec(9), {"lattice_ordered": False})
    assert W.n == 6
    assert find_witness(SearchSpec(3, "pea"), {"commutative": False}) is None
    chain = find_witness(SearchSpec(4), {"monotonous": True}, min_order=4)
    assert chain.order.is_lattice().ok
