from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from unsharp import bits
from unsharp.order import Carrier, OrderRelation, check_antitone, check_involution
from unsharp.report import StructureError

import pytest


def chain(n):
    return OrderRelation([[i <= j for j in range(n)] for i in range(n)])


def diamond():
    # 0 < a, b < 1 with a, b incomparable
    pairs = [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]
    return OrderRelation.from_pairs(4, pairs)


@st.composite
def posets(draw, max_n=7):
    """Random bounded posets: a random DAG on the middle elements, closed transitively."""
    n = draw(st.integers(2, max_n))
    leq = [[i == j for j in range(n)] for i in range(n)]
    for i in range(n):
        leq[0][i] = True
        leq[i][n - 1] = True
    for i in range(1, n - 1):
        for j in range(i + 1, n - 1):
            leq[i][j] = draw(st.booleans())
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if leq[i][k] and leq[k][j]:
                    leq[i][j] = True
    return OrderRelation(leq)


def test_bits_roundtrip():
    assert bits.members(bits.mask([3, 0, 5])) == [0, 3, 5]
    assert bits.size(bits.full(6)) == 6
    assert list(bits.subsets(0b101)) == [0b001, 0b100, 0b101]


def test_carrier_validation():
    with pytest.raises(StructureError):
        Carrier(("0", "0"))
    c = Carrier(("0", "a", "1"))
    assert c.one == 2 and c.index("a") == 1
    assert c.fmt_set(0b101) == "{0,1}"


def test_cones_on_diamond():
    o = diamond()
    assert o.upper_cone(0b0110) == 0b1000
    assert o.lower_cone(0b0110) == 0b0001
    assert o.lower_cone(0) == 0b1111
    assert o.min_elements(0b0110) == 0b0110


def test_set_leq_is_vacuous_on_empty_sets():
    o = chain(3)
    assert o.set_leq(0, 0b001) and o.set_leq(0b100, 0)
    assert not o.set_leq(0b010, 0b001)


def test_lattice_detection():
    assert chain(4).is_lattice().ok
    assert diamond().is_lattice().ok
    # two incomparable upper bounds for a, b
    o = OrderRelation.from_pairs(6, [(1, 3), (1, 4), (2, 3), (2, 4)] +
                                 [(0, i) for i in range(6)] + [(i, 5) for i in range(6)])
    r = o.is_lattice()
    assert r.failed("join")
    assert r.failures["join"].witness["minimal_upper_bounds"] == frozenset({3, 4})


def test_check_bounded_tags():
    bad = OrderRelation([[True, True], [True, True]])
    r = bad.check_bounded(0, 1)
    assert r.failed("antisymmetric")


def test_involution_and_antitone():
    o = diamond()
    assert check_involution((3, 2, 1, 0), o).ok
    assert check_antitone((3, 2, 1, 0), o, "anti").ok
    assert not check_antitone((0, 1, 2, 3), o, "anti").ok


@settings(max_examples=60, deadline=None)
@given(posets())
def test_antichains_match_brute_force(o):
    n = o.n
    expected = set()
    for k in range(1, n + 1):
        for S in combinations(range(n), k):
            if all(not o.comparable(a, b) for a, b in combinations(S, 2)):
                expected.add(bits.mask(S))
    got = list(o.antichains())
    assert len(got) == len(set(got)) == o.count_antichains()
    assert set(got) == expected


@settings(max_examples=60, deadline=None)
@given(posets(), st.data())
def test_cone_laws(o, data):
    A = data.draw(st.integers(0, (1 << o.n) - 1))
    L, U = o.lower_cone, o.upper_cone
    assert L(U(L(A))) == L(A)
    assert U(L(U(A))) == U(A)
    assert L(A) == L(o.min_elements(A))
    assert U(A) == U(o.max_elements(A))


@settings(max_examples=40, deadline=None)
@given(posets())
def test_covers_generate_order(o):
    n = o.n
    reach = [[i == j for j in range(n)] for i in range(n)]
    for x, y in o.covers():
        reach[x][y] = True
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if reach[i][k] and reach[k][j]:
                    reach[i][j] = True
    assert OrderRelation(reach) == o
