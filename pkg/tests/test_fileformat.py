import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from test_pseudo import three_cycle
from unsharp.enumeration import structures
from unsharp.fileformat import ParseError, parse, render
from unsharp.pseudo import embed_commutative
from unsharp.transforms import ea_to_curp, pea_to_urp, structures_equal

SMALL = """\
kind effect   # the three-element chain
elements 0 a 1
plus:
  0 a 1
  a 1 -
  1 - -
"""


def test_minimal_file():
    E = parse(SMALL)
    assert E.comp == (2, 1, 0)
    assert "comp:" in render(E)


def test_roundtrip_of_every_kind(E1, E2):
    samples = [E1, E2, embed_commutative(E1), ea_to_curp(E1), ea_to_curp(E2),
               three_cycle(), pea_to_urp(three_cycle())]
    for S in samples:
        text = render(S)
        T = parse(text)
        assert structures_equal(S, T)
        assert render(T) == text


def test_ex2_labels(E2):
    text = render(E2)
    assert text.splitlines()[1].split()[1:4] == ["e0", "e12", "e13"]
    assert text.splitlines()[1].split()[-1] == "e123456"


def test_empty_set_cells_roundtrip(E1):
    C = ea_to_curp(E1)
    arrow = [list(r) for r in C.arrow]
    arrow[3][4] = 0
    D = type(C)(C.carrier, C.order, C.comp, C.odot, tuple(map(tuple, arrow)))
    assert "{}" in render(D)
    assert parse(render(D)).arrow[3][4] == 0


@pytest.mark.parametrize("edit, line, fragment", [
    (lambda t: t.replace("a 1 -", "a q -"), 5, "unknown label 'q'"),
    (lambda t: t.replace("a 1 -", "a 1"), 5, "ragged row"),
    (lambda t: t + "plus:\n", 7, "duplicate section"),
    (lambda t: t.replace("kind effect", "kind monoid"), 1, "unknown kind"),
    (lambda t: t + "comp:\n  0 1\n  0 a\n", 9, "mapped twice"),
    (lambda t: t + "order:\n", 7, "does not belong"),
    (lambda t: t.replace("plus:", "plus:\n  0 a 1"), 7, "has 4 rows"),
])
def test_parse_errors_carry_line_numbers(edit, line, fragment):
    text = edit(SMALL)
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.line == line
    assert fragment in str(info.value)


def test_missing_sections():
    with pytest.raises(ParseError, match="missing section 'odot'"):
        parse("kind curp\nelements 0 1\norder:\n 1 1\n 0 1\ncomp:\n 0 1\n 1 0\n")
    with pytest.raises(ParseError, match="missing 'kind'"):
        parse("elements 0 1\n")


def test_unbalanced_braces():
    text = "kind curp\nelements 0 1\narrow:\n {1 {1}\n"
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.line == 4


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([S for n in range(2, 6) for S in structures(n, "pea")]),
       st.lists(st.sampled_from(["", "  # note", "   "]), min_size=1, max_size=3))
def test_comments_and_blank_lines_are_ignored(P, noise):
    lines = render(P).splitlines()
    noisy = []
    for i, line in enumerate(lines):
        noisy.append(line + noise[i % len(noise)])
        if i % 3 == 0:
            noisy.append(noise[0])
    assert structures_equal(parse("\n".join(noisy)), P)
