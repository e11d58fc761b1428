"""Plain-text structure files.

A file starts with ``kind <effect|pea|curp|urp>`` and ``elements <labels>``
(bottom first, top last), followed by sections introduced by ``name:`` on
a line of their own::

    kind effect
    elements 0 a 1
    plus:
      0 a 1
      a 1 -
      1 - -
    comp:
      0 1
      a a
      1 0

Partial tables (``plus``, ``odot``) have one row per element in carrier
order, ``-`` marking an undefined cell. Maps (``comp``, ``lcomp``,
``rcomp``) list one ``x y`` pair per line. Set tables (``arrow``,
``squiggle``) hold brace sets such as ``{a,b}`` or ``{}``. ``order`` holds
rows of ``0``/``1`` with ``1`` in row x, column y meaning x <= y. Text after
``#`` is ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .bits import iter_bits
from .effect import EffectAlgebra
from .order import Carrier, OrderRelation
from .pseudo import PseudoEffectAlgebra
from .report import StructureError
from .residuation import CommUnsharpResiduatedPoset, UnsharpResiduatedPoset

KINDS = ("effect", "pea", "curp", "urp")
PARTIAL = ("plus", "odot")
MAPS = ("comp", "lcomp", "rcomp")
SETS = ("arrow", "squiggle")
RELATIONS = ("order",)

REQUIRED = {
    "effect": ("plus",),
    "pea": ("plus",),
    "curp": ("order", "comp", "odot", "arrow"),
    "urp": ("order", "lcomp", "rcomp", "odot", "arrow", "squiggle"),
}
OPTIONAL = {
    "effect": ("comp",),
    "pea": ("lcomp", "rcomp"),
    "curp": (),
    "urp": (),
}

_TOKEN = re.compile(r"\{[^}]*\}|[^\s{}]+")
_LABEL = re.compile(r"[^\s{},#]+")


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class _Section:
    name: str
    line: int
    rows: list[tuple[int, list[str]]] = field(default_factory=list)


def _strip(raw: str) -> str:
    return raw.split("#", 1)[0].strip()


def _tokens(text: str, lineno: int) -> list[str]:
    toks = _TOKEN.findall(text)
    if "".join(toks) != re.sub(r"\s+", "", text):
        raise ParseError("unbalanced braces", lineno)
    return toks


def _split(text: str):
    kind = labels = None
    sections: dict[str, _Section] = {}
    current: Optional[_Section] = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "kind" and current is None and kind is None:
            if rest.strip() not in KINDS:
                raise ParseError(f"unknown kind {rest.strip()!r}", lineno)
            kind = rest.strip()
        elif head == "elements" and current is None and labels is None:
            labels = rest.split()
            for lab in labels:
                if lab == "-" or not _LABEL.fullmatch(lab):
                    raise ParseError(f"invalid label {lab!r}", lineno)
            if len(labels) < 2:
                raise ParseError("need at least two elements", lineno)
            if len(set(labels)) != len(labels):
                raise ParseError("duplicate element label", lineno)
            labels = (labels, lineno)
        elif line.endswith(":") and " " not in line:
            name = line[:-1]
            if name not in PARTIAL + MAPS + SETS + RELATIONS:
                raise ParseError(f"unknown section {name!r}", lineno)
            if name in sections:
                raise ParseError(f"duplicate section {name!r} (first at line "
                                 f"{sections[name].line})", lineno)
            current = sections[name] = _Section(name, lineno)
        elif current is None:
            raise ParseError(f"unexpected line {line!r}", lineno)
        else:
            current.rows.append((lineno, _tokens(line, lineno)))
    if kind is None:
        raise ParseError("missing 'kind' line")
    if labels is None:
        raise ParseError("missing 'elements' line")
    return kind, labels[0], sections


class _Reader:
    def __init__(self, labels: list[str]):
        self.labels = labels
        self.index = {s: i for i, s in enumerate(labels)}
        self.n = len(labels)

    def label(self, tok: str, lineno: int) -> int:
        try:
            return self.index[tok]
        except KeyError:
            raise ParseError(f"unknown label {tok!r}", lineno) from None

    def _square(self, sec: _Section):
        if len(sec.rows) != self.n:
            line = sec.rows[-1][0] if sec.rows else sec.line
            raise ParseError(f"section {sec.name!r} has {len(sec.rows)} rows, "
                             f"expected {self.n}", line)
        for lineno, toks in sec.rows:
            if len(toks) != self.n:
                raise ParseError(f"ragged row in {sec.name!r}: {len(toks)} cells, "
                                 f"expected {self.n}", lineno)
        return sec.rows

    def partial(self, sec: _Section):
        return tuple(tuple(None if t == "-" else self.label(t, ln) for t in toks)
                     for ln, toks in self._square(sec))

    def sets(self, sec: _Section):
        out = []
        for ln, toks in self._square(sec):
            row = []
            for t in toks:
                if not (t.startswith("{") and t.endswith("}")):
                    raise ParseError(f"expected a brace set, got {t!r}", ln)
                m = 0
                for part in t[1:-1].split(","):
                    part = part.strip()
                    if part:
                        m |= 1 << self.label(part, ln)
                row.append(m)
            out.append(tuple(row))
        return tuple(out)

    def relation(self, sec: _Section):
        rows = []
        for ln, toks in self._square(sec):
            if any(t not in ("0", "1") for t in toks):
                raise ParseError("order rows hold only 0 and 1", ln)
            rows.append([t == "1" for t in toks])
        return OrderRelation(rows)

    def mapping(self, sec: _Section):
        image: list[Optional[int]] = [None] * self.n
        for ln, toks in sec.rows:
            if len(toks) != 2:
                raise ParseError(f"{sec.name!r} lines are 'x y' pairs", ln)
            x, y = self.label(toks[0], ln), self.label(toks[1], ln)
            if image[x] is not None:
                raise ParseError(f"{toks[0]!r} mapped twice", ln)
            image[x] = y
        missing = [self.labels[i] for i, v in enumerate(image) if v is None]
        if missing:
            raise ParseError(f"{sec.name!r} has no image for {missing[0]!r}", sec.line)
        return tuple(image)


def parse(text: str):
    """Structure described by ``text``; axioms are not checked here."""
    kind, labels, sections = _split(text)
    allowed = REQUIRED[kind] + OPTIONAL[kind]
    for name, sec in sections.items():
        if name not in allowed:
            raise ParseError(f"section {name!r} does not belong to kind {kind!r}", sec.line)
    for name in REQUIRED[kind]:
        if name not in sections:
            raise ParseError(f"missing section {name!r} for kind {kind!r}")
    rd = _Reader(labels)
    carrier = Carrier(tuple(labels), 0, len(labels) - 1)
    vals = {}
    for name, sec in sections.items():
        if name in PARTIAL:
            vals[name] = rd.partial(sec)
        elif name in SETS:
            vals[name] = rd.sets(sec)
        elif name in MAPS:
            vals[name] = rd.mapping(sec)
        else:
            vals[name] = rd.relation(sec)
    if kind == "effect":
        return EffectAlgebra.build(carrier, vals["plus"], vals.get("comp"), check=False)
    if kind == "pea":
        return PseudoEffectAlgebra.build(carrier, vals["plus"], vals.get("lcomp"),
                                         vals.get("rcomp"), check=False)
    if kind == "curp":
        return CommUnsharpResiduatedPoset(carrier, vals["order"], vals["comp"],
                                          vals["odot"], vals["arrow"])
    return UnsharpResiduatedPoset(carrier, vals["order"], vals["lcomp"], vals["rcomp"],
                                  vals["odot"], vals["arrow"], vals["squiggle"])


def kind_of(S) -> str:
    for kind, cls in (("effect", EffectAlgebra), ("pea", PseudoEffectAlgebra),
                      ("curp", CommUnsharpResiduatedPoset), ("urp", UnsharpResiduatedPoset)):
        if isinstance(S, cls):
            return kind
    raise TypeError(f"not a structure: {type(S).__name__}")


def fmt_set(labels, m: int) -> str:
    return "{" + ",".join(labels[i] for i in iter_bits(m)) + "}"


def _grid(cells: list[list[str]], indent: str = "  ") -> list[str]:
    width = max(len(c) for row in cells for c in row)
    return [(indent + " ".join(c.ljust(width) for c in row)).rstrip() for row in cells]


def render(S) -> str:
    """Canonical text for ``S``; ``parse(render(S))`` rebuilds it."""
    kind = kind_of(S)
    c = S.carrier
    if c.zero != 0 or c.one != c.size - 1:
        raise StructureError("files require bottom first and top last")
    labels = c.labels
    out = [f"kind {kind}", "elements " + " ".join(labels)]

    def partial(name, table):
        out.append(f"{name}:")
        out.extend(_grid([["-" if v is None else labels[v] for v in row] for row in table]))

    def mapping(name, m):
        out.append(f"{name}:")
        out.extend(_grid([[labels[x], labels[m[x]]] for x in range(c.size)]))

    def sets(name, table):
        out.append(f"{name}:")
        out.extend(_grid([[fmt_set(labels, v) for v in row] for row in table]))

    def relation(o):
        out.append("order:")
        out.extend(_grid([["1" if o.leq(x, y) else "0" for y in range(c.size)]
                          for x in range(c.size)]))

    if kind == "effect":
        partial("plus", S.plus)
        mapping("comp", S.comp)
    elif kind == "pea":
        partial("plus", S.plus)
        mapping("lcomp", S.lcomp)
        mapping("rcomp", S.rcomp)
    elif kind == "curp":
        relation(S.order)
        mapping("comp", S.comp)
        partial("odot", S.odot)
        sets("arrow", S.arrow)
    else:
        relation(S.order)
        mapping("lcomp", S.lcomp)
        mapping("rcomp", S.rcomp)
        partial("odot", S.odot)
        sets("arrow", S.arrow)
        sets("squiggle", S.squiggle)
    return "\n".join(out) + "\n"
