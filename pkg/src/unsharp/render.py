"""Human-readable output: operation tables, Hasse diagrams and census rows."""

from __future__ import annotations

from typing import Optional, Sequence

from .fileformat import fmt_set, kind_of

SYMBOLS = {"plus": "+", "odot": "odot", "arrow": "->", "squiggle": "~>"}


def grid(symbol: str, labels: Sequence[str], cells: Sequence[Sequence[str]]) -> str:
    """A Cayley-style table: column labels on top, row labels left of a bar."""
    head = [symbol, *labels]
    rows = [[labels[i], *row] for i, row in enumerate(cells)]
    widths = [max(len(r[j]) for r in [head, *rows]) for j in range(len(head))]

    def line(r):
        first = r[0].ljust(widths[0])
        rest = " ".join(c.ljust(w) for c, w in zip(r[1:], widths[1:]))
        return f"{first} | {rest}".rstrip()

    rule = "-" * (widths[0] + 1) + "+" + "-" * (sum(widths[1:]) + len(widths[1:]))
    return "\n".join([line(head), rule, *(line(r) for r in rows)]) + "\n"


def partial_cells(labels, table) -> list[list[str]]:
    return [["-" if v is None else labels[v] for v in row] for row in table]


def set_cells(labels, table) -> list[list[str]]:
    return [[fmt_set(labels, m) for m in row] for row in table]


def tables(S) -> str:
    """Every operation of ``S`` as aligned text tables, separated by blank lines."""
    kind = kind_of(S)
    labels = S.carrier.labels
    parts = []
    if kind in ("effect", "pea"):
        parts.append(grid(SYMBOLS["plus"], labels, partial_cells(labels, S.plus)))
    else:
        parts.append(grid(SYMBOLS["odot"], labels, partial_cells(labels, S.odot)))
        parts.append(grid(SYMBOLS["arrow"], labels, set_cells(labels, S.arrow)))
        if kind == "urp":
            parts.append(grid(SYMBOLS["squiggle"], labels, set_cells(labels, S.squiggle)))
    return "\n".join(parts)


def parse_grid(text: str) -> tuple[str, list[str], dict[tuple[str, str], str]]:
    """Inverse of :func:`grid` (also accepts the bar-less layout); ``#`` lines skipped."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line or set(line) <= set("-+"):
            continue
        rows.append([t for t in line.split() if t != "|"])
    symbol, *cols = rows[0]
    cells = {}
    for r in rows[1:]:
        if len(r) != len(cols) + 1:
            raise ValueError(f"ragged table row starting {r[0]!r}")
        for c, v in zip(cols, r[1:]):
            cells[(r[0], c)] = v
    return symbol, cols, cells


def hasse_dot(S, name: str = "hasse") -> str:
    """DOT digraph of the cover relation, bottom to top."""
    labels = S.carrier.labels
    order = S.order
    out = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for x in range(S.carrier.size):
        out.append(f'  "{labels[x]}";')
    for x, y in order.covers():
        out.append(f'  "{labels[x]}" -> "{labels[y]}";')
    out.append("}")
    return "\n".join(out) + "\n"


def census_tsv(rows, predicates: Optional[Sequence[str]] = None) -> str:
    """Tab-separated census: one line per order, kind and predicate combination."""
    rows = list(rows)
    if predicates is None:
        predicates = [name for name, _ in next(iter(rows[0].counts), ())] if rows else []
    head = ["order", "kind", *predicates, "count", "total", "complete"]
    out = ["\t".join(head)]
    for row in rows:
        for key in sorted(row.counts, key=lambda k: tuple(not v for _, v in k)):
            vals = ["1" if v else "0" for _, v in key]
            out.append("\t".join([str(row.order), row.kind, *vals, str(row.counts[key]),
                                  str(row.total), str(row.complete).lower()]))
        if not row.counts:
            out.append("\t".join([str(row.order), row.kind, *(["-"] * len(predicates)), "0",
                                  "0", str(row.complete).lower()]))
    return "\n".join(out) + "\n"
