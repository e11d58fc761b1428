"""Command-line entry point ``unsharp``.

Exit status: 0 when everything checked passes, 1 on an axiom or post-check
failure (with a witness on the output), 2 on unreadable input or a usage
error, 3 when a search or check budget runs out. ``convert`` and
``roundtrip`` still produce their output when the input or the result fails
its axioms; the failure goes to stderr and sets exit status 1.
"""

from __future__ import annotations

import argparse
import sys

from . import examples, fileformat, render
from .effect import EffectAlgebra, check_effect_axioms, check_monotonous
from .enumeration import KINDS as ENUM_KINDS
from .enumeration import PREDICATES, SearchSpec, enumerate_structures
from .fileformat import ParseError, kind_of
from .monotone import MonotonicityMode
from .pseudo import (PseudoEffectAlgebra, check_pea_axioms, check_pea_monotonous,
                     embed_commutative, forget_commutative)
from .report import StructureError, TheoremViolation, ThresholdExceeded
from .residuation import (CommUnsharpResiduatedPoset, UnsharpResiduatedPoset, check_curp,
                          check_curp_divisible, check_urp, check_urp_divisible)
from . import transforms

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class _Exit(Exception):
    def __init__(self, code: int, message: str = ""):
        super().__init__(message)
        self.code = code
        self.message = message


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Exit(EXIT_INPUT, f"cannot read {path}: {exc.strerror}") from None


def _load(path: str):
    try:
        return fileformat.parse(_read(path))
    except ParseError as exc:
        raise _Exit(EXIT_INPUT, f"{path}: {exc}") from None
    except StructureError as exc:
        raise _Exit(EXIT_FAIL, f"{path}: {exc}") from None


def _axioms(S):
    if isinstance(S, EffectAlgebra):
        return check_effect_axioms(S.carrier, S.plus, S.comp)
    if isinstance(S, PseudoEffectAlgebra):
        return check_pea_axioms(S.carrier, S.plus, S.lcomp, S.rcomp)
    if isinstance(S, CommUnsharpResiduatedPoset):
        return check_curp(S)
    return check_urp(S)


def _input_ok(S) -> bool:
    """Report input axiom failures on stderr; the constructions still run."""
    r = _axioms(S)
    if not r.ok:
        sys.stderr.write("input " + r.format(S.carrier.labels) + "\n")
    return r.ok


def cmd_check(args, out) -> int:
    S = _load(args.file)
    r = _axioms(S)
    r.name = f"{kind_of(S)} check"
    if args.monotonous:
        if not isinstance(S, (EffectAlgebra, PseudoEffectAlgebra)):
            raise _Exit(EXIT_INPUT, "--monotonous applies to effect and pea files")
        if r.ok:
            mode = (MonotonicityMode.sampled(args.trials, args.seed) if args.mode == "sampled"
                    else MonotonicityMode.exhaustive())
            checker = check_monotonous if isinstance(S, EffectAlgebra) else check_pea_monotonous
            try:
                r.merge(checker(S, mode))
            except StructureError as exc:
                r.fail("order", str(exc))
    out.write(r.format(S.carrier.labels) + "\n")
    return EXIT_OK if r.ok else EXIT_FAIL


def _convert(S, target: str, check: bool):
    kind = kind_of(S)
    if (kind, target) == ("effect", "curp"):
        return transforms.ea_to_curp(S, check=check)
    if (kind, target) == ("curp", "effect"):
        return transforms.curp_to_ea(S, check=check)
    if (kind, target) == ("pea", "urp"):
        return transforms.pea_to_urp(S, check=check)
    if (kind, target) == ("urp", "pea"):
        return transforms.urp_to_pea(S, check=check)
    if (kind, target) == ("effect", "pea"):
        return embed_commutative(S)
    if (kind, target) == ("pea", "effect"):
        return forget_commutative(S)
    if kind == target:
        return S
    raise _Exit(EXIT_INPUT, f"no conversion from {kind} to {target}")


def cmd_convert(args, out) -> int:
    S = _load(args.file)
    code = EXIT_OK if _input_ok(S) else EXIT_FAIL
    try:
        T = _convert(S, args.to, check=False)
    except StructureError as exc:
        raise _Exit(EXIT_FAIL, str(exc)) from None
    if not args.no_check and T is not S:
        r = _axioms(T)
        if isinstance(T, CommUnsharpResiduatedPoset):
            r.merge(check_curp_divisible(T))
        elif isinstance(T, UnsharpResiduatedPoset):
            r.merge(check_urp_divisible(T))
        if not r.ok:
            sys.stderr.write("post-check " + r.format(T.carrier.labels) + "\n")
            code = EXIT_FAIL
    out.write(fileformat.render(T))
    return code


def cmd_roundtrip(args, out) -> int:
    S = _load(args.file)
    code = EXIT_OK if _input_ok(S) else EXIT_FAIL
    kind = kind_of(S)
    try:
        if kind == "effect":
            back = transforms.curp_to_ea(transforms.ea_to_curp(S))
        elif kind == "pea":
            back = transforms.urp_to_pea(transforms.pea_to_urp(S))
        elif kind == "curp":
            back = transforms.ea_to_curp(transforms.curp_to_ea(S))
        else:
            back = transforms.pea_to_urp(transforms.urp_to_pea(S))
    except StructureError as exc:
        out.write(f"construction failed: {exc}\n")
        return EXIT_FAIL
    diff = transforms.first_difference(S, back)
    if diff is None:
        out.write("EQUAL\n")
        return code
    labels = S.carrier.labels
    cell = diff.get("cell")
    where = diff["field"]
    if isinstance(cell, tuple):
        where += f"[{labels[cell[0]]},{labels[cell[1]]}]"
    elif cell is not None:
        where += f"[{labels[cell]}]"

    def show(v):
        if diff["field"] in ("arrow", "squiggle"):
            return fileformat.fmt_set(labels, v)
        if isinstance(v, int):
            return labels[v]
        return "-" if v is None else str(v)

    if "left" in diff:
        out.write(f"DIFFERENT {where}: {show(diff['left'])} != {show(diff['right'])}\n")
    else:
        out.write(f"DIFFERENT {where}\n")
    return EXIT_FAIL


def cmd_tables(args, out) -> int:
    out.write(render.tables(_load(args.file)))
    return EXIT_OK


def cmd_hasse(args, out) -> int:
    S = _load(args.file)
    try:
        out.write(render.hasse_dot(S))
    except StructureError as exc:
        raise _Exit(EXIT_FAIL, str(exc)) from None
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    preds = tuple(args.predicate or ())
    try:
        spec = SearchSpec(args.order, args.kind, preds, node_budget=args.node_budget,
                          time_budget=args.time_budget)
    except ValueError as exc:
        raise _Exit(EXIT_INPUT, str(exc)) from None
    row = enumerate_structures(spec)
    out.write(render.census_tsv([row], preds))
    if not row.complete:
        sys.stderr.write("budget exhausted: census is incomplete\n")
        return EXIT_BUDGET
    return EXIT_OK


def cmd_example(args, out) -> int:
    S = examples.ex1() if args.name == "ex1" else examples.ex2()
    out.write(fileformat.render(S))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="unsharp", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(sp):
        sp.add_argument("file", nargs="?", default="-", help="structure file, '-' for stdin")
        return sp

    c = with_file(sub.add_parser("check", help="verify axioms"))
    c.add_argument("--monotonous", action="store_true", help="also check monotonicity")
    c.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    c.add_argument("--trials", type=int, default=100_000)
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_check)

    v = with_file(sub.add_parser("convert", help="apply a construction"))
    v.add_argument("--to", required=True, choices=fileformat.KINDS)
    v.add_argument("--no-check", action="store_true", help="skip post-checks")
    v.set_defaults(func=cmd_convert)

    with_file(sub.add_parser("roundtrip", help="construct, invert, compare")) \
        .set_defaults(func=cmd_roundtrip)
    with_file(sub.add_parser("tables", help="print operation tables")).set_defaults(func=cmd_tables)
    with_file(sub.add_parser("hasse", help="DOT diagram of the order")).set_defaults(func=cmd_hasse)

    e = sub.add_parser("enumerate", help="census of small structures")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--kind", choices=ENUM_KINDS, default="effect")
    e.add_argument("--predicate", action="append", choices=PREDICATES)
    e.add_argument("--node-budget", type=int)
    e.add_argument("--time-budget", type=float)
    e.set_defaults(func=cmd_enumerate)

    x = sub.add_parser("example", help="print a built-in structure")
    x.add_argument("name", choices=sorted(examples.BUILTINS))
    x.set_defaults(func=cmd_example)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except _Exit as exc:
        if exc.message:
            sys.stderr.write(exc.message + "\n")
        return exc.code
    except ThresholdExceeded as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_BUDGET
    except TheoremViolation as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
