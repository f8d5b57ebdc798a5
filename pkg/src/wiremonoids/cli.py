"""Command-line front end.

Exit status: 0 on success, 1 on a mathematical negative (non-planar chip,
identity refuted, word not an isoterm, no certificate, failed scenario),
2 on usage and parse errors.
"""
from __future__ import annotations

import argparse
import concurrent.futures
import re
import sys
from pathlib import Path
from typing import Sequence

from .chips import Chip, DegreeMismatch, circle, format_chip, hook, identity, is_planar, multiply, parse_chip, rotate, star
from .families import BoundExceeded, ChipMonoid, enumerate_brauer, enumerate_jones, k3_quotient
from .rees import a2, brandt_b21, nfb_submatrix_classify, parse_group, parse_matrix, tsl
from .render import render
from .semigroups import FiniteSemigroup
from .verify import SCENARIOS, run_scenario
from .words import evaluate, find_counterexample, isoterm_witnesses, parse_identity, parse_word, refute_identity, zimin

OK, NEGATIVE, USAGE = 0, 1, 2

NAMED = {
    "b21": brandt_b21,
    "a2": a2,
    "tsl": tsl,
    "k3q": lambda: k3_quotient("star"),
}


class UsageError(Exception):
    pass


def _keyword(args: argparse.Namespace, attr: str, word: str) -> None:
    if getattr(args, attr) != word:
        raise UsageError(f"expected {word!r}, got {getattr(args, attr)!r}")


def _chip_degree(name: str) -> int:
    mt = re.fullmatch(r"k(\d+)", name)
    if not mt or int(mt.group(1)) < 1:
        raise UsageError(f"expected a Kauffman monoid like k3, got {name!r}")
    return int(mt.group(1))


def load_table(spec: str) -> FiniteSemigroup:
    """A named structure or a path to a file in the table text format."""
    if spec in NAMED:
        return NAMED[spec]()
    path = Path(spec)
    if not path.is_file():
        raise UsageError(f"no such table {spec!r}; use a file or one of {', '.join(NAMED)}")
    return FiniteSemigroup.from_text(path.read_text())


def _chip_value(text: str, n: int) -> Chip:
    if text == "1":
        return identity(n)
    if text == "c":
        return circle(n)
    mt = re.fullmatch(r"h(\d+)", text)
    if mt:
        return hook(n, int(mt.group(1)))
    xi = parse_chip(text)
    if xi.degree != n:
        raise DegreeMismatch(xi.degree, n)
    return xi


def _table_value(text: str, S: FiniteSemigroup) -> int:
    labels = [str(x) for x in S.elements]
    if text in labels:
        return labels.index(text)
    if text.isdigit() and int(text) < len(S):
        return int(text)
    raise UsageError(f"unknown element {text!r}; elements are {', '.join(labels)}")


def parse_assignment(text: str) -> dict[int, str]:
    """``x1=h1 x2=c``: whitespace-separated letter=value pairs."""
    out: dict[int, str] = {}
    col = 1
    for token in text.split():
        col = text.index(token, col - 1) + 1
        mt = re.fullmatch(r"x(\d+)=(\S+)", token)
        if not mt:
            raise ValueError(f"line 1, column {col}: expected x<N>=<value>, got {token!r}")
        out[int(mt.group(1))] = mt.group(2)
    if not out:
        raise ValueError("line 1, column 1: empty assignment")
    return out


# -- subcommands


def cmd_mul(args) -> int:
    print(format_chip(multiply(parse_chip(args.left), parse_chip(args.right))))
    return OK


def cmd_star(args) -> int:
    print(format_chip(star(parse_chip(args.chip))))
    return OK


def cmd_rotate(args) -> int:
    print(format_chip(rotate(parse_chip(args.chip))))
    return OK


def cmd_planar(args) -> int:
    planar = is_planar(parse_chip(args.chip))
    print("planar" if planar else "not planar")
    return OK if planar else NEGATIVE


def cmd_enumerate(args) -> int:
    items = enumerate_jones(args.n) if args.family == "jones" else enumerate_brauer(args.n)
    for m in items:
        print(format_chip(Chip(m)))
    print(f"# {len(items)} {args.family} matchings of degree {args.n}")
    return OK


def cmd_zimin(args) -> int:
    print(zimin(args.n))
    return OK


def cmd_eval(args) -> int:
    _keyword(args, "with_", "with")
    _keyword(args, "in_", "in")
    w = parse_word(args.word)
    raw = parse_assignment(args.assignment)
    if re.fullmatch(r"k\d+", args.target):
        n = _chip_degree(args.target)
        M = ChipMonoid(n, args.involution)
        a = {x: _chip_value(v, n) for x, v in raw.items()}
        print(format_chip(evaluate(w, a, M)))
        return OK
    if args.target == "table":
        if not args.file:
            raise UsageError("'in table' needs a FILE")
        S = load_table(args.file)
    else:
        S = load_table(args.target)
    a = {x: _table_value(v, S) for x, v in raw.items()}
    print(S.label(evaluate(w, a, S)))
    return OK


def cmd_check_identity(args) -> int:
    _keyword(args, "in_", "in")
    ident = parse_identity(args.identity)
    S = load_table(args.table)
    bad = find_counterexample(S, ident)
    if bad is None:
        print(f"holds: {ident}")
        return OK
    print(f"fails: {ident}")
    print("counterexample: " + ", ".join(f"x{x}={S.label(v)}" for x, v in sorted(bad.items())))
    return NEGATIVE


def cmd_refute(args) -> int:
    _keyword(args, "in_", "in")
    _keyword(args, "depth_", "depth")
    ident = parse_identity(args.identity)
    M = ChipMonoid(_chip_degree(args.monoid), args.involution)
    found = refute_identity(ident, M.generators(), M, args.depth)
    if found is None:
        print(f"no witness up to depth {args.depth}")
        return OK
    print("refuted: " + ", ".join(f"x{x}={format_chip(v)}" for x, v in sorted(found.items())))
    return NEGATIVE


def cmd_isoterm(args) -> int:
    _keyword(args, "in_", "in")
    _keyword(args, "maxlen_", "maxlen")
    w = parse_word(args.word)
    S = load_table(args.table)
    witnesses = isoterm_witnesses(S, w, args.max_len)
    if not witnesses:
        print(f"isoterm up to length {args.max_len}: {w}")
        return OK
    for v in witnesses:
        print(v)
    return NEGATIVE


def cmd_rees(args) -> int:
    _keyword(args, "over_", "over")
    G = parse_group(args.group)
    P = parse_matrix(args.matrix, G)
    cert = nfb_submatrix_classify(P, G)
    if cert is None:
        print("no certificate")
        return NEGATIVE
    rows = ",".join(str(r + 1) for r in cert.rows)
    cols = ",".join(str(c + 1) for c in cert.cols)
    print(f"form {cert.form} rows {rows} cols {cols}")
    return OK


def _run_one(name: str, budget: float):
    return run_scenario(name, budget)


def cmd_verify(args) -> int:
    names = list(SCENARIOS) if args.scenario == "all" else [args.scenario]
    for name in names:
        if name not in SCENARIOS:
            raise UsageError(f"unknown scenario {name!r}; choose from all, {', '.join(SCENARIOS)}")
    if args.jobs > 1 and len(names) > 1:
        with concurrent.futures.ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_run_one, names, [args.budget] * len(names)))
    else:
        results = []
        for name in names:
            results.append(_run_one(name, args.budget))
    for res in results:
        print(f"{res.status} {res.name}")
        for line in res.details:
            print(f"  {line}")
        print(res.summary_line())
    if len(results) > 1:
        print()
        print(f"{'scenario':<20} {'status':<6} {'seconds':>8}")
        for res in results:
            print(f"{res.name:<20} {res.status:<6} {res.seconds:>8.3f}")
    return OK if all(r.passed for r in results) else NEGATIVE


def cmd_render(args) -> int:
    sys.stdout.write(render(parse_chip(args.chip), args.format))
    return OK


def cmd_export(args) -> int:
    if args.name not in NAMED:
        raise UsageError(f"unknown structure {args.name!r}; choose from {', '.join(NAMED)}")
    S = NAMED[args.name]()
    sys.stdout.write(S.to_text())
    print("# " + " ".join(str(x) for x in S.elements))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wiremonoids", description="Diagram monoids, identities and Rees matrix semigroups.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (("star", cmd_star, "reflect a chip"), ("rotate", cmd_rotate, "rotate a chip"), ("planar", cmd_planar, "test planarity")):
        s = sub.add_parser(name, help=help_)
        s.add_argument("chip")
        s.set_defaults(func=fn)

    s = sub.add_parser("mul", help="multiply two chips")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(func=cmd_mul)

    s = sub.add_parser("enumerate", help="list Jones or Brauer matchings")
    s.add_argument("family", choices=("jones", "brauer"))
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("zimin", help="print a Zimin word")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_zimin)

    s = sub.add_parser("eval", help="evaluate a word: eval WORD with ASSIGN in TARGET [FILE]")
    s.add_argument("word")
    s.add_argument("with_", metavar="with")
    s.add_argument("assignment")
    s.add_argument("in_", metavar="in")
    s.add_argument("target", help="kN, b21, a2, tsl, k3q, table, or a table file")
    s.add_argument("file", nargs="?")
    s.add_argument("--involution", choices=("star", "rotate"), default="star", help="involution used on kN")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("check-identity", help="exhaustive identity check: check-identity IDENT in TABLE")
    s.add_argument("identity")
    s.add_argument("in_", metavar="in")
    s.add_argument("table")
    s.set_defaults(func=cmd_check_identity)

    s = sub.add_parser("refute", help="bounded refutation: refute IDENT in kN depth L")
    s.add_argument("identity")
    s.add_argument("in_", metavar="in")
    s.add_argument("monoid")
    s.add_argument("depth_", metavar="depth")
    s.add_argument("depth", type=int)
    s.add_argument("--involution", choices=("star", "rotate"), default="star")
    s.set_defaults(func=cmd_refute)

    s = sub.add_parser("isoterm", help="bounded isoterm search: isoterm WORD in TABLE maxlen L")
    s.add_argument("word")
    s.add_argument("in_", metavar="in")
    s.add_argument("table")
    s.add_argument("maxlen_", metavar="maxlen")
    s.add_argument("max_len", type=int)
    s.set_defaults(func=cmd_isoterm)

    s = sub.add_parser("rees", help="rees classify MATRIX over GROUP")
    rsub = s.add_subparsers(dest="rees_command", required=True)
    c = rsub.add_parser("classify")
    c.add_argument("matrix")
    c.add_argument("over_", metavar="over")
    c.add_argument("group")
    c.set_defaults(func=cmd_rees)

    s = sub.add_parser("verify", help="run an acceptance scenario, or all of them")
    s.add_argument("scenario", help="all, " + ", ".join(SCENARIOS))
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--budget", type=float, default=60.0, help="per-scenario time budget in seconds")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("render", help="draw a chip")
    s.add_argument("chip")
    s.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("export", help="print a named structure in the table text format")
    s.add_argument("name")
    s.set_defaults(func=cmd_export)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError, IndexError, BoundExceeded, OverflowError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return USAGE
