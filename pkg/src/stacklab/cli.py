"""Command-line front end: ``stacklab <command> [options]``.

Every command reads its input from ``--input FILE`` or standard input and is
a thin wrapper over a library call.  Exit status is 2 for usage and parse
errors, 1 when a verification finds failures, 0 otherwise.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Callable, Sequence

from . import jdt
from .growth import promotion_matrix_from_diagram
from .matchings import crossing_nesting, parse_matching
from .promperms import format_permutation, prom_perms, promotion_matrix
from .render import render_chord_svg, render_shadow_svg
from .tableau import StandardTableau, enumerate_syt, parse_tableau, rectangle, short, stack, to_json, to_text
from .verify import THEOREMS
from .viennot import Direction, check_generic, points_from_permutation, rs_insert, rs_inverse, skeleta, viennot


class UsageError(ValueError):
    pass


# -- input parsing -----------------------------------------------------------------


def parse_shape(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*[xX×]\s*(\d+)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"shape must look like RxC, got {text!r}")
    r, c = int(m.group(1)), int(m.group(2))
    if r < 1 or c < 1:
        raise argparse.ArgumentTypeError("shape needs at least one row and one column")
    return r, c


def parse_permutation(text: str) -> tuple[int, ...]:
    """One-line form, bracketed or not, separated by commas or whitespace."""
    tokens = re.split(r"[\s,]+", text.strip().strip("[]").strip())
    try:
        perm = tuple(int(t) for t in tokens if t)
    except ValueError:
        raise ValueError(f"cannot read a permutation from {text.strip()!r}") from None
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"{format_permutation(perm)} is not a permutation of 1..{len(perm)}")
    return perm


def parse_points_or_permutation(text: str, force_points: bool = False):
    """A permutation in one-line form, or points as ``x y`` lines / JSON pairs."""
    stripped = text.strip()
    if stripped.startswith("["):
        data = json.loads(stripped)
        if data and isinstance(data[0], list):
            return check_generic(tuple(p) for p in data)
        return points_from_permutation(parse_permutation(stripped))
    lines = [line.split() for line in stripped.splitlines() if line.strip()]
    if force_points or (len(lines) > 1 and all(len(parts) == 2 for parts in lines)):
        return check_generic((int(a), int(b)) for a, b in lines)
    return points_from_permutation(parse_permutation(stripped))


def parse_tableau_pair(text: str) -> tuple[StandardTableau, StandardTableau]:
    """Two tableaux separated by a blank line, or JSON ``{"P": ..., "Q": ...}`` / ``[P, Q]``."""
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        data = json.loads(stripped)
        pair = [data["P"], data["Q"]] if isinstance(data, dict) else data
        if len(pair) != 2:
            raise ValueError("expected exactly two tableaux")
        return tuple(parse_tableau(json.dumps({"rows": t["rows"] if isinstance(t, dict) else t})) for t in pair)
    blocks = [b for b in re.split(r"\n\s*\n", stripped) if b.strip()]
    if len(blocks) != 2:
        raise ValueError("expected two tableaux separated by a blank line")
    return parse_tableau(blocks[0]), parse_tableau(blocks[1])


# -- commands ----------------------------------------------------------------------


def _read(args) -> str:
    if args.input in (None, "-"):
        return sys.stdin.read()
    with open(args.input, encoding="utf-8") as fh:
        return fh.read()


def _emit(args, text: str, data) -> None:
    print(json.dumps(data) if args.json else text)


def _tableau_out(args, T) -> None:
    _emit(args, str(T) if not isinstance(T, StandardTableau) else to_text(T), {"rows": [list(r) for r in T.rows]})


def cmd_promote(args) -> int:
    _tableau_out(args, jdt.promote_power(parse_tableau(_read(args)), args.k))
    return 0


def cmd_evacuate(args) -> int:
    _tableau_out(args, jdt.evacuate(parse_tableau(_read(args))))
    return 0


def cmd_gromote(args) -> int:
    if args.k < 0:
        raise UsageError("gromotion only runs forward; -k must be non-negative")
    T, records = jdt.gromote_power(parse_tableau(_read(args)), args.k)
    if args.json:
        data = {"rows": [list(r) for r in T.rows], "offset": T.offset}
        if args.trace:
            data["trace"] = [
                {"path": [list(c) for c in rec.path], "row_entries": {str(i): v for i, v in sorted(rec.row_entries.items())}}
                for rec in records
            ]
        print(json.dumps(data))
        return 0
    if args.trace:
        for step, rec in enumerate(records, start=1):
            path = " ".join(f"({i},{j})" for i, j in rec.path)
            moved = ", ".join(f"{i}:{v}" for i, v in sorted(rec.row_entries.items()))
            print(f"step {step}: path {path}; moved up {moved or '-'}")
    print(T)
    return 0


def cmd_promperms(args) -> int:
    perms = prom_perms(parse_tableau(_read(args)))
    text = "\n".join(f"prom_{i}: {format_permutation(p)}" for i, p in enumerate(perms, start=1))
    _emit(args, text, [list(p) for p in perms])
    return 0


def cmd_pm(args) -> int:
    T = parse_tableau(_read(args))
    M = promotion_matrix_from_diagram(T) if args.source == "diagram" else promotion_matrix(T)
    _emit(args, str(M), M.to_json())
    return 0


def cmd_stack(args) -> int:
    P, Q = parse_tableau_pair(_read(args))
    _tableau_out(args, stack(P, Q))
    return 0


def _pair_out(args, P: StandardTableau, Q: StandardTableau) -> None:
    _emit(args, f"P:\n{to_text(P)}\nQ:\n{to_text(Q)}", {"P": to_json(P)["rows"], "Q": to_json(Q)["rows"]})


def cmd_rs(args) -> int:
    P, Q = rs_insert(parse_permutation(_read(args)))
    _pair_out(args, P, Q)
    return 0


def cmd_rs_inverse(args) -> int:
    word = rs_inverse(*parse_tableau_pair(_read(args)))
    _emit(args, format_permutation(word), list(word))
    return 0


def cmd_viennot(args) -> int:
    pts = parse_points_or_permutation(_read(args), args.points)
    d = Direction(args.dir)
    P, Q = viennot(pts, d)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_shadow_svg(pts, d))
    levels = skeleta(pts, d)
    if args.json:
        data = {"P": to_json(P)["rows"], "Q": to_json(Q)["rows"]}
        if args.skeleta:
            data["skeleta"] = [sorted(list(p) for p in level) for level in levels]
        print(json.dumps(data))
        return 0
    if args.skeleta:
        for k, level in enumerate(levels):
            print(f"S{k}: " + " ".join(f"({x},{y})" for x, y in sorted(level)))
    print(f"P:\n{to_text(P)}\nQ:\n{to_text(Q)}")
    return 0


def cmd_matching(args) -> int:
    M = parse_matching(_read(args))
    cr, ne = crossing_nesting(M)
    _emit(args, f"crossing number: {cr}\nnesting number: {ne}", {"crossing": cr, "nesting": ne})
    return 0


def cmd_chord(args) -> int:
    M = parse_matching(_read(args))
    with open(args.svg, "w", encoding="utf-8") as fh:
        fh.write(render_chord_svg(M))
    cr, ne = crossing_nesting(M)
    _emit(args, f"wrote {args.svg}: {M.size} points, {len(M.blocks)} chords", {"svg": args.svg, "crossing": cr, "nesting": ne})
    return 0


def cmd_verify(args) -> int:
    r, c = args.shape
    kwargs = {}
    if args.theorem != "cor":
        kwargs = {"workers": args.workers, "sample": args.sample, "seed": args.seed}
    elif args.sample is not None or args.workers != 1:
        raise UsageError("--sample and --workers apply to prom-rs and main only")
    report = THEOREMS[args.theorem](r, c, **kwargs)
    _emit(args, report.summary(), report.to_dict())
    if not report.passed and not args.json:
        for fail in report.failures[:10]:
            print("  " + json.dumps(fail), file=sys.stderr)
    return 0 if report.passed else 1


def cmd_enumerate(args) -> int:
    tabs = enumerate_syt(rectangle(*args.shape))
    if args.count:
        _emit(args, str(len(tabs)), len(tabs))
    else:
        _emit(args, "\n".join(short(T) for T in tabs), [to_json(T)["rows"] for T in tabs])
    return 0


# -- parser ------------------------------------------------------------------------


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # on subcommands the defaults are suppressed so flags given before the
    # command are not overwritten
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=default(False), help="machine-readable output")
    parser.add_argument("--input", metavar="FILE", default=default(None), help="read input from FILE (default stdin)")
    parser.add_argument("--seed", type=int, default=default(None), help="seed for randomized sampling")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stacklab", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        _global_flags(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = add("promote", cmd_promote, "apply promotion k times (negative k runs it backwards)")
    p.add_argument("-k", type=int, default=1)
    add("evacuate", cmd_evacuate, "Schützenberger evacuation")
    p = add("gromote", cmd_gromote, "apply gromotion k times")
    p.add_argument("-k", type=int, default=1)
    p.add_argument("--trace", action="store_true", help="show each slide path")
    add("promperms", cmd_promperms, "promotion permutations of a rectangular tableau")
    p = add("pm", cmd_pm, "promotion matrix")
    p.add_argument("--from", dest="source", choices=("diagram", "perms"), default="diagram")
    add("stack", cmd_stack, "stack two tableaux of the same rectangular shape")
    add("rs", cmd_rs, "Robinson-Schensted insertion of a permutation")
    add("rs-inverse", cmd_rs_inverse, "permutation of a tableau pair")
    p = add("viennot", cmd_viennot, "Viennot's shadow-line construction")
    p.add_argument("--dir", choices=[d.value for d in Direction], default="ne")
    p.add_argument("--skeleta", action="store_true", help="list every skeleton")
    p.add_argument("--svg", metavar="FILE", help="also draw the shadow lines")
    p.add_argument("--points", action="store_true", help="treat input as x y lines")
    p = add("matching", cmd_matching, "statistics of a perfect matching")
    p.add_argument("action", choices=("stats",))
    p = add("chord", cmd_chord, "draw a chord diagram")
    p.add_argument("--svg", metavar="FILE", required=True)
    p = add("verify", cmd_verify, "exhaustive theorem sweep over one shape")
    p.add_argument("--shape", type=parse_shape, required=True)
    p.add_argument("--theorem", choices=sorted(THEOREMS), required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--sample", type=int, help="check a random sample of pairs")
    p = add("enumerate", cmd_enumerate, "list the standard tableaux of a rectangle")
    p.add_argument("--shape", type=parse_shape, required=True)
    p.add_argument("--count", action="store_true")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"stacklab: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
