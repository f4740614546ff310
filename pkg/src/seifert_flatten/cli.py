"""Command-line interface.

Exit codes: 0 ok, 1 parse/validation, 2 internal identity, 3 invariants
differ, 4 render failure, 5 generator budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .braids import random_braid_diagram
from .diagram import Diagram, load_diagram, serialize, to_json
from .errors import (
    CrossingLimitError,
    DiagramError,
    GeneratorBudgetError,
    InternalIdentityError,
    RenderError,
)
from .flatten import flatten
from .invariants import LIMIT_ENV, compare_diagrams
from .render import render_svg
from .seifert import analyze
from .table import TABLE, bundled

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_IDENTITY = 2
EXIT_DIFFERENT = 3
EXIT_RENDER = 4
EXIT_GENERATOR = 5

_FORMATS = {".json": "json", ".gauss": "gauss", ".pd": "pd"}


def read_input(source: str, outer: int | None = None) -> Diagram:
    """``table:NAME``, ``-`` for stdin, or a file path; format from extension or sniffing."""
    if source.startswith("table:"):
        d = bundled(source[len("table:"):])
        return load_diagram(serialize(d), "pd", outer, d.name) if outer is not None else d
    if source == "-":
        return load_diagram(sys.stdin.read(), outer_face=outer)
    path = Path(source)
    text = path.read_text()
    return load_diagram(text, _FORMATS.get(path.suffix.lower()), outer, name=path.stem)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _write_diagram(d: Diagram, out: str) -> None:
    text = _dump(to_json(d)) if out.endswith(".json") else serialize(d) + "\n"
    Path(out).write_text(text)


def cmd_info(args) -> int:
    _emit(_dump(analyze(read_input(args.input, args.outer)).report()), args.out)
    return EXIT_OK


def cmd_flatten(args) -> int:
    d = read_input(args.input, args.outer)
    final, report = flatten(d, keep_intermediates=args.step)
    if args.out:
        _write_diagram(final, args.out)
    _emit(_dump(report.to_json()), args.report)
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = compare_diagrams(read_input(args.a), read_input(args.b), args.limit)
    sys.stdout.write(_dump({**rep.to_json(), "all_equal": rep.all_equal}))
    return EXIT_OK if rep.all_equal else EXIT_DIFFERENT


def cmd_render(args) -> int:
    _emit(render_svg(read_input(args.input, args.outer), circles=args.circles), args.out)
    return EXIT_OK


def cmd_gen(args) -> int:
    d = random_braid_diagram(args.strands, args.length, args.seed)
    if args.out:
        _write_diagram(d, args.out)
    else:
        sys.stdout.write(serialize(d) + "\n")
    summary = {"name": d.name, **analyze(d).report()}
    (sys.stderr if not args.out else sys.stdout).write(_dump(summary))
    return EXIT_OK


def cmd_table(args) -> int:
    if args.name is None:
        for k in TABLE.values():
            sys.stdout.write(f"{k.name}\t{k.note}\n")
        return EXIT_OK
    entry = TABLE.get(args.name)
    if entry is None:
        raise KeyError(args.name)
    sys.stdout.write(entry.source + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="seifert-flatten",
                                description="Seifert circuit analysis and flattening of knot diagrams.")
    sub = p.add_subparsers(dest="command", required=True)
    src_help = "diagram file (PD, JSON or Gauss), '-' for stdin, or table:NAME"

    s = sub.add_parser("info", help="print the Seifert analysis report")
    s.add_argument("input", help=src_help)
    s.add_argument("--outer", type=int, default=None, help="outer face id")
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("flatten", help="remove nested Seifert circuits")
    s.add_argument("input", help=src_help)
    s.add_argument("--step", action="store_true", help="include every intermediate diagram")
    s.add_argument("--outer", type=int, default=None, help="outer face id")
    s.add_argument("--out", default=None, help="write the final diagram here (.json for JSON)")
    s.add_argument("--report", default=None, help="write the JSON report here instead of stdout")
    s.set_defaults(func=cmd_flatten)

    s = sub.add_parser("verify", help="compare genus, writhe and Jones polynomial")
    s.add_argument("a", help=src_help)
    s.add_argument("b", help=src_help)
    s.add_argument("--limit", type=int, default=None,
                   help=f"bracket crossing limit (default from ${LIMIT_ENV} or 20)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("render", help="draw the diagram as SVG")
    s.add_argument("input", help=src_help)
    s.add_argument("--circles", action="store_true", help="overlay Seifert circles by depth")
    s.add_argument("--outer", type=int, default=None, help="outer face id")
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("gen", help="random braid-closure knot diagram")
    s.add_argument("--strands", type=int, required=True)
    s.add_argument("--length", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--out", default=None, help="output file (.json for JSON, else PD)")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("table", help="print a bundled diagram, or list them")
    s.add_argument("name", nargs="?", default=None)
    s.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DiagramError, CrossingLimitError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    except InternalIdentityError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_IDENTITY
    except RenderError as exc:
        print(f"render failed: {exc}", file=sys.stderr)
        return EXIT_RENDER
    except GeneratorBudgetError as exc:
        print(f"generator: {exc}", file=sys.stderr)
        return EXIT_GENERATOR


if __name__ == "__main__":
    sys.exit(main())
