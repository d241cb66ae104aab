"""``robcat`` command line.

Exit codes: 0 success, 1 input or validation error, 2 verified infeasibility
(the certificate is still written).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .core import (
    DissimilaritySpace,
    SpaceError,
    find_compatible_order,
    format_space,
    is_identity_compatible,
    is_strict,
    parse_space,
    parse_value,
    permute,
)
from .feasibility import Certificate, draw_in_caterpillar, outcome_to_json
from .lab import (
    ENUMERATION_LIMIT,
    GENERATORS,
    enumerate_strict_spaces,
    exhaustive_drawing_check,
    generate,
    random_tied_robinson,
    reduction_experiment,
)
from .milp import MilpConfig, export_milp
from .strictify import center_matrix, strict_mapping
from .treegeom import caterpillar_to_dot, caterpillar_to_json

EXIT_OK, EXIT_INPUT, EXIT_INFEASIBLE = 0, 1, 2
ORDER_SEARCH_LIMIT = 10

log = logging.getLogger("robcat")


class CliError(Exception):
    """Bad arguments or input; reported on stderr with exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for infeasibility
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _read_space(args) -> DissimilaritySpace:
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            text = Path(args.input).read_text()
        except OSError as e:
            raise CliError(f"cannot read {args.input}: {e.strerror}") from None
    return parse_space(text)


def _emit(args, text: str) -> None:
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)


def _json(obj, compact: bool = False) -> str:
    return (json.dumps(obj) if compact else json.dumps(obj, indent=2)) + "\n"


def _ordered(args, space: DissimilaritySpace) -> tuple[DissimilaritySpace, Optional[list[int]]]:
    """Identity-compatible view of ``space``; reorders only when ``--reorder`` is given."""
    if is_identity_compatible(space):
        return space, None
    if not getattr(args, "reorder", False):
        raise CliError("space is not identity-compatible (use --reorder to search for an order)")
    if space.n > ORDER_SEARCH_LIMIT:
        raise CliError(f"order search limited to n <= {ORDER_SEARCH_LIMIT}")
    order = find_compatible_order(space, ORDER_SEARCH_LIMIT)
    if order is None:
        raise CliError("space is not Robinson: no compatible order exists")
    return permute(space, order), list(order.perm)


def cmd_check(args) -> int:
    space = _read_space(args)
    ident = is_identity_compatible(space)
    order = None
    searched = space.n <= ORDER_SEARCH_LIMIT
    if searched:
        found = find_compatible_order(space, ORDER_SEARCH_LIMIT)
        order = list(found.perm) if found else None
    report = {
        "n": space.n,
        "identity_compatible": ident,
        "strict": is_strict(space),
        "robinson": ident or (order is not None if searched else None),
        "compatible_order": order,
    }
    if args.format == "json":
        _emit(args, _json(report))
    else:
        lines = [f"identity-compatible: {str(ident).lower()}, strict: {str(report['strict']).lower()}"]
        if searched:
            lines.append("compatible order: " + (" ".join(map(str, order)) if order else "none"))
        else:
            lines.append(f"compatible order: not searched (n > {ORDER_SEARCH_LIMIT})")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_strictify(args) -> int:
    space, _ = _ordered(args, _read_space(args))
    _emit(args, format_space(strict_mapping(space)))
    return EXIT_OK


def cmd_centers(args) -> int:
    space, order = _ordered(args, _read_space(args))
    strict = space if is_strict(space) else strict_mapping(space)
    cm = center_matrix(strict)
    if args.format == "text":
        _emit(args, "\n".join(" ".join(map(str, row)) for row in cm.c) + "\n")
    else:
        obj = cm.to_json()
        if order:
            obj["order"] = order
        _emit(args, _json(obj, compact=True))
    return EXIT_OK


def cmd_draw(args) -> int:
    space, order = _ordered(args, _read_space(args))
    result = draw_in_caterpillar(space)
    if isinstance(result, Certificate):
        obj = outcome_to_json(result)
        obj["verified"] = result.verify()
        if order:
            obj["order"] = order
        _emit(args, _json(obj))
        print("no valid caterpillar drawing: certificate written", file=sys.stderr)
        return EXIT_INFEASIBLE
    labels = [str(k) for k in order] if order else None
    if args.format == "dot":
        _emit(args, caterpillar_to_dot(result, labels))
    else:
        obj = {"status": "drawing", **caterpillar_to_json(result)}
        if order:
            obj["order"] = order
        _emit(args, _json(obj))
    if args.figure:
        from .plotting import plot_caterpillar

        plot_caterpillar(result, args.figure, labels)
    return EXIT_OK


def _positive_fraction(token: str) -> Fraction:
    try:
        v = parse_value(token)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {token}")
    return v


def cmd_export_milp(args) -> int:
    space, _ = _ordered(args, _read_space(args))
    cfg = MilpConfig(epsilon=args.epsilon, big_m=args.big_m, relaxed_drawing_rows=args.relaxed_rows)
    _emit(args, export_milp(space, cfg))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.generator == "tied":
        space = random_tied_robinson(args.n, args.seed)
    else:
        space = generate(args.generator, args.n, args.seed)
    _emit(args, format_space(space))
    return EXIT_OK


def _sizes(token: str) -> list[int]:
    try:
        sizes = [int(t) for t in token.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {token!r}") from None
    if not sizes or any(n < 2 for n in sizes):
        raise argparse.ArgumentTypeError("sizes must be a non-empty list of integers >= 2")
    return sizes


def cmd_experiment(args) -> int:
    if args.samples < 1:
        raise CliError("--samples must be >= 1")
    report = reduction_experiment(args.sizes, args.samples, args.seed, generator=args.generator,
                                  solve=args.solve, workers=args.workers)
    _emit(args, _json(report.to_json()) if args.format == "json" else report.table())
    if args.figure:
        from .plotting import plot_experiment

        plot_experiment(report, args.figure)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if not 2 <= args.n <= ENUMERATION_LIMIT:
        raise CliError(f"enumeration needs 2 <= n <= {ENUMERATION_LIMIT}")
    if args.check:
        rep = exhaustive_drawing_check(args.n)
        if args.format == "json":
            _emit(args, _json(rep.to_json()))
        else:
            _emit(args, f"n={rep.n} spaces={rep.spaces} drawings={rep.feasible} "
                        f"infeasible={rep.infeasible} center_classes={rep.center_classes}\n"
                  + "".join(format_space(s) for s in rep.infeasible_spaces))
        return EXIT_INFEASIBLE if rep.infeasible else EXIT_OK
    spaces = list(enumerate_strict_spaces(args.n))
    if args.format == "json":
        _emit(args, _json({"n": args.n, "count": len(spaces),
                           "spaces": [[[int(v) for v in row] for row in s.rho] for s in spaces]}))
    elif args.format == "count":
        _emit(args, f"{len(spaces)}\n")
    else:
        _emit(args, f"# {len(spaces)} spaces\n" + "\n".join(format_space(s) for s in spaces))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--input", "-i", help="matrix file ('-' or omitted: stdin)")
    common.add_argument("--output", "-o", help="output file ('-' or omitted: stdout)")
    common.add_argument("--seed", type=int, default=0, help="PRNG seed (default 0)")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")

    parser = _Parser(prog="robcat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, formats, default, help_):
        p = sub.add_parser(name, parents=[common], help=help_, description=help_)
        p.add_argument("--format", "-f", choices=formats, default=default)
        p.set_defaults(func=func)
        return p

    add("check", cmd_check, ["text", "json"], "text", "report Robinson and strictness status")
    p = add("strictify", cmd_strictify, ["text"], "text", "replace values by their strict ranks")
    p.add_argument("--reorder", action="store_true", help=f"search a compatible order (n <= {ORDER_SEARCH_LIMIT})")
    p = add("centers", cmd_centers, ["json", "text"], "json", "matrix of left and right centers")
    p.add_argument("--reorder", action="store_true", help=f"search a compatible order (n <= {ORDER_SEARCH_LIMIT})")
    p = add("draw", cmd_draw, ["json", "dot"], "json", "valid caterpillar drawing or infeasibility certificate")
    p.add_argument("--reorder", action="store_true", help=f"search a compatible order (n <= {ORDER_SEARCH_LIMIT})")
    p.add_argument("--figure", help="also render the caterpillar to this image file")
    p = add("export-milp", cmd_export_milp, ["text"], "text", "write the general tree MILP as a text model")
    p.add_argument("--reorder", action="store_true", help=f"search a compatible order (n <= {ORDER_SEARCH_LIMIT})")
    p.add_argument("--epsilon", type=_positive_fraction, default=Fraction(1))
    p.add_argument("--big-m", type=_positive_fraction, default=None, help="default 1000*n*C(n,2)")
    p.add_argument("--relaxed-rows", action="store_true", help="emit d_ij <= d_ik + eps drawing rows")
    p = add("gen", cmd_gen, ["text"], "text", "random identity-compatible space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--generator", choices=list(GENERATORS) + ["tied"], default="increments")
    p = add("experiment", cmd_experiment, ["table", "json"], "table", "redundancy elimination statistics")
    p.add_argument("--sizes", type=_sizes, default=[10, 20, 30, 40, 50, 60, 70, 80, 90, 100])
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--generator", choices=GENERATORS, default="increments")
    p.add_argument("--solve", action="store_true", help="also decide drawability of every instance")
    p.add_argument("--workers", type=int, default=None, help="process count (default: $ROBCAT_WORKERS or 1)")
    p.add_argument("--figure", help="render mean and spread per size to this image file")
    p = add("enumerate", cmd_enumerate, ["text", "json", "count"], "text", "all strict spaces on n elements")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", action="store_true", help="draw every space and report infeasible ones")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (CliError, SpaceError, OSError) as e:
        print(f"robcat {args.command}: error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
