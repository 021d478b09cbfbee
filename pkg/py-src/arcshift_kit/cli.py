"""Command line interface.

Usage:
    arcshift [-v] [--seed N] <verb> ...

Verbs: validate, inv, classify, eq, unknot, bounds, mirror, apply, gen, classes.
Diagram and script arguments are file paths, or ``-`` for standard input.
Exit codes: 0 success, 1 mathematical impossibility, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Callable, Sequence

from pydantic import ValidationError

from .codec import DiagramModel, ScriptModel, diagram_to_json, parse, parse_script, serialize, serialize_script
from .errors import (
    DiagramError,
    GaussCodeError,
    GenerationError,
    MoveError,
    NotHomogeneousProperError,
    OddWritheUndefinedError,
    ReplayError,
    ScriptError,
)
from .families import FAMILY_NAMES, FamilySpec, all_canonical, gen_canonical
from .gauss import GaussDiagram, mirror
from .invariants import parity_matrix, report
from .planner import equivalent, mirror_equivalent, replay, unknot_report
from .search import SearchBudget, bracket

logger = logging.getLogger(__name__)

LOG_LEVEL_ENV = "ARCSHIFT_LOG_LEVEL"

EXIT_OK = 0
EXIT_IMPOSSIBLE = 1
EXIT_BAD_INPUT = 2

_BAD_INPUT = (GaussCodeError, ScriptError, DiagramError, GenerationError, ReplayError, MoveError, OSError, ValueError)
_IMPOSSIBLE = (NotHomogeneousProperError, OddWritheUndefinedError)


def _configure_logging(verbosity: int) -> None:
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        name = os.environ.get(LOG_LEVEL_ENV, "WARNING").upper()
        level = getattr(logging, name, logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def _first_error(exc: ValidationError) -> str:
    first = exc.errors()[0]
    where = ".".join(str(part) for part in first["loc"])
    return f"{where}: {first['msg']}" if where else first["msg"]


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _diagram(path: str) -> GaussDiagram:
    return parse(_read(path))


def _flag(value: bool) -> str:
    return "true" if value else "false"


# ── Verbs ────────────────────────────────────────────────────────────────


def _cmd_validate(args: argparse.Namespace) -> int:
    d = _diagram(args.diagram)
    print(f"valid: {d.n} components, {d.chord_count} chords")
    return EXIT_OK


def _cmd_inv(args: argparse.Namespace) -> int:
    result = report(_diagram(args.diagram))
    print(result.model_dump_json(indent=2) if args.json else result.to_text())
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace) -> int:
    d = _diagram(args.diagram)
    parity = parity_matrix(d)
    canonical = gen_canonical(parity)
    if args.json:
        payload = {
            "parity": parity.model_dump(),
            "homogeneous_proper": parity.is_zero,
            "canonical": DiagramModel.from_diagram(canonical).model_dump(),
        }
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    for i, j in parity.ordered_pairs(parity.n):
        print(f"parity({i},{j}) = {parity.bit(i, j)}")
    print(f"homogeneous_proper = {_flag(parity.is_zero)}")
    print(f"class: {serialize(canonical)}")
    return EXIT_OK


def _cmd_eq(args: argparse.Namespace) -> int:
    result = equivalent(_diagram(args.first), _diagram(args.second), witness=args.witness)
    print(f"equivalent: {_flag(result.equivalent)}")
    if result.witness is not None:
        print(f"witness: {result.witness}")
    return EXIT_OK


def _cmd_unknot(args: argparse.Namespace) -> int:
    d = _diagram(args.diagram)
    result = unknot_report(d)
    script = result.script
    logger.info("phase costs: %s", result.phases.model_dump())
    if args.json:
        print(ScriptModel.from_script(script).model_dump_json(indent=2))
        return EXIT_OK
    if args.script:
        Path(args.script).write_text(serialize_script(script, d), encoding="utf-8")
    else:
        sys.stdout.write(serialize_script(script, d))
    print(f"arc shift cost: {script.arc_shift_cost}")
    return EXIT_OK


def _cmd_bounds(args: argparse.Namespace) -> int:
    budget = SearchBudget(
        max_arc_shifts=args.depth,
        max_states=args.states,
        workers=args.workers,
        allow_r3=args.allow_r3,
        allow_r2_insert=args.allow_r2_insert,
        seed_with_planner=not args.no_planner,
    )
    result = bracket(_diagram(args.diagram), budget)
    print(result.model_dump_json(indent=2) if args.json else result.to_text())
    return EXIT_OK


def _cmd_mirror(args: argparse.Namespace) -> int:
    d = _diagram(args.diagram)
    print(serialize(mirror(d)))
    if args.check:
        print(f"equivalent to mirror: {_flag(mirror_equivalent(d).equivalent)}")
    return EXIT_OK


def _cmd_apply(args: argparse.Namespace) -> int:
    d = _diagram(args.diagram)
    script = parse_script(_read(args.script))
    print(serialize(replay(d, script)))
    return EXIT_OK


def _parse_pair(token: str) -> tuple[int, int]:
    over, sep, under = token.partition(",")
    if not sep:
        raise GenerationError(f"parity entry must look like I,J, got {token!r}")
    try:
        return int(over), int(under)
    except ValueError:
        raise GenerationError(f"parity entry must look like I,J, got {token!r}") from None


def _family_spec(args: argparse.Namespace) -> FamilySpec:
    params: list[str] = args.params
    if args.family == "canonical":
        if not params:
            raise GenerationError("canonical takes a component count and I,J entries")
        numbers, pairs = params[:1], params[1:]
        odd = tuple(_parse_pair(token) for token in pairs)
    else:
        numbers, odd = params, ()
    try:
        values = tuple(int(value) for value in numbers)
    except ValueError:
        raise GenerationError(f"family {args.family!r} takes integer arguments") from None
    return FamilySpec(
        name=args.family,
        args=values,
        odd=odd,
        seed=args.seed,
        homogeneous_proper=args.homogeneous_proper,
    )


def _cmd_gen(args: argparse.Namespace) -> int:
    d = _family_spec(args).generate()
    print(diagram_to_json(d, indent=2) if args.json else serialize(d))
    return EXIT_OK


def _cmd_classes(args: argparse.Namespace) -> int:
    for d in all_canonical(args.n):
        print(serialize(d))
    return EXIT_OK


# ── Parser ───────────────────────────────────────────────────────────────


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcshift",
        description="Gauss diagrams of virtual links: invariants, arc shift unknotting and brackets.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    parser.add_argument("--seed", type=int, default=0, help="seed for every random path")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    def verb(name: str, handler: Callable[[argparse.Namespace], int], help_text: str) -> argparse.ArgumentParser:
        command = sub.add_parser(name, help=help_text)
        command.set_defaults(handler=handler)
        return command

    command = verb("validate", _cmd_validate, "parse and validate a diagram")
    command.add_argument("diagram")

    command = verb("inv", _cmd_inv, "invariant report")
    command.add_argument("diagram")
    command.add_argument("--json", action="store_true")

    command = verb("classify", _cmd_classify, "parity matrix and canonical class representative")
    command.add_argument("diagram")
    command.add_argument("--json", action="store_true")

    command = verb("eq", _cmd_eq, "arc shift equivalence of two diagrams")
    command.add_argument("first")
    command.add_argument("second")
    command.add_argument("--witness", action="store_true")

    command = verb("unknot", _cmd_unknot, "unknotting script for a homogeneous proper diagram")
    command.add_argument("diagram")
    command.add_argument("--script", metavar="OUT", help="write the script to OUT")
    command.add_argument("--json", action="store_true")

    command = verb("bounds", _cmd_bounds, "arc shift number bracket")
    command.add_argument("diagram")
    command.add_argument("--depth", type=int, default=SearchBudget().max_arc_shifts)
    command.add_argument("--states", type=int, default=SearchBudget().max_states)
    command.add_argument("--workers", type=int, default=SearchBudget().workers)
    command.add_argument("--allow-r3", action="store_true")
    command.add_argument("--allow-r2-insert", action="store_true")
    command.add_argument("--no-planner", action="store_true", help="search without the planner seed")
    command.add_argument("--json", action="store_true")

    command = verb("mirror", _cmd_mirror, "mirror image")
    command.add_argument("diagram")
    command.add_argument("--check", action="store_true", help="also report mirror equivalence")

    command = verb("apply", _cmd_apply, "replay a move script")
    command.add_argument("diagram")
    command.add_argument("script")

    command = verb("gen", _cmd_gen, "generate a family member")
    command.add_argument("family", choices=FAMILY_NAMES)
    command.add_argument("params", nargs="*", help="integer parameters; I,J entries for canonical")
    command.add_argument("--homogeneous-proper", action="store_true")
    command.add_argument("--json", action="store_true")

    command = verb("classes", _cmd_classes, "every canonical class representative")
    command.add_argument("n", type=int)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return args.handler(args)
    except _IMPOSSIBLE as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IMPOSSIBLE
    except ValidationError as exc:
        print(f"error: {_first_error(exc)}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except _BAD_INPUT as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
