"""Move script text format: one move per line.

Verbs (1-based components, 0-based cyclic positions)::

    R1- <id>
    R1+ <comp> <gap> <sign> <OU|UO> [<id>]
    R2- <id> <id>
    R2+ <ocomp> <ogap> <ucomp> <ugap> <sign> <PAR|ANTI> [<id> <id>]
    R3  <id> <id> <id>
    AS  <comp> <pos>
    SGN <id>
    XI  <comp> <pos>
    FO  <comp> <pos>
    FU  <comp> <pos>

Blank lines and ``#`` comments are ignored; ``';'`` also separates moves.
Scripts serialized against their starting diagram tag every AS and SGN line
with its role pair, e.g. ``AS 1 0  # TH``.
"""

from __future__ import annotations

from typing import Callable

from ..errors import ScriptError
from ..gauss import GaussDiagram, Sign
from ..moves.engine import apply, classify_arc_shift
from ..moves.types import MoveInstance, MoveKind, MoveScript


def _int(text: str, *, minimum: int, what: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ValueError(f"{what} must be an integer, got {text!r}") from None
    if value < minimum:
        raise ValueError(f"{what} must be >= {minimum}, got {value}")
    return value


def _sign(text: str) -> Sign:
    try:
        return Sign.of(text)
    except ValueError:
        raise ValueError(f"sign must be + or -, got {text!r}") from None


def _choice(text: str, options: tuple[str, ...], what: str) -> str:
    if text not in options:
        raise ValueError(f"{what} must be one of {'|'.join(options)}, got {text!r}")
    return text


def _arity(args: list[str], *counts: int) -> None:
    if len(args) not in counts:
        expected = " or ".join(map(str, counts))
        raise ValueError(f"expected {expected} arguments, got {len(args)}")


def _chord_ids(args: list[str]) -> tuple[int, ...]:
    return tuple(_int(a, minimum=1, what="chord id") for a in args)


def _positional(factory: Callable[[int, int], MoveInstance]) -> Callable[[list[str]], MoveInstance]:
    def build(args: list[str]) -> MoveInstance:
        _arity(args, 2)
        return factory(
            _int(args[0], minimum=1, what="component"),
            _int(args[1], minimum=0, what="position"),
        )

    return build


def _r1_remove(args: list[str]) -> MoveInstance:
    _arity(args, 1)
    return MoveInstance.r1_remove(*_chord_ids(args))


def _r1_insert(args: list[str]) -> MoveInstance:
    _arity(args, 4, 5)
    chord = _chord_ids(args[4:])
    return MoveInstance.r1_insert(
        _int(args[0], minimum=1, what="component"),
        _int(args[1], minimum=0, what="gap"),
        _sign(args[2]),
        _choice(args[3], ("OU", "UO"), "order"),  # type: ignore[arg-type]
        chord[0] if chord else None,
    )


def _r2_remove(args: list[str]) -> MoveInstance:
    _arity(args, 2)
    return MoveInstance.r2_remove(*_chord_ids(args))


def _r2_insert(args: list[str]) -> MoveInstance:
    _arity(args, 6, 8)
    chords = _chord_ids(args[6:])
    return MoveInstance.r2_insert(
        _int(args[0], minimum=1, what="over component"),
        _int(args[1], minimum=0, what="over gap"),
        _int(args[2], minimum=1, what="under component"),
        _int(args[3], minimum=0, what="under gap"),
        _sign(args[4]),
        _choice(args[5], ("PAR", "ANTI"), "order"),  # type: ignore[arg-type]
        chords if chords else None,  # type: ignore[arg-type]
    )


def _r3(args: list[str]) -> MoveInstance:
    _arity(args, 3)
    return MoveInstance.r3(*_chord_ids(args))


def _sign_shift(args: list[str]) -> MoveInstance:
    _arity(args, 1)
    return MoveInstance.sign_shift(*_chord_ids(args))


_PARSERS: dict[str, Callable[[list[str]], MoveInstance]] = {
    MoveKind.R1_REMOVE.verb: _r1_remove,
    MoveKind.R1_INSERT.verb: _r1_insert,
    MoveKind.R2_REMOVE.verb: _r2_remove,
    MoveKind.R2_INSERT.verb: _r2_insert,
    MoveKind.R3.verb: _r3,
    MoveKind.ARC_SHIFT.verb: _positional(MoveInstance.arc_shift),
    MoveKind.SIGN_SHIFT.verb: _sign_shift,
    MoveKind.XI.verb: _positional(MoveInstance.xi),
    MoveKind.FORBIDDEN_OVER.verb: _positional(MoveInstance.forbidden_over),
    MoveKind.FORBIDDEN_UNDER.verb: _positional(MoveInstance.forbidden_under),
}


def parse_move(line: str, *, line_number: int = 1, column: int = 1) -> MoveInstance:
    words = line.split()
    if not words:
        raise ScriptError("empty move", line=line_number, column=column)
    verb, args = words[0], words[1:]
    parser = _PARSERS.get(verb)
    if parser is None:
        raise ScriptError(f"unknown move verb {verb!r}", line=line_number, column=column)
    try:
        return parser(args)
    except ValueError as exc:
        raise ScriptError(f"{verb}: {exc}", line=line_number, column=column) from None


def parse_script(text: str) -> MoveScript:
    moves: list[MoveInstance] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        offset = 0
        for chunk in body.split(";"):
            stripped = chunk.strip()
            if stripped:
                column = offset + chunk.index(stripped[0]) + 1
                moves.append(parse_move(stripped, line_number=line_number, column=column))
            offset += len(chunk) + 1
    return MoveScript(tuple(moves))


def serialize_script(script: MoveScript, start: GaussDiagram | None = None) -> str:
    """One move per line; with ``start``, arc shift lines carry their variant."""
    if start is None:
        return "".join(line + "\n" for line in script.lines())
    lines: list[str] = []
    current = start
    for move in script:
        line = move.to_line()
        if move.kind.is_arc_shift:
            line = f"{line}  # {classify_arc_shift(current, move).value}"
        lines.append(line + "\n")
        current = apply(current, move)
    return "".join(lines)
