"""Gauss code text format.

Grammar::

    diagram   := component (';' component)*
    component := token*
    token     := ('O' | 'U') <positive integer> ('+' | '-')

Tokens are whitespace separated, ``';'`` may be surrounded by whitespace and
a trailing ``';'`` denotes a final empty component.
"""

from __future__ import annotations

import bisect
import re
from dataclasses import dataclass

from ..errors import GaussCodeError
from ..gauss import Endpoint, GaussDiagram, Role, Sign, ensure_valid

_LEXEME = re.compile(r"\s+|;|[^\s;]+")
_TOKEN = re.compile(r"([OU])([1-9][0-9]*)([+-])")


class _Locator:
    """Offset -> (line, column), both 1-based."""

    def __init__(self, text: str) -> None:
        self._starts = [0] + [m.end() for m in re.finditer(r"\n", text)]

    def __call__(self, offset: int) -> tuple[int, int]:
        line = bisect.bisect_right(self._starts, offset)
        return line, offset - self._starts[line - 1] + 1


@dataclass(frozen=True, slots=True)
class _Occurrence:
    role: Role
    sign: Sign
    line: int
    column: int


def parse(text: str) -> GaussDiagram:
    """Parse Gauss code text; every failure is a located :class:`GaussCodeError`."""
    locate = _Locator(text)
    components: list[list[Endpoint]] = [[]]
    seen: dict[int, list[_Occurrence]] = {}

    for match in _LEXEME.finditer(text):
        lexeme = match.group()
        if lexeme.isspace():
            continue
        if lexeme == ";":
            components.append([])
            continue

        line, column = locate(match.start())
        token = _TOKEN.fullmatch(lexeme)
        if token is None:
            raise GaussCodeError(f"bad token {lexeme!r}", line=line, column=column)

        role = Role(token.group(1))
        chord = int(token.group(2))
        sign = Sign.of(token.group(3))
        previous = seen.setdefault(chord, [])
        if len(previous) == 2:
            raise GaussCodeError(f"chord {chord} appears more than twice", line=line, column=column)
        if previous:
            if previous[0].role is role:
                name = "Over" if role is Role.OVER else "Under"
                raise GaussCodeError(
                    f"chord {chord} has two {name} endpoints", line=line, column=column
                )
            if previous[0].sign is not sign:
                raise GaussCodeError(f"sign mismatch for chord {chord}", line=line, column=column)
        previous.append(_Occurrence(role, sign, line, column))
        components[-1].append(Endpoint(chord, role))

    for chord, occurrences in seen.items():
        if len(occurrences) != 2:
            first = occurrences[0]
            raise GaussCodeError(
                f"chord {chord} appears once", line=first.line, column=first.column
            )

    diagram = GaussDiagram.build(
        components, {chord: occurrences[0].sign for chord, occurrences in seen.items()}
    )
    return ensure_valid(diagram)


def serialize(d: GaussDiagram) -> str:
    """Deterministic text: chords renamed by first occurrence, stored rotation kept."""
    canonical = d.renumbered()
    signs = canonical.sign_map
    blocks = [
        " ".join(endpoint.token(signs[endpoint.chord]) for endpoint in component)
        for component in canonical.components
    ]
    text = ";".join(f" {block} " if block else "" for block in blocks)
    return re.sub(r"\s+", " ", text).strip()
