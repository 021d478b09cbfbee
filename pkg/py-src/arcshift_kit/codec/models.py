"""Structured (JSON) mirrors of the text formats, for tooling."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from ..gauss import Endpoint, GaussDiagram, Role, ensure_valid
from ..moves.types import MoveScript
from .script import parse_move


class CodecModel(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


class EndpointModel(CodecModel):
    chord: int = Field(ge=1)
    role: Literal["O", "U"]


class DiagramModel(CodecModel):
    """Components as endpoint lists (1-based order) plus the sign table."""

    components: list[list[EndpointModel]] = Field(min_length=1)
    signs: dict[int, Literal[1, -1]] = Field(default_factory=dict)

    @classmethod
    def from_diagram(cls, d: GaussDiagram) -> DiagramModel:
        canonical = d.renumbered()
        return cls(
            components=[
                [EndpointModel(chord=e.chord, role=e.role.value) for e in component]
                for component in canonical.components
            ],
            signs={chord: int(sign) for chord, sign in canonical.signs},
        )

    def to_diagram(self) -> GaussDiagram:
        diagram = GaussDiagram.build(
            ([Endpoint(e.chord, Role(e.role)) for e in component] for component in self.components),
            self.signs,
        )
        return ensure_valid(diagram)


class ScriptModel(CodecModel):
    moves: list[str] = Field(default_factory=list)
    arc_shift_cost: int = Field(default=0, ge=0)

    @classmethod
    def from_script(cls, script: MoveScript) -> ScriptModel:
        return cls(moves=script.lines(), arc_shift_cost=script.arc_shift_cost)

    def to_script(self) -> MoveScript:
        return MoveScript(
            tuple(parse_move(line, line_number=i) for i, line in enumerate(self.moves, start=1))
        )


def diagram_to_json(d: GaussDiagram, *, indent: int | None = None) -> str:
    return DiagramModel.from_diagram(d).model_dump_json(indent=indent)


def diagram_from_json(text: str) -> GaussDiagram:
    return DiagramModel.model_validate_json(text).to_diagram()
