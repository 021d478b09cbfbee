from __future__ import annotations

from dataclasses import dataclass

from pydantic import BaseModel, ConfigDict, Field

from ..gauss import GaussDiagram
from ..moves import MoveScript


class PlannerModel(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)


class PhaseCosts(PlannerModel):
    """Arc shift cost spent in each planner phase."""

    self_alignment: int = Field(default=0, ge=0)
    mixed_alignment: int = Field(default=0, ge=0)
    direction_reordering: int = Field(default=0, ge=0)
    sign_adjustment: int = Field(default=0, ge=0)
    layout: int = Field(default=0, ge=0)

    @property
    def total(self) -> int:
        return (
            self.self_alignment
            + self.mixed_alignment
            + self.direction_reordering
            + self.sign_adjustment
            + self.layout
        )


@dataclass(frozen=True, slots=True)
class Reduction:
    """``replay(input, script) == output``."""

    input: GaussDiagram
    script: MoveScript
    output: GaussDiagram

    @property
    def arc_shift_cost(self) -> int:
        return self.script.arc_shift_cost

    def then(self, other: Reduction) -> Reduction:
        return Reduction(self.input, self.script + other.script, other.output)


@dataclass(frozen=True, slots=True)
class UnknotReport:
    reduction: Reduction
    phases: PhaseCosts

    @property
    def script(self) -> MoveScript:
        return self.reduction.script


@dataclass(frozen=True, slots=True)
class Equivalence:
    """Outcome of an equivalence query; truthy when the diagrams are equivalent."""

    equivalent: bool
    witness: MoveScript | None = None

    def __bool__(self) -> bool:
        return self.equivalent
