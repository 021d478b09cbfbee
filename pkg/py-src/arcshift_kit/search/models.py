from __future__ import annotations

from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..codec.script import parse_move
from ..moves import MoveScript

DEFAULT_MAX_ARC_SHIFTS = 4
DEFAULT_MAX_STATES = 200_000
DEFAULT_MAX_CHORDS_INFLIGHT = 16
DEFAULT_WORKERS = 1

BudgetStatus = Literal["complete", "exhausted", "not-needed"]


class SearchModel(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)


class SearchBudget(SearchModel):
    max_arc_shifts: int = Field(default=DEFAULT_MAX_ARC_SHIFTS, gt=0)
    max_states: int = Field(default=DEFAULT_MAX_STATES, gt=0)
    max_chords_inflight: int = Field(default=DEFAULT_MAX_CHORDS_INFLIGHT, gt=0)
    workers: int = Field(default=DEFAULT_WORKERS, gt=0)
    allow_r3: bool = False
    allow_r2_insert: bool = False
    seed_with_planner: bool = True


class Obstructed(SearchModel):
    """No arc shift sequence reaches the unlink: some parity bit is odd."""

    kind: Literal["obstructed"] = "obstructed"
    odd_entries: tuple[tuple[int, int], ...]

    def __str__(self) -> str:
        return "obstructed (odd " + ", ".join(f"vlk({i},{j})" for i, j in self.odd_entries) + ")"


class AtLeast(SearchModel):
    kind: Literal["at-least"] = "at-least"
    value: int = Field(ge=0)

    def __str__(self) -> str:
        return str(self.value)


class AtMost(SearchModel):
    """Upper bound certified by a replay-verified witness script."""

    kind: Literal["at-most"] = "at-most"
    value: int = Field(ge=0)
    witness: tuple[str, ...] = ()

    @classmethod
    def of(cls, script: MoveScript) -> AtMost:
        return cls(value=script.arc_shift_cost, witness=tuple(script.lines()))

    @property
    def script(self) -> MoveScript:
        return MoveScript(
            tuple(parse_move(line, line_number=i) for i, line in enumerate(self.witness, start=1))
        )

    def __str__(self) -> str:
        return str(self.value)


LowerBound = Annotated[Obstructed | AtLeast, Field(discriminator="kind")]


class SearchStats(SearchModel):
    states_explored: int = Field(default=0, ge=0)
    levels_completed: int = Field(default=0, ge=0)
    budget_status: BudgetStatus = "not-needed"


class Bracket(SearchModel):
    lower: LowerBound
    upper: AtMost | None = None
    exact: bool = False
    stats: SearchStats = Field(default_factory=SearchStats)

    @model_validator(mode="after")
    def _check_consistency(self) -> Bracket:
        if isinstance(self.lower, Obstructed):
            if self.upper is not None or self.exact:
                raise ValueError("an obstructed bracket has no upper bound")
            return self
        if self.upper is not None and self.upper.value < self.lower.value:
            raise ValueError(f"upper bound {self.upper.value} below lower bound {self.lower.value}")
        expected = self.upper is not None and self.upper.value == self.lower.value
        if self.exact != expected:
            raise ValueError("exact must hold exactly when the bounds meet")
        return self

    @property
    def obstructed(self) -> bool:
        return isinstance(self.lower, Obstructed)

    def summary(self) -> str:
        parts = [f"lower {self.lower}", f"upper {self.upper if self.upper is not None else 'none'}"]
        if self.exact:
            parts.append("exact")
        if self.upper is not None:
            parts.append("witness: " + ("; ".join(self.upper.witness) or "(empty)"))
        return ", ".join(parts)

    def to_text(self) -> str:
        return "\n".join(
            [
                self.summary(),
                f"states explored: {self.stats.states_explored}",
                f"levels completed: {self.stats.levels_completed}",
                f"budget status: {self.stats.budget_status}",
            ]
        )
