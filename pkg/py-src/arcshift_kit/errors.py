"""Exception hierarchy for arcshift-kit."""

from __future__ import annotations

from typing import Any, Sequence


class ArcShiftError(RuntimeError):
    """Base class for every error raised by the package."""


class GaussCodeError(ArcShiftError):
    def __init__(self, message: str, *, line: int, column: int) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.reason = message
        self.line = line
        self.column = column


class ScriptError(ArcShiftError):
    def __init__(self, message: str, *, line: int, column: int = 1) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.reason = message
        self.line = line
        self.column = column


class DiagramError(ArcShiftError):
    def __init__(self, message: str, *, violations: Sequence[Any] = ()) -> None:
        super().__init__(message)
        self.violations = list(violations)


class MoveError(ArcShiftError):
    """A move whose preconditions do not hold on the given diagram."""

    def __init__(self, message: str, *, move: Any, reason: str) -> None:
        super().__init__(message)
        self.move = move
        self.reason = reason


class ReplayError(ArcShiftError):
    def __init__(self, message: str, *, index: int, move: Any) -> None:
        super().__init__(message)
        self.index = index
        self.move = move


class NotHomogeneousProperError(ArcShiftError):
    def __init__(self, message: str, *, odd_entries: Sequence[tuple[int, int]]) -> None:
        super().__init__(message)
        self.odd_entries = list(odd_entries)


class OddWritheUndefinedError(ArcShiftError):
    def __init__(self, message: str, *, component: int) -> None:
        super().__init__(message)
        self.component = component


class GenerationError(ArcShiftError):
    def __init__(self, message: str, *, seed: int | None = None) -> None:
        super().__init__(message)
        self.seed = seed
