from __future__ import annotations

import logging

from ..errors import MoveError, ReplayError
from ..gauss import GaussDiagram
from ..moves import MoveInstance, MoveScript, apply, invert

logger = logging.getLogger(__name__)


def replay(d: GaussDiagram, script: MoveScript) -> GaussDiagram:
    """Apply ``script`` move by move; the error names the first failing index (0-based)."""
    current = d
    for index, move in enumerate(script):
        try:
            current = apply(current, move)
        except MoveError as exc:
            raise ReplayError(
                f"move {index} ({move.to_line()}) is not applicable: {exc}",
                index=index,
                move=move,
            ) from exc
    logger.debug("replayed %d moves", len(script))
    return current


def inverse_script(d: GaussDiagram, script: MoveScript) -> MoveScript:
    """Script taking ``replay(d, script)`` back to ``d`` exactly."""
    inverses: list[MoveInstance] = []
    current = d
    for index, move in enumerate(script):
        try:
            inverses.append(invert(move, current))
            current = apply(current, move)
        except MoveError as exc:
            raise ReplayError(
                f"move {index} ({move.to_line()}) is not applicable: {exc}",
                index=index,
                move=move,
            ) from exc
    return MoveScript(tuple(reversed(inverses)))
