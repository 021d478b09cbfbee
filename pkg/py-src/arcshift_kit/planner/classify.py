"""Arc shift equivalence by parity class, with replayable witnesses."""

from __future__ import annotations

import logging

from ..errors import ArcShiftError, DiagramError
from ..gauss import GaussDiagram, mirror, same_diagram
from ..invariants import parity_matrix
from ..moves import MoveScript
from .pipeline import canonicalize_to_class
from .replay import inverse_script, replay
from .types import Equivalence

logger = logging.getLogger(__name__)


def _chord_ids(script: MoveScript) -> set[int]:
    return {chord for move in script for chord in move.chords}


def _splice(first: GaussDiagram, second: GaussDiagram, tail: MoveScript) -> MoveScript:
    """Rename ``tail`` (written for ``second``) so it runs on ``first``.

    ``first`` and ``second`` are the same diagram up to chord labels; chords
    that ``tail`` inserts get ids unused by ``first``.
    """
    by_label = {label: chord for chord, label in first.first_occurrence_labels().items()}
    mapping = {chord: by_label[label] for chord, label in second.first_occurrence_labels().items()}
    fresh = max(first.chords, default=0) + 1
    for chord in sorted(_chord_ids(tail) - set(mapping)):
        mapping[chord] = fresh
        fresh += 1
    return tail.renamed(mapping)


def equivalent(d1: GaussDiagram, d2: GaussDiagram, *, witness: bool = False) -> Equivalence:
    """Arc shift equivalence: parity matrices agree.

    With ``witness`` the result carries a script with
    ``same_diagram(replay(d1, script), d2)``.
    """
    if d1.n != d2.n:
        raise DiagramError(f"component counts differ: {d1.n} vs {d2.n}")
    if parity_matrix(d1) != parity_matrix(d2):
        return Equivalence(False)
    if not witness:
        return Equivalence(True)

    to_class = canonicalize_to_class(d1)
    from_class = canonicalize_to_class(d2)
    back = inverse_script(d2, from_class.script)
    script = to_class.script + _splice(to_class.output, from_class.output, back)
    if not same_diagram(replay(d1, script), d2):
        raise ArcShiftError("equivalence witness does not reach the target diagram")
    logger.info("equivalence witness with arc shift cost %d", script.arc_shift_cost)
    return Equivalence(True, script)


def mirror_equivalent(d: GaussDiagram, *, witness: bool = False) -> Equivalence:
    """Whether ``d`` is arc shift equivalent to its mirror image."""
    return equivalent(d, mirror(d), witness=witness)
