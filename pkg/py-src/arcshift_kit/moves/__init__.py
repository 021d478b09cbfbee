from .engine import applicable, apply, classify_arc_shift, invert
from .types import (
    POSITIONAL_KINDS,
    REIDEMEISTER_KINDS,
    ArcShiftVariant,
    MoveInstance,
    MoveKind,
    MoveScript,
    R1Order,
    R2Order,
)

__all__ = [
    "POSITIONAL_KINDS",
    "REIDEMEISTER_KINDS",
    "ArcShiftVariant",
    "MoveInstance",
    "MoveKind",
    "MoveScript",
    "R1Order",
    "R2Order",
    "applicable",
    "apply",
    "classify_arc_shift",
    "invert",
]
