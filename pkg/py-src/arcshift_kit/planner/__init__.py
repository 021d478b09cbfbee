from ..moves import MoveScript
from .classify import equivalent, mirror_equivalent
from .pipeline import (
    canonicalize_to_class,
    parallelize_self,
    strip_self,
    unknot,
    unknot_report,
)
from .replay import inverse_script, replay
from .types import Equivalence, PhaseCosts, PlannerModel, Reduction, UnknotReport

__all__ = [
    "Equivalence",
    "MoveScript",
    "PhaseCosts",
    "PlannerModel",
    "Reduction",
    "UnknotReport",
    "canonicalize_to_class",
    "equivalent",
    "inverse_script",
    "mirror_equivalent",
    "parallelize_self",
    "replay",
    "strip_self",
    "unknot",
    "unknot_report",
]
