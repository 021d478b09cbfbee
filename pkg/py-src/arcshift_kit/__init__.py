from .codec import parse, parse_script, serialize, serialize_script
from .errors import (
    ArcShiftError,
    DiagramError,
    GaussCodeError,
    GenerationError,
    MoveError,
    NotHomogeneousProperError,
    OddWritheUndefinedError,
    ReplayError,
    ScriptError,
)
from .families import FamilySpec, gen_canonical, gen_l2n1, gen_lpq, gen_random, gen_torus
from .gauss import Endpoint, GaussDiagram, Role, Sign, canonical_key, mirror, same_diagram, validate
from .invariants import InvariantReport, ParityMatrix, parity_matrix, report
from .moves import MoveInstance, MoveKind, MoveScript, applicable, apply, invert
from .planner import (
    Reduction,
    canonicalize_to_class,
    equivalent,
    mirror_equivalent,
    replay,
    unknot,
    unknot_report,
)
from .search import Bracket, SearchBudget, bracket, simplify

__all__ = [
    "ArcShiftError",
    "Bracket",
    "DiagramError",
    "Endpoint",
    "FamilySpec",
    "GaussCodeError",
    "GaussDiagram",
    "GenerationError",
    "InvariantReport",
    "MoveError",
    "MoveInstance",
    "MoveKind",
    "MoveScript",
    "NotHomogeneousProperError",
    "OddWritheUndefinedError",
    "ParityMatrix",
    "Reduction",
    "ReplayError",
    "Role",
    "ScriptError",
    "SearchBudget",
    "Sign",
    "applicable",
    "apply",
    "bracket",
    "canonical_key",
    "canonicalize_to_class",
    "equivalent",
    "gen_canonical",
    "gen_l2n1",
    "gen_lpq",
    "gen_random",
    "gen_torus",
    "invert",
    "mirror",
    "mirror_equivalent",
    "parity_matrix",
    "parse",
    "parse_script",
    "replay",
    "report",
    "same_diagram",
    "serialize",
    "serialize_script",
    "simplify",
    "unknot",
    "unknot_report",
    "validate",
]
