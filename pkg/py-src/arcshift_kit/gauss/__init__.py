from .diagram import (
    Violation,
    canonical_key,
    chord_class,
    ensure_valid,
    mirror,
    same_diagram,
    self_chords,
    validate,
)
from .types import CanonicalKey, ChordClass, Endpoint, GaussDiagram, Role, Sign

__all__ = [
    "CanonicalKey",
    "ChordClass",
    "Endpoint",
    "GaussDiagram",
    "Role",
    "Sign",
    "Violation",
    "canonical_key",
    "chord_class",
    "ensure_valid",
    "mirror",
    "same_diagram",
    "self_chords",
    "validate",
]
