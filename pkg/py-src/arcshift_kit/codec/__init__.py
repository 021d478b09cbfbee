from .models import (
    CodecModel,
    DiagramModel,
    EndpointModel,
    ScriptModel,
    diagram_from_json,
    diagram_to_json,
)
from .script import parse_move, parse_script, serialize_script
from .text import parse, serialize

__all__ = [
    "CodecModel",
    "DiagramModel",
    "EndpointModel",
    "ScriptModel",
    "diagram_from_json",
    "diagram_to_json",
    "parse",
    "parse_move",
    "parse_script",
    "serialize",
    "serialize_script",
]
