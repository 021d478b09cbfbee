from __future__ import annotations

import pytest

from arcshift_kit.codec import (
    DiagramModel,
    ScriptModel,
    diagram_from_json,
    diagram_to_json,
    parse,
    parse_script,
    serialize,
    serialize_script,
)
from arcshift_kit.errors import DiagramError, GaussCodeError, ScriptError
from arcshift_kit.gauss import Endpoint, GaussDiagram, Role, Sign
from arcshift_kit.moves import MoveInstance, MoveKind, MoveScript


def test_parse_virtual_hopf():
    d = parse("U1+ ; O1+")
    assert d.components == ((Endpoint(1, Role.UNDER),), (Endpoint(1, Role.OVER),))
    assert d.sign(1) is Sign.POSITIVE


@pytest.mark.parametrize(
    ("text", "components"),
    [("", 1), (";", 2), (";;", 3), ("O1+ O2+ U1+ U2+ ;", 2), ("  U1- ;\n O1- ", 2)],
)
def test_component_count(text, components):
    assert parse(text).n == components


@pytest.mark.parametrize(
    ("text", "reason", "line", "column"),
    [
        ("O1+ X2+", "bad token 'X2+'", 1, 5),
        ("O1+ O0+ U1+", "bad token 'O0+'", 1, 5),
        ("O1+ O1+", "chord 1 has two Over endpoints", 1, 5),
        ("O1+ U1-", "sign mismatch for chord 1", 1, 5),
        ("O1+ U1+ O1+", "chord 1 appears more than twice", 1, 9),
        ("U2+ O1+", "chord 2 appears once", 1, 1),
        ("O1+\nU1+ Z", "bad token 'Z'", 2, 5),
    ],
)
def test_parse_errors_are_located(text, reason, line, column):
    with pytest.raises(GaussCodeError) as info:
        parse(text)
    assert info.value.reason == reason
    assert (info.value.line, info.value.column) == (line, column)


def test_serialize_is_canonical_text(hopf):
    assert serialize(hopf) == "U1+ ; O1+"
    assert serialize(GaussDiagram.unlink(1)) == ""
    assert serialize(GaussDiagram.unlink(2)) == ";"
    assert serialize(parse("O7+ O3+ U7+ U3+ ;")) == "O1+ O2+ U1+ U2+ ;"
    assert serialize(parse("; O1- ;; U1-")) == "; O1- ;; U1-"


def test_str_uses_text_form(torus1):
    assert str(torus1) == "O1- O2- ; U1- U2-"


def test_random_diagrams_round_trip(random_diagrams):
    for d in random_diagrams(200, seed=11):
        text = serialize(d)
        again = parse(text)
        assert again == d.renumbered()
        assert serialize(again) == text


def test_parse_script_with_comments_and_separators():
    script = parse_script("# unknot the (2,4) torus link\nSGN 2 ; R2- 1 2\n\n")
    assert script == MoveScript.of(MoveInstance.sign_shift(2), MoveInstance.r2_remove(1, 2))
    assert str(script) == "SGN 2; R2- 1 2"
    assert serialize_script(script) == "SGN 2\nR2- 1 2\n"


def test_serialize_script_tags_arc_shift_variants(l11):
    script = MoveScript.of(
        MoveInstance.arc_shift(1, 0),
        MoveInstance.arc_shift(2, 0),
        MoveInstance.sign_shift(1),
    )
    text = serialize_script(script, l11)
    assert text == "AS 1 0  # TH\nAS 2 0  # HT\nSGN 1  # S\n"
    assert parse_script(text) == script


def test_parse_script_every_verb():
    text = (
        "R1- 3\n"
        "R1+ 1 0 + OU\n"
        "R1+ 2 3 - UO 9\n"
        "R2- 1 2\n"
        "R2+ 1 0 2 1 + PAR\n"
        "R2+ 1 0 1 2 - ANTI 7 8\n"
        "R3 1 2 3\n"
        "AS 1 0\n"
        "SGN 4\n"
        "XI 2 1\n"
        "FO 1 2\n"
        "FU 2 0\n"
    )
    script = parse_script(text)
    assert [m.kind for m in script] == [
        MoveKind.R1_REMOVE,
        MoveKind.R1_INSERT,
        MoveKind.R1_INSERT,
        MoveKind.R2_REMOVE,
        MoveKind.R2_INSERT,
        MoveKind.R2_INSERT,
        MoveKind.R3,
        MoveKind.ARC_SHIFT,
        MoveKind.SIGN_SHIFT,
        MoveKind.XI,
        MoveKind.FORBIDDEN_OVER,
        MoveKind.FORBIDDEN_UNDER,
    ]
    assert script.moves[2].chords == (9,)
    assert script.moves[5].chords == (7, 8)
    assert script.arc_shift_cost == 2
    assert serialize_script(script) == text


@pytest.mark.parametrize(
    ("text", "reason", "line"),
    [
        ("FOO 1", "unknown move verb 'FOO'", 1),
        ("SGN 1\nAS 1", "AS: expected 2 arguments, got 1", 2),
        ("R1+ 1 0 * OU", "R1+: sign must be + or -, got '*'", 1),
        ("R2+ 1 0 2 0 + SIDEWAYS", "R2+: order must be one of PAR|ANTI, got 'SIDEWAYS'", 1),
        ("\n\nSGN 0", "SGN: chord id must be >= 1, got 0", 3),
        ("AS 1 x", "AS: position must be an integer, got 'x'", 1),
    ],
)
def test_script_errors(text, reason, line):
    with pytest.raises(ScriptError) as info:
        parse_script(text)
    assert info.value.reason == reason
    assert info.value.line == line


def test_diagram_json_mirror(twin_trefoil):
    text = diagram_to_json(twin_trefoil)
    assert diagram_from_json(text) == twin_trefoil.renumbered()
    model = DiagramModel.from_diagram(twin_trefoil)
    assert model.signs[1] == 1
    assert [e.role for e in model.components[0][:2]] == ["U", "U"]


def test_diagram_json_rejects_invalid_diagrams():
    with pytest.raises(DiagramError):
        diagram_from_json('{"components": [[{"chord": 1, "role": "O"}]], "signs": {"1": 1}}')


def test_script_model_round_trip():
    script = parse_script("SGN 2\nR2- 1 2")
    model = ScriptModel.from_script(script)
    assert model.arc_shift_cost == 1
    assert model.to_script() == script
