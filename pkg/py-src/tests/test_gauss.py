from __future__ import annotations

import random

import pytest

from arcshift_kit.codec import parse
from arcshift_kit.errors import DiagramError
from arcshift_kit.gauss import (
    ChordClass,
    Endpoint,
    GaussDiagram,
    Role,
    Sign,
    canonical_key,
    chord_class,
    ensure_valid,
    mirror,
    same_diagram,
    self_chords,
    validate,
)

O, U = Role.OVER, Role.UNDER


def test_unlink_has_no_chords():
    d = GaussDiagram.unlink(3)
    assert d.n == 3
    assert d.is_unlink
    assert d.chord_count == 0
    assert validate(d) == []


def test_validate_reports_role_problems():
    d = GaussDiagram.build([[Endpoint(1, O), Endpoint(1, O)]], {1: Sign.POSITIVE})
    messages = [v.message for v in validate(d)]
    assert "chord 1 has two Over endpoints" in messages
    assert "chord 1 has no Under endpoint" in messages


def test_validate_reports_sign_table_problems():
    d = GaussDiagram.build([[Endpoint(1, O), Endpoint(1, U)]], {2: Sign.NEGATIVE})
    messages = [v.message for v in validate(d)]
    assert "chord 1 has no sign" in messages
    assert "sign given for chord 2 which has no endpoints" in messages
    with pytest.raises(DiagramError) as info:
        ensure_valid(d)
    assert len(info.value.violations) == 2


def test_validate_rejects_zero_components():
    assert [v.message for v in validate(GaussDiagram.unlink(0))] == ["diagram has no components"]


def test_queries(hopf):
    assert hopf.sign(1) is Sign.POSITIVE
    assert hopf.locate(1, O) == (2, 0)
    assert hopf.locate(1, U) == (1, 0)
    assert hopf.endpoint_at(2, 5) == Endpoint(1, O)
    assert hopf.next_chord_id() == 2
    with pytest.raises(DiagramError):
        hopf.sign(7)
    with pytest.raises(DiagramError):
        hopf.component(3)


def test_chord_classes(hopf, trefoil):
    assert chord_class(hopf, 1) == ChordClass.mixed(2, 1)
    assert str(chord_class(hopf, 1)) == "Mixed(over=2, under=1)"
    assert chord_class(trefoil, 2).is_self
    assert str(chord_class(trefoil, 2)) == "Self(1)"
    assert self_chords(trefoil, 1) == [1, 2]
    assert self_chords(trefoil, 2) == []


def test_mirror_flips_roles_and_signs(hopf):
    flipped = mirror(hopf)
    assert flipped.components == ((Endpoint(1, O),), (Endpoint(1, U),))
    assert flipped.sign(1) is Sign.NEGATIVE
    assert mirror(flipped) == hopf


def test_same_diagram_ignores_labels_not_rotation():
    d = parse("O1+ O2- U1+ U2- ; ")
    assert same_diagram(d, d.relabeled({1: 7, 2: 3}))
    rotated = d.with_parts({1: d.components[0][1:] + d.components[0][:1]})
    assert not same_diagram(d, rotated)


def test_canonical_key_is_rotation_and_label_invariant():
    d = parse("O1+ O2- U1+ U2- ; U3+ ; O3+")
    rotated = d.with_parts({1: d.components[0][2:] + d.components[0][:2]})
    assert canonical_key(rotated) == canonical_key(d)
    assert canonical_key(d.relabeled({1: 9, 3: 4})) == canonical_key(d)


def test_canonical_key_separates_distinct_diagrams(hopf, l11):
    assert canonical_key(hopf) != canonical_key(mirror(hopf))
    assert canonical_key(hopf) != canonical_key(l11)
    assert canonical_key(GaussDiagram.unlink(2)) != canonical_key(GaussDiagram.unlink(3))


def test_renumbered_uses_first_occurrence():
    d = parse("U5+ O9- ; O5+ U9-")
    assert d.renumbered() == parse("U1+ O2- ; O1+ U2-")


def test_canonical_key_examples():
    assert canonical_key(parse("O1+ ; U1+")) == canonical_key(parse("O7+ ; U7+"))
    assert canonical_key(parse("O1+ U2+ U1+ O2+ ;")) == canonical_key(parse("U2+ U1+ O2+ O1+ ;"))
    assert canonical_key(parse("U1+ ; O1+")) != canonical_key(parse("O1+ ; U1+"))


def test_canonical_key_random_relabel_and_rotation(random_diagrams):
    rng = random.Random(2)
    for d in random_diagrams(1_000, seed=43):
        chords = list(d.chords)
        fresh = rng.sample(range(1, 10 * len(chords) + 2), len(chords))
        moved = d.relabeled(dict(zip(chords, fresh)))
        for k, component in enumerate(moved.components, start=1):
            if component:
                shift = rng.randrange(len(component))
                moved = moved.with_parts({k: component[shift:] + component[:shift]})
        assert canonical_key(moved) == canonical_key(d)
        assert sum(len(c) for c in d.components) == 2 * d.chord_count


def test_validate_spec_examples():
    assert validate(GaussDiagram.unlink(2)) == []
    assert validate(parse("O1+ ; U1+")) == []
    d = GaussDiagram.build([[Endpoint(1, O), Endpoint(1, O)], [Endpoint(1, U)]], {1: Sign.POSITIVE})
    assert "chord 1 has two Over endpoints" in [v.message for v in validate(d)]
    assert str(mirror(parse("U1+ ; O1+"))) == "O1- ; U1-"
