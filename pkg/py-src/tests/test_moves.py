from __future__ import annotations

import pytest

from arcshift_kit.codec import parse
from arcshift_kit.errors import MoveError
from arcshift_kit.gauss import GaussDiagram, Role, Sign, same_diagram
from arcshift_kit.invariants import vlk_matrix
from arcshift_kit.moves import (
    ArcShiftVariant,
    MoveInstance,
    MoveKind,
    applicable,
    apply,
    classify_arc_shift,
    invert,
)


def _fails(d: GaussDiagram, move: MoveInstance, reason: str) -> None:
    with pytest.raises(MoveError) as info:
        apply(d, move)
    assert info.value.reason == reason
    assert info.value.move == move


# ── Arc shifts ───────────────────────────────────────────────────────────


def test_arc_shift_swaps_and_negates(torus1):
    after = apply(torus1, MoveInstance.arc_shift(1, 0))
    assert after == parse("O2+ O1+ ; U1+ U2+")
    assert after.sign(1) is Sign.POSITIVE and after.sign(2) is Sign.POSITIVE


def test_arc_shift_wraps_around():
    d = parse("O1+ O2- U1+ U2-")
    after = apply(d, MoveInstance.arc_shift(1, 3))
    assert after == parse("U2+ O2+ U1- O1-")


def test_arc_shift_preconditions(hopf):
    _fails(parse("O1+ U1+"), MoveInstance.arc_shift(1, 0), "same-chord")
    _fails(hopf, MoveInstance.arc_shift(1, 0), "bad-position")
    _fails(parse("O1+ O2+ U1+ U2+"), MoveInstance.arc_shift(1, 4), "bad-position")
    _fails(hopf, MoveInstance.arc_shift(3, 0), "bad-position")


def test_sign_shift(hopf):
    assert apply(hopf, MoveInstance.sign_shift(1)).sign(1) is Sign.NEGATIVE
    _fails(hopf, MoveInstance.sign_shift(4), "unknown-chord")


def test_classify_arc_shift(torus1, l11):
    assert classify_arc_shift(torus1, MoveInstance.arc_shift(1, 0)) is ArcShiftVariant.TT
    assert classify_arc_shift(torus1, MoveInstance.arc_shift(2, 0)) is ArcShiftVariant.HH
    assert classify_arc_shift(l11, MoveInstance.arc_shift(1, 0)) is ArcShiftVariant.TH
    assert classify_arc_shift(l11, MoveInstance.arc_shift(2, 0)) is ArcShiftVariant.HT
    assert classify_arc_shift(l11, MoveInstance.sign_shift(1)) is ArcShiftVariant.S


# ── Xi and forbidden moves ───────────────────────────────────────────────


def test_xi_swaps_first_and_third():
    d = parse("O1+ O2- U2- U1+")
    after = apply(d, MoveInstance.xi(1, 0))
    assert after.components[0] == (d.components[0][2], d.components[0][1], d.components[0][0], d.components[0][3])
    assert after.signs == d.signs
    _fails(parse("O1+ U2+ U1+ O2+"), MoveInstance.xi(1, 0), "same-chord")
    _fails(parse("O1+ U1+ ; O2+ U2+"), MoveInstance.xi(1, 0), "bad-position")


def test_forbidden_moves_need_matching_roles():
    d = parse("O1+ O2+ U1+ U2+")
    over = apply(d, MoveInstance.forbidden_over(1, 0))
    assert str(over) == "O1+ O2+ U2+ U1+"
    assert over.signs == d.signs
    under = apply(d, MoveInstance.forbidden_under(1, 2))
    assert same_diagram(under, over)
    _fails(d, MoveInstance.forbidden_over(1, 1), "wrong-roles")
    _fails(d, MoveInstance.forbidden_under(1, 3), "wrong-roles")


# ── Reidemeister moves ───────────────────────────────────────────────────


def test_r1_remove():
    assert apply(parse("O1+ U1+ ;"), MoveInstance.r1_remove(1)) == GaussDiagram.unlink(2)
    wrapped = apply(parse("U1+ O2- U2- O1+"), MoveInstance.r1_remove(1))
    assert str(wrapped) == "O1- U1-"
    _fails(parse("O1+ O2+ U1+ U2+"), MoveInstance.r1_remove(1), "non-adjacent")
    _fails(parse("U1+ ; O1+"), MoveInstance.r1_remove(1), "non-adjacent")


def test_r1_insert_positions():
    d = parse("O1+ U1+")
    assert str(apply(d, MoveInstance.r1_insert(1, 1, Sign.NEGATIVE, "OU"))) == "O1+ O2- U2- U1+"
    wrapped = apply(d, MoveInstance.r1_insert(1, 3, Sign.POSITIVE, "OU"))
    assert [str(e) for e in wrapped.components[0]] == ["U2", "O1", "U1", "O2"]
    assert apply(GaussDiagram.unlink(1), MoveInstance.r1_insert(1, 0, Sign.POSITIVE, "UO", 5)).has_chord(5)
    _fails(d, MoveInstance.r1_insert(1, 0, Sign.POSITIVE, "OU", 1), "chord-exists")
    _fails(d, MoveInstance.r1_insert(1, 4, Sign.POSITIVE, "OU"), "bad-position")


def test_r2_remove():
    assert apply(parse("O1- O2+ ; U1- U2+"), MoveInstance.r2_remove(1, 2)) == GaussDiagram.unlink(2)
    assert apply(parse("O1+ O2- ; U2- U1+"), MoveInstance.r2_remove(2, 1)) == GaussDiagram.unlink(2)
    assert apply(parse("O1+ O2- U1+ U2-"), MoveInstance.r2_remove(1, 2)) == GaussDiagram.unlink(1)
    _fails(parse("O1- O2- ; U1- U2-"), MoveInstance.r2_remove(1, 2), "wrong-signs")
    _fails(parse("O1+ O2- ; U1+ O3+ U2- U3+"), MoveInstance.r2_remove(1, 2), "non-adjacent")
    _fails(parse("O1+ O2- ; U1+ U2-"), MoveInstance.r2_remove(1, 1), "same-chord")
    _fails(parse("O1+ O2- ; U1+ U2-"), MoveInstance.r2_remove(1, 5), "unknown-chord")


def test_r2_insert_layouts():
    two = GaussDiagram.unlink(2)
    par = apply(two, MoveInstance.r2_insert(1, 0, 2, 0, Sign.POSITIVE, "PAR"))
    assert str(par) == "O1+ O2- ; U1+ U2-"
    anti = apply(two, MoveInstance.r2_insert(1, 0, 2, 0, Sign.POSITIVE, "ANTI"))
    assert str(anti) == "O1+ O2- ; U2- U1+"
    same = apply(GaussDiagram.unlink(1), MoveInstance.r2_insert(1, 0, 1, 2, Sign.NEGATIVE, "PAR", (3, 4)))
    assert same.sign(3) is Sign.NEGATIVE and same.sign(4) is Sign.POSITIVE
    _fails(GaussDiagram.unlink(1), MoveInstance.r2_insert(1, 0, 1, 1, Sign.POSITIVE, "PAR"), "bad-position")


def test_r3_swaps_three_pairs():
    d = parse("O1+ O2+ U1+ O3+ U2+ U3+")
    assert applicable(d, MoveKind.R3) == [MoveInstance.r3(1, 2, 3)]
    after = apply(d, MoveInstance.r3(1, 2, 3))
    assert [str(e) for e in after.components[0]] == ["O2", "O1", "O3", "U1", "U3", "U2"]
    assert apply(after, MoveInstance.r3(1, 2, 3)) == d
    _fails(d, MoveInstance.r3(2, 1, 3), "bad-pattern")
    _fails(d, MoveInstance.r3(1, 1, 3), "same-chord")


# ── Enumeration and inversion ────────────────────────────────────────────


def test_applicable_is_deduplicated(torus1):
    assert applicable(torus1, MoveKind.ARC_SHIFT) == [
        MoveInstance.arc_shift(1, 0),
        MoveInstance.arc_shift(2, 0),
    ]
    assert applicable(torus1, MoveKind.SIGN_SHIFT) == [
        MoveInstance.sign_shift(1),
        MoveInstance.sign_shift(2),
    ]
    assert applicable(torus1, MoveKind.R2_REMOVE) == []
    assert applicable(parse("O1+ U1+"), MoveKind.R1_REMOVE) == [MoveInstance.r1_remove(1)]
    assert applicable(parse("O1- O2+ ; U2+ U1-"), MoveKind.R2_REMOVE) == [MoveInstance.r2_remove(1, 2)]


def test_every_applicable_move_applies(random_diagrams):
    for d in random_diagrams(60, seed=5, max_chords=5):
        for kind in MoveKind:
            for move in applicable(d, kind)[:40]:
                apply(d, move)


_INVERTIBLE = [kind for kind in MoveKind if kind is not MoveKind.R2_INSERT]


def test_invert_restores_exactly(random_diagrams):
    for d in random_diagrams(120, seed=7, max_chords=5):
        for kind in _INVERTIBLE:
            for move in applicable(d, kind)[:30]:
                after = apply(d, move)
                assert apply(after, invert(move, d)) == d
        for move in applicable(d, MoveKind.R2_INSERT)[:30]:
            after = apply(d, move)
            assert apply(after, invert(move, d)) == d
            for removal in applicable(after, MoveKind.R2_REMOVE) + applicable(after, MoveKind.R1_REMOVE):
                reduced = apply(after, removal)
                assert apply(reduced, invert(removal, after)) == after


def test_invert_rejects_inapplicable_moves(hopf):
    with pytest.raises(MoveError):
        invert(MoveInstance.r1_remove(1), hopf)


# ── Invariance ───────────────────────────────────────────────────────────


def _touched(d: GaussDiagram, move: MoveInstance) -> tuple[int, int]:
    component = d.component(move.component)
    return component[move.position].chord, component[(move.position + 1) % len(component)].chord


def _pair(d: GaussDiagram, chord: int) -> tuple[int, int]:
    return d.locate(chord, Role.OVER)[0], d.locate(chord, Role.UNDER)[0]


def _interleaved(d: GaussDiagram, a: int, b: int) -> bool:
    low, high = sorted(d.locate(a, role)[1] for role in Role)
    return sum(low < d.locate(b, role)[1] < high for role in Role) == 1


def test_reidemeister_moves_keep_vlk(random_diagrams):
    kinds = (MoveKind.R1_REMOVE, MoveKind.R2_REMOVE, MoveKind.R3)
    for d in random_diagrams(300, seed=11, max_chords=6):
        before = vlk_matrix(d)
        for kind in kinds:
            for move in applicable(d, kind):
                assert vlk_matrix(apply(d, move)) == before
        for kind in (MoveKind.R1_INSERT, MoveKind.R2_INSERT):
            for move in applicable(d, kind)[:20]:
                assert vlk_matrix(apply(d, move)) == before


def test_arc_shift_vlk_deltas(random_diagrams):
    # Two chords of one pair with equal signs move that entry by 4.
    for d in random_diagrams(400, seed=13, max_chords=6):
        before = vlk_matrix(d)
        for move in applicable(d, MoveKind.ARC_SHIFT):
            after = vlk_matrix(apply(d, move))
            a, b = _touched(d, move)
            for i in range(d.n):
                for j in range(d.n):
                    delta = after[i][j] - before[i][j]
                    assert delta in (-4, -2, 0, 2, 4)
                    if abs(delta) == 4:
                        assert _pair(d, a) == _pair(d, b) == (i + 1, j + 1)
                        assert d.sign(a) is d.sign(b)


def test_double_step_on_torus_link(torus1):
    after = apply(torus1, MoveInstance.arc_shift(1, 0))
    assert vlk_matrix(torus1)[0][1] == -2
    assert vlk_matrix(after)[0][1] == 2


def test_arc_shift_flips_only_its_own_interleaving(random_diagrams):
    for d in random_diagrams(300, seed=17, max_components=1, max_chords=6):
        for move in applicable(d, MoveKind.ARC_SHIFT):
            after = apply(d, move)
            touched = set(_touched(d, move))
            for a in d.chords:
                for b in d.chords:
                    if a >= b:
                        continue
                    flipped = _interleaved(d, a, b) != _interleaved(after, a, b)
                    assert flipped == ({a, b} == touched)
