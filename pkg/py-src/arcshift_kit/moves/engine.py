"""Detection, application and inversion of every move on Gauss diagrams.

Semantics at the Gauss-diagram level:

* ``ArcShift(k, p)``: swap the endpoints at positions ``p`` and ``p + 1`` of
  component ``k`` (distinct chords) and negate both chord signs.
* ``SignShift(c)``: negate the sign of ``c``.
* ``Xi(k, p)``: swap the endpoints at ``p`` and ``p + 2``; signs kept.
* ``ForbiddenOver`` / ``ForbiddenUnder``: swap two adjacent Over (Under)
  endpoints; signs kept.
* R1/R2 removals delete chords whose endpoints sit next to each other; the
  insertions are their exact inverses.
* ``R3(c1, c2, c3)``: the endpoint pairs {O(c1), O(c2)}, {U(c1), O(c3)} and
  {U(c2), U(c3)} are each adjacent; every pair is swapped in place.

All positional arithmetic wraps modulo the component length.
"""

from __future__ import annotations

import logging
from itertools import product
from typing import Iterable, Mapping

from ..errors import DiagramError, MoveError
from ..gauss import Endpoint, GaussDiagram, Role, Sign
from .types import ArcShiftVariant, MoveInstance, MoveKind

logger = logging.getLogger(__name__)


def _fail(m: MoveInstance, reason: str, detail: str) -> MoveError:
    return MoveError(f"{m.to_line()}: {detail}", move=m, reason=reason)


def _adjacent(a: int, b: int, size: int) -> bool:
    return size >= 2 and ((a + 1) % size == b or (b + 1) % size == a)


def _place(
    old: Iterable[Endpoint], placements: Mapping[int, Endpoint], size: int
) -> tuple[Endpoint, ...]:
    """Lay out a component of ``size`` slots: fixed placements, old order elsewhere."""
    rest = iter(old)
    return tuple(placements[i] if i in placements else next(rest) for i in range(size))


def _without(component: tuple[Endpoint, ...], chords: set[int]) -> tuple[Endpoint, ...]:
    return tuple(e for e in component if e.chord not in chords)


def _swap(component: tuple[Endpoint, ...], a: int, b: int) -> tuple[Endpoint, ...]:
    items = list(component)
    items[a], items[b] = items[b], items[a]
    return tuple(items)


def _component_or_fail(d: GaussDiagram, m: MoveInstance, k: int | None) -> tuple[Endpoint, ...]:
    if k is None or not 1 <= k <= d.n:
        raise _fail(m, "bad-position", f"component {k} out of range 1..{d.n}")
    return d.components[k - 1]


def _chord_or_fail(d: GaussDiagram, m: MoveInstance, chord: int) -> None:
    if not d.has_chord(chord):
        raise _fail(m, "unknown-chord", f"unknown chord id {chord}")


def _adjacent_pair(
    d: GaussDiagram, m: MoveInstance, *, span: int = 1, minimum: int = 2
) -> tuple[int, int, int]:
    """Validate a positional move; return (component, p, q) with q = p + span."""
    component = _component_or_fail(d, m, m.component)
    size = len(component)
    if size < minimum:
        raise _fail(m, "bad-position", f"component {m.component} has only {size} endpoints")
    if m.position is None or not 0 <= m.position < size:
        raise _fail(m, "bad-position", f"position {m.position} out of range 0..{size - 1}")
    assert m.component is not None
    return m.component, m.position, (m.position + span) % size


# ── Per-kind application ─────────────────────────────────────────────────


def _apply_arc_shift(d: GaussDiagram, m: MoveInstance) -> GaussDiagram:
    k, p, q = _adjacent_pair(d, m)
    component = d.components[k - 1]
    first, second = component[p], component[q]
    if first.chord == second.chord:
        raise _fail(m, "same-chord", f"positions {p} and {q} belong to the same chord {first.chord}")
    signs = dict(d.sign_map)
    signs[first.chord] = -signs[first.chord]
    signs[second.chord] = -signs[second.chord]
    return d.with_parts({k: _swap(component, p, q)}, signs)


def _apply_sign_shift(d: GaussDiagram, m: MoveInstance) -> GaussDiagram:
    (chord,) = m.chords
    _chord_or_fail(d, m, chord)
    signs = dict(d.sign_map)
    signs[chord] = -signs[chord]
    return d.with_parts(signs=signs)


def _apply_xi(d: GaussDiagram, m: MoveInstance) -> GaussDiagram:
    k, p, q = _adjacent_pair(d, m, span=2, minimum=3)
    component = d.components[k - 1]
    if component[p].chord == component[q].chord:
        raise _fail(m, "same-chord", f"positions {p} and {q} belong to the same chord")
    return d.with_parts({k: _swap(component, p, q)})


def _apply_forbidden(d: GaussDiagram, m: MoveInstance, role: Role) -> GaussDiagram:
    k, p, q = _adjacent_pair(d, m)
    component = d.components[k - 1]
    if component[p].role is not role or component[q].role is not role:
        name = "Over" if role is Role.OVER else "Under"
        raise _fail(m, "wrong-roles", f"positions {p} and {q} are not both {name} endpoints")
    return d.with_parts({k: _swap(component, p, q)})


def _apply_r1_remove(d: GaussDiagram, m: MoveInstance) -> GaussDiagram:
    (chord,) = m.chords
    _chord_or_fail(d, m, chord)
    k_over, a = d.locate(chord, Role.OVER)
    k_under, b = d.locate(chord, Role.UNDER)
    if k_over != k_under:
        raise _fail(m, "non-adjacent", f"chord {chord} is not a self chord")
    component = d.components[k_over - 1]
    if not _adjacent(a, b, len(component)):
        raise _fail(m, "non-adjacent", f"endpoints of chord {chord} are not adjacent")
    signs = {c: s for c, s in d.signs if c != chord}
    return d.with_parts({k_over: _without(component, {chord})}, signs)


def _fresh_ids(d: GaussDiagram, m: MoveInstance, count: int) -> tuple[int, ...]:
    if m.chords:
        if len(m.chords) != count or len(set(m.chords)) != count:
            raise _fail(m, "chord-exists", f"expected {count} distinct chord ids")
        for chord in m.chords:
            if d.has_chord(chord):
                raise _fail(m, "chord-exists", f"chord id {chord} already in use")
        return m.chords
    start = d.next_chord_id()
    return tuple(range(start, start + count))


def _apply_r1_insert(d: GaussDiagram, m: MoveInstance) -> GaussDiagram:
    component = _component_or_fail(d, m, m.component)
    size = len(component) + 2
    if m.position is None or not 0 <= m.position < size:
        raise _fail(m, "bad-position", f"gap {m.position} out of range 0..{size - 1}")
    if m.order not in ("OU", "UO") or m.sign is None:
        raise _fail(m, "bad-position", "R1 insertion needs a sign and an OU/UO order")
    (chord,) = _fresh_ids(d, m, 1)
    roles = (Role.OVER, Role.UNDER) if m.order == "OU" else (Role.UNDER, Role.OVER)
    placements = {
        m.position: Endpoint(chord, roles[0]),
        (m.position + 1) % size: Endpoint(chord, roles[1]),
    }
    assert m.component is not None
    signs = dict(d.sign_map)
    signs[chord] = m.sign
    return d.with_parts({m.component: _place(component, placements, size)}, signs)


def _r2_layout(d: GaussDiagram, first: int, second: int) -> tuple[int, int, int, int, str] | None:
    """(over comp, first over pos, under comp, first under pos, order) or None.

    ``first`` is the chord whose Over endpoint comes first.
    """
    ko, a = d.locate(first, Role.OVER)
    ko2, b = d.locate(second, Role.OVER)
    ku, c = d.locate(first, Role.UNDER)
    ku2, e = d.locate(second, Role.UNDER)
    if ko != ko2 or ku != ku2:
        return None
    if (a + 1) % len(d.components[ko - 1]) != b:
        return None
    under_size = len(d.components[ku - 1])
    if (c + 1) % under_size == e:
        return ko, a, ku, c, "PAR"
    if (e + 1) % under_size == c:
        return ko, a, ku, e, "ANTI"
    return None


def _r2_pair_layout(d: GaussDiagram, c1: int, c2: int) -> tuple[int, tuple[int, int, int, int, str]] | None:
    """Layout of a removable pair, trying both chords as the leading one."""
    for first, second in ((c1, c2), (c2, c1)):
        layout = _r2_layout(d, first, second)
        if layout is not None:
            return first, layout
    return None


def _apply_r2_remove(d: GaussDiagram, m: MoveInstance) -> GaussDiagram:
    c1, c2 = m.chords
    _chord_or_fail(d, m, c1)
    _chord_or_fail(d, m, c2)
    if c1 == c2:
        raise _fail(m, "same-chord", "R2 needs two distinct chords")
    if d.sign(c1) == d.sign(c2):
        raise _fail(m, "wrong-signs", f"chords {c1} and {c2} have equal signs")
    if _r2_pair_layout(d, c1, c2) is None:
        raise _fail(m, "non-adjacent", f"endpoints of chords {c1}, {c2} are not paired adjacently")
    ko, _ = d.locate(c1, Role.OVER)
    ku, _ = d.locate(c1, Role.UNDER)
    removed = {c1, c2}
    parts = {k: _without(d.components[k - 1], removed) for k in {ko, ku}}
    signs = {c: s for c, s in d.signs if c not in removed}
    return d.with_parts(parts, signs)


def _apply_r2_insert(d: GaussDiagram, m: MoveInstance) -> GaussDiagram:
    over_component = _component_or_fail(d, m, m.component)
    under_component = _component_or_fail(d, m, m.under_component)
    if m.order not in ("PAR", "ANTI") or m.sign is None:
        raise _fail(m, "bad-position", "R2 insertion needs a sign and a PAR/ANTI order")
    assert m.component is not None and m.under_component is not None
    c1, c2 = _fresh_ids(d, m, 2)
    over_pair = (Endpoint(c1, Role.OVER), Endpoint(c2, Role.OVER))
    under_pair = (
        (Endpoint(c1, Role.UNDER), Endpoint(c2, Role.UNDER))
        if m.order == "PAR"
        else (Endpoint(c2, Role.UNDER), Endpoint(c1, Role.UNDER))
    )

    def placements(size: int, gap: int | None, pair: tuple[Endpoint, Endpoint]) -> dict[int, Endpoint]:
        if gap is None or not 0 <= gap < size:
            raise _fail(m, "bad-position", f"gap {gap} out of range 0..{size - 1}")
        return {gap: pair[0], (gap + 1) % size: pair[1]}

    if m.component == m.under_component:
        size = len(over_component) + 4
        slots = placements(size, m.position, over_pair)
        under_slots = placements(size, m.under_position, under_pair)
        if set(slots) & set(under_slots):
            raise _fail(m, "bad-position", "over and under pairs overlap")
        parts = {m.component: _place(over_component, slots | under_slots, size)}
    else:
        over_size = len(over_component) + 2
        under_size = len(under_component) + 2
        parts = {
            m.component: _place(over_component, placements(over_size, m.position, over_pair), over_size),
            m.under_component: _place(
                under_component, placements(under_size, m.under_position, under_pair), under_size
            ),
        }
    signs = dict(d.sign_map)
    signs[c1] = m.sign
    signs[c2] = -m.sign
    return d.with_parts(parts, signs)


def _r3_pairs(d: GaussDiagram, m: MoveInstance) -> list[tuple[int, int, int]]:
    c1, c2, c3 = m.chords
    if len({c1, c2, c3}) != 3:
        raise _fail(m, "same-chord", "R3 needs three distinct chords")
    for chord in m.chords:
        _chord_or_fail(d, m, chord)
    pairs = []
    for (x, rx), (y, ry) in (
        ((c1, Role.OVER), (c2, Role.OVER)),
        ((c1, Role.UNDER), (c3, Role.OVER)),
        ((c2, Role.UNDER), (c3, Role.UNDER)),
    ):
        kx, px = d.locate(x, rx)
        ky, py = d.locate(y, ry)
        if kx != ky or not _adjacent(px, py, len(d.components[kx - 1])):
            raise _fail(m, "bad-pattern", f"{rx.value}{x} and {ry.value}{y} are not adjacent")
        pairs.append((kx, px, py))
    return pairs


def _apply_r3(d: GaussDiagram, m: MoveInstance) -> GaussDiagram:
    components = {k: d.components[k - 1] for k, _, _ in _r3_pairs(d, m)}
    for k, p, q in _r3_pairs(d, m):
        components[k] = _swap(components[k], p, q)
    return d.with_parts(components)


_APPLIERS = {
    MoveKind.ARC_SHIFT: _apply_arc_shift,
    MoveKind.SIGN_SHIFT: _apply_sign_shift,
    MoveKind.XI: _apply_xi,
    MoveKind.FORBIDDEN_OVER: lambda d, m: _apply_forbidden(d, m, Role.OVER),
    MoveKind.FORBIDDEN_UNDER: lambda d, m: _apply_forbidden(d, m, Role.UNDER),
    MoveKind.R1_REMOVE: _apply_r1_remove,
    MoveKind.R1_INSERT: _apply_r1_insert,
    MoveKind.R2_REMOVE: _apply_r2_remove,
    MoveKind.R2_INSERT: _apply_r2_insert,
    MoveKind.R3: _apply_r3,
}

_CHORD_ARITY = {
    MoveKind.R1_REMOVE: 1,
    MoveKind.R2_REMOVE: 2,
    MoveKind.R3: 3,
    MoveKind.SIGN_SHIFT: 1,
}


def apply(d: GaussDiagram, m: MoveInstance) -> GaussDiagram:
    """Apply ``m`` to ``d``; raises :class:`MoveError` naming the broken precondition."""
    arity = _CHORD_ARITY.get(m.kind)
    if arity is not None and len(m.chords) != arity:
        raise _fail(m, "unknown-chord", f"{m.kind.verb} takes {arity} chord id(s)")
    try:
        result = _APPLIERS[m.kind](d, m)
    except DiagramError as exc:
        raise _fail(m, "unknown-chord", str(exc)) from exc
    logger.debug("applied %s", m.to_line())
    return result


def invert(m: MoveInstance, before: GaussDiagram) -> MoveInstance:
    """Move that undoes ``m`` on ``apply(before, m)`` exactly."""
    kind = m.kind
    if kind in (
        MoveKind.ARC_SHIFT,
        MoveKind.SIGN_SHIFT,
        MoveKind.XI,
        MoveKind.FORBIDDEN_OVER,
        MoveKind.FORBIDDEN_UNDER,
        MoveKind.R3,
    ):
        apply(before, m)
        return m

    if kind is MoveKind.R1_REMOVE:
        apply(before, m)
        (chord,) = m.chords
        k, a = before.locate(chord, Role.OVER)
        _, b = before.locate(chord, Role.UNDER)
        size = len(before.components[k - 1])
        if (a + 1) % size == b:
            return MoveInstance.r1_insert(k, a, before.sign(chord), "OU", chord)
        return MoveInstance.r1_insert(k, b, before.sign(chord), "UO", chord)

    if kind is MoveKind.R2_REMOVE:
        apply(before, m)
        pair = _r2_pair_layout(before, *m.chords)
        assert pair is not None
        first, (ko, og, ku, ug, order) = pair
        second = m.chords[1] if first == m.chords[0] else m.chords[0]
        return MoveInstance.r2_insert(
            ko, og, ku, ug, before.sign(first), order, (first, second)  # type: ignore[arg-type]
        )

    if kind is MoveKind.R1_INSERT:
        (chord,) = _fresh_ids(before, m, 1)
        apply(before, m)
        return MoveInstance.r1_remove(chord)

    if kind is MoveKind.R2_INSERT:
        c1, c2 = _fresh_ids(before, m, 2)
        apply(before, m)
        return MoveInstance.r2_remove(c1, c2)

    raise _fail(m, "bad-pattern", f"no inverse for {kind}")


def classify_arc_shift(d: GaussDiagram, m: MoveInstance) -> ArcShiftVariant:
    """Role pair realised by an ArcShift, or ``S`` for a SignShift."""
    if m.kind is MoveKind.SIGN_SHIFT:
        return ArcShiftVariant.S
    if m.kind is not MoveKind.ARC_SHIFT:
        raise _fail(m, "bad-pattern", "not an arc shift move")
    k, p, q = _adjacent_pair(d, m)
    component = d.components[k - 1]
    return ArcShiftVariant.from_roles(component[p].role, component[q].role)


# ── Enumeration ──────────────────────────────────────────────────────────


def _adjacent_swaps(d: GaussDiagram, span: int = 1, minimum: int = 2) -> Iterable[tuple[int, int, Endpoint, Endpoint]]:
    for k, component in enumerate(d.components, start=1):
        size = len(component)
        if size < minimum:
            continue
        seen: set[frozenset[int]] = set()
        for p in range(size):
            q = (p + span) % size
            slot = frozenset((p, q))
            if slot in seen:
                continue
            seen.add(slot)
            yield k, p, component[p], component[q]


def _traversal_chords(d: GaussDiagram) -> list[int]:
    return list(d.first_occurrence_labels())


def _r1_removals(d: GaussDiagram) -> list[MoveInstance]:
    found: list[MoveInstance] = []
    listed: set[int] = set()
    for _, _, first, second in _adjacent_swaps(d):
        if first.chord == second.chord and first.chord not in listed:
            listed.add(first.chord)
            found.append(MoveInstance.r1_remove(first.chord))
    return found


def _r2_removals(d: GaussDiagram) -> list[MoveInstance]:
    found: list[MoveInstance] = []
    listed: set[frozenset[int]] = set()
    for _, _, first, second in _adjacent_swaps(d):
        if first.role is not Role.OVER or second.role is not Role.OVER:
            continue
        if first.chord == second.chord:
            continue
        key = frozenset((first.chord, second.chord))
        if key in listed or d.sign(first.chord) == d.sign(second.chord):
            continue
        if _r2_pair_layout(d, first.chord, second.chord) is not None:
            listed.add(key)
            found.append(MoveInstance.r2_remove(first.chord, second.chord))
    return found


def _r3_candidates(d: GaussDiagram) -> list[MoveInstance]:
    found: list[MoveInstance] = []
    listed: set[tuple[int, int, int]] = set()
    for _, _, first, second in _adjacent_swaps(d):
        if first.role is not Role.OVER or second.role is not Role.OVER or first.chord == second.chord:
            continue
        for c1, c2 in ((first.chord, second.chord), (second.chord, first.chord)):
            k, p = d.locate(c1, Role.UNDER)
            component = d.components[k - 1]
            for neighbour in (component[(p - 1) % len(component)], component[(p + 1) % len(component)]):
                c3 = neighbour.chord
                if neighbour.role is not Role.OVER or c3 in (c1, c2):
                    continue
                move = MoveInstance.r3(c1, c2, c3)
                if (c1, c2, c3) in listed:
                    continue
                try:
                    _r3_pairs(d, move)
                except MoveError:
                    continue
                listed.add((c1, c2, c3))
                found.append(move)
    return found


def _r1_insertions(d: GaussDiagram) -> list[MoveInstance]:
    return [
        MoveInstance.r1_insert(k, gap, sign, order)
        for k, component in enumerate(d.components, start=1)
        for gap in range(len(component) + 2)
        for sign in (Sign.POSITIVE, Sign.NEGATIVE)
        for order in ("OU", "UO")
    ]


def _r2_insertions(d: GaussDiagram) -> list[MoveInstance]:
    found: list[MoveInstance] = []
    for ko, ku in product(range(1, d.n + 1), repeat=2):
        over_len = len(d.components[ko - 1])
        under_len = len(d.components[ku - 1])
        extra = 4 if ko == ku else 2
        for og, ug in product(range(over_len + extra), range(under_len + extra)):
            for sign, order in product((Sign.POSITIVE, Sign.NEGATIVE), ("PAR", "ANTI")):
                if ko == ku:
                    size = over_len + 4
                    if {og, (og + 1) % size} & {ug, (ug + 1) % size}:
                        continue
                found.append(MoveInstance.r2_insert(ko, og, ku, ug, sign, order))  # type: ignore[arg-type]
    return found


def applicable(d: GaussDiagram, kind: MoveKind) -> list[MoveInstance]:
    """Every instance of ``kind`` applicable to ``d``, by component then position."""
    if kind is MoveKind.ARC_SHIFT:
        return [
            MoveInstance.arc_shift(k, p)
            for k, p, first, second in _adjacent_swaps(d)
            if first.chord != second.chord
        ]
    if kind is MoveKind.SIGN_SHIFT:
        return [MoveInstance.sign_shift(chord) for chord in _traversal_chords(d)]
    if kind is MoveKind.XI:
        return [
            MoveInstance.xi(k, p)
            for k, p, first, third in _adjacent_swaps(d, span=2, minimum=3)
            if first.chord != third.chord
        ]
    if kind in (MoveKind.FORBIDDEN_OVER, MoveKind.FORBIDDEN_UNDER):
        role = Role.OVER if kind is MoveKind.FORBIDDEN_OVER else Role.UNDER
        factory = MoveInstance.forbidden_over if role is Role.OVER else MoveInstance.forbidden_under
        return [
            factory(k, p)
            for k, p, first, second in _adjacent_swaps(d)
            if first.role is role and second.role is role
        ]
    if kind is MoveKind.R1_REMOVE:
        return _r1_removals(d)
    if kind is MoveKind.R2_REMOVE:
        return _r2_removals(d)
    if kind is MoveKind.R3:
        return _r3_candidates(d)
    if kind is MoveKind.R1_INSERT:
        return _r1_insertions(d)
    if kind is MoveKind.R2_INSERT:
        return _r2_insertions(d)
    raise ValueError(f"unsupported move kind {kind}")
