"""Validation, chord classification, mirroring and canonical keys."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ..errors import DiagramError
from .types import CanonicalKey, ChordClass, Endpoint, GaussDiagram, Role, Sign

_COUNT_WORDS = {0: "no", 2: "two", 3: "three", 4: "four"}


@dataclass(frozen=True, slots=True)
class Violation:
    """One broken diagram invariant, naming the chord and/or component at fault."""

    message: str
    chord: int | None = None
    component: int | None = None

    def __str__(self) -> str:
        return self.message


def validate(d: GaussDiagram) -> list[Violation]:
    """Return every invariant violation of ``d``; an empty list means valid."""
    violations: list[Violation] = []
    if d.n < 1:
        violations.append(Violation("diagram has no components"))

    roles: dict[int, Counter[Role]] = {}
    first_component: dict[int, int] = {}
    for k, component in enumerate(d.components, start=1):
        for endpoint in component:
            if not isinstance(endpoint.chord, int) or endpoint.chord < 1:
                violations.append(
                    Violation(
                        f"component {k} holds invalid chord id {endpoint.chord!r}",
                        component=k,
                    )
                )
                continue
            roles.setdefault(endpoint.chord, Counter())[endpoint.role] += 1
            first_component.setdefault(endpoint.chord, k)

    for chord in sorted(roles):
        for role, name in ((Role.OVER, "Over"), (Role.UNDER, "Under")):
            count = roles[chord][role]
            if count == 1:
                continue
            word = _COUNT_WORDS.get(count, str(count))
            noun = "endpoint" if count == 0 else "endpoints"
            violations.append(
                Violation(
                    f"chord {chord} has {word} {name} {noun}",
                    chord=chord,
                    component=first_component[chord],
                )
            )

    signs = d.sign_map
    if len(signs) != len(d.signs):
        violations.append(Violation("sign table lists a chord more than once"))
    for chord in sorted(set(roles) - set(signs)):
        violations.append(Violation(f"chord {chord} has no sign", chord=chord))
    for chord in sorted(set(signs) - set(roles)):
        violations.append(
            Violation(f"sign given for chord {chord} which has no endpoints", chord=chord)
        )
    for chord, sign in d.signs:
        if not isinstance(sign, Sign):
            violations.append(Violation(f"chord {chord} has invalid sign {sign!r}", chord=chord))
    return violations


def ensure_valid(d: GaussDiagram) -> GaussDiagram:
    violations = validate(d)
    if violations:
        raise DiagramError(
            "invalid Gauss diagram: " + "; ".join(map(str, violations)),
            violations=violations,
        )
    return d


def chord_class(d: GaussDiagram, chord: int) -> ChordClass:
    over, _ = d.locate(chord, Role.OVER)
    under, _ = d.locate(chord, Role.UNDER)
    if over == under:
        return ChordClass.self_of(over)
    return ChordClass.mixed(over, under)


def self_chords(d: GaussDiagram, k: int) -> list[int]:
    """Self chords of component ``k`` in order of first appearance."""
    seen: list[int] = []
    for endpoint in d.component(k):
        if endpoint.chord not in seen and chord_class(d, endpoint.chord).is_self:
            seen.append(endpoint.chord)
    return seen


def mirror(d: GaussDiagram) -> GaussDiagram:
    """Reverse every chord and negate every sign (crossing change everywhere)."""
    comps = tuple(
        tuple(Endpoint(e.chord, e.role.flipped) for e in component)
        for component in d.components
    )
    return GaussDiagram(components=comps, signs=tuple((c, -s) for c, s in d.signs))


def same_diagram(a: GaussDiagram, b: GaussDiagram) -> bool:
    """Equal up to chord relabeling; stored rotation and component order count."""
    return a.renumbered() == b.renumbered()


# ── Canonical keys ────────────────────────────────────────────────────────

_Token = tuple[int, int, int]


def _encode(
    component: tuple[Endpoint, ...],
    shift: int,
    labels: dict[int, int],
    signs: dict[int, Sign],
) -> tuple[tuple[_Token, ...], dict[int, int]]:
    labels = dict(labels)
    tokens: list[_Token] = []
    size = len(component)
    for offset in range(size):
        endpoint = component[(shift + offset) % size]
        label = labels.setdefault(endpoint.chord, len(labels) + 1)
        tokens.append((label, 0 if endpoint.role is Role.OVER else 1, int(signs[endpoint.chord])))
    return tuple(tokens), labels


def _minimal_tail(
    d: GaussDiagram, index: int, labels: dict[int, int]
) -> tuple[tuple[_Token, ...], ...]:
    if index == d.n:
        return ()
    component = d.components[index]
    if not component:
        return ((),) + _minimal_tail(d, index + 1, labels)

    candidates = [_encode(component, shift, labels, d.sign_map) for shift in range(len(component))]
    best = min(encoding for encoding, _ in candidates)
    tails = {
        _minimal_tail(d, index + 1, next_labels)
        for encoding, next_labels in candidates
        if encoding == best
    }
    return (best,) + min(tails)


def canonical_key(d: GaussDiagram) -> CanonicalKey:
    """Key invariant under chord relabeling and per-component rotation.

    Rotations are chosen component by component; only rotations tying for
    the lexicographically least encoding are branched on.
    """
    form = _minimal_tail(d, 0, {})
    return CanonicalKey(repr((d.n, form)).encode("ascii"))
