"""Immutable Gauss-diagram value types for ordered multi-component virtual links."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from functools import cached_property
from typing import Iterable, Literal, Mapping

from ..errors import DiagramError


class Sign(IntEnum):
    """Crossing sign. Negation stays inside the enum."""

    POSITIVE = 1
    NEGATIVE = -1

    def __neg__(self) -> Sign:
        return Sign.NEGATIVE if self is Sign.POSITIVE else Sign.POSITIVE

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.POSITIVE else "-"

    @classmethod
    def of(cls, value: int | str | Sign) -> Sign:
        if isinstance(value, Sign):
            return value
        if value in (1, "+", "+1"):
            return cls.POSITIVE
        if value in (-1, "-", "-1"):
            return cls.NEGATIVE
        raise ValueError(f"not a sign: {value!r}")


class Role(Enum):
    """Over is the chord tail, Under is the chord head."""

    OVER = "O"
    UNDER = "U"

    @property
    def flipped(self) -> Role:
        return Role.UNDER if self is Role.OVER else Role.OVER


@dataclass(frozen=True, slots=True)
class Endpoint:
    chord: int
    role: Role

    def token(self, sign: Sign) -> str:
        return f"{self.role.value}{self.chord}{sign.symbol}"

    def __str__(self) -> str:
        return f"{self.role.value}{self.chord}"


@dataclass(frozen=True, slots=True)
class ChordClass:
    """Self(i) when over == under == i, Mixed(i, j) otherwise (1-based)."""

    kind: Literal["self", "mixed"]
    over: int
    under: int

    @classmethod
    def self_of(cls, component: int) -> ChordClass:
        return cls("self", component, component)

    @classmethod
    def mixed(cls, over: int, under: int) -> ChordClass:
        return cls("mixed", over, under)

    @property
    def is_self(self) -> bool:
        return self.kind == "self"

    def __str__(self) -> str:
        if self.is_self:
            return f"Self({self.over})"
        return f"Mixed(over={self.over}, under={self.under})"


@dataclass(frozen=True, slots=True)
class CanonicalKey:
    value: bytes

    def hex(self) -> str:
        return self.value.hex()


@dataclass(frozen=True)
class GaussDiagram:
    """Ordered components of cyclic endpoint sequences plus a chord sign table.

    ``signs`` is stored as chord-sorted ``(chord, sign)`` pairs so the value
    stays hashable; use :meth:`sign` or :attr:`sign_map` to read it.
    Construction does not validate; see :func:`arcshift_kit.gauss.validate`.
    """

    components: tuple[tuple[Endpoint, ...], ...]
    signs: tuple[tuple[int, Sign], ...]

    @classmethod
    def build(
        cls,
        components: Iterable[Iterable[Endpoint]],
        signs: Mapping[int, int | Sign],
    ) -> GaussDiagram:
        comps = tuple(tuple(component) for component in components)
        table = tuple(sorted((int(c), Sign.of(s)) for c, s in signs.items()))
        return cls(components=comps, signs=table)

    @classmethod
    def unlink(cls, n: int) -> GaussDiagram:
        return cls(components=((),) * n, signs=())

    # ── Queries ───────────────────────────────────────────────────────────

    @property
    def n(self) -> int:
        return len(self.components)

    @cached_property
    def sign_map(self) -> dict[int, Sign]:
        return dict(self.signs)

    @cached_property
    def chords(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.signs)

    @cached_property
    def locations(self) -> dict[Endpoint, tuple[int, int]]:
        """Endpoint -> (1-based component, 0-based position)."""
        return {
            endpoint: (k, p)
            for k, component in enumerate(self.components, start=1)
            for p, endpoint in enumerate(component)
        }

    @property
    def chord_count(self) -> int:
        return len(self.signs)

    @property
    def is_unlink(self) -> bool:
        return all(not component for component in self.components)

    def sign(self, chord: int) -> Sign:
        try:
            return self.sign_map[chord]
        except KeyError:
            raise DiagramError(f"unknown chord id {chord}") from None

    def has_chord(self, chord: int) -> bool:
        return chord in self.sign_map

    def component(self, k: int) -> tuple[Endpoint, ...]:
        self.check_component(k)
        return self.components[k - 1]

    def check_component(self, k: int) -> None:
        if not 1 <= k <= self.n:
            raise DiagramError(f"component index {k} out of range 1..{self.n}")

    def locate(self, chord: int, role: Role) -> tuple[int, int]:
        try:
            return self.locations[Endpoint(chord, role)]
        except KeyError:
            raise DiagramError(f"unknown chord id {chord}") from None

    def endpoint_at(self, k: int, p: int) -> Endpoint:
        component = self.component(k)
        return component[p % len(component)]

    def next_chord_id(self) -> int:
        return max(self.chords, default=0) + 1

    # ── Derived diagrams ─────────────────────────────────────────────────

    def with_parts(
        self,
        components: Mapping[int, Iterable[Endpoint]] | None = None,
        signs: Mapping[int, Sign] | None = None,
    ) -> GaussDiagram:
        """Copy with some 1-based components and/or the sign table replaced."""
        comps = list(self.components)
        for k, component in (components or {}).items():
            comps[k - 1] = tuple(component)
        table = self.signs if signs is None else tuple(sorted(signs.items()))
        return GaussDiagram(components=tuple(comps), signs=table)

    def relabeled(self, mapping: Mapping[int, int]) -> GaussDiagram:
        """Rename chords; ids missing from ``mapping`` keep their value."""
        comps = tuple(
            tuple(Endpoint(mapping.get(e.chord, e.chord), e.role) for e in component)
            for component in self.components
        )
        table = tuple(sorted((mapping.get(c, c), s) for c, s in self.signs))
        return GaussDiagram(components=comps, signs=table)

    def first_occurrence_labels(self) -> dict[int, int]:
        labels: dict[int, int] = {}
        for component in self.components:
            for endpoint in component:
                labels.setdefault(endpoint.chord, len(labels) + 1)
        return labels

    def renumbered(self) -> GaussDiagram:
        """Chords renamed 1, 2, ... by first occurrence, components as stored."""
        return self.relabeled(self.first_occurrence_labels())

    def __str__(self) -> str:
        from ..codec.text import serialize

        return serialize(self)
