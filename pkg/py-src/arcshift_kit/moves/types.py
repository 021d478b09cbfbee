"""Move instances of the Gauss-diagram calculus."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Literal

from ..gauss import Role, Sign


class MoveKind(Enum):
    """Move kinds; the value is the script verb."""

    R1_REMOVE = "R1-"
    R1_INSERT = "R1+"
    R2_REMOVE = "R2-"
    R2_INSERT = "R2+"
    R3 = "R3"
    ARC_SHIFT = "AS"
    SIGN_SHIFT = "SGN"
    XI = "XI"
    FORBIDDEN_OVER = "FO"
    FORBIDDEN_UNDER = "FU"

    @property
    def verb(self) -> str:
        return self.value

    @property
    def is_arc_shift(self) -> bool:
        """True for the moves counted in arc shift cost."""
        return self in (MoveKind.ARC_SHIFT, MoveKind.SIGN_SHIFT)

    @property
    def is_reidemeister(self) -> bool:
        return self in REIDEMEISTER_KINDS

    @property
    def is_insertion(self) -> bool:
        return self in (MoveKind.R1_INSERT, MoveKind.R2_INSERT)


REIDEMEISTER_KINDS = frozenset(
    {MoveKind.R1_REMOVE, MoveKind.R1_INSERT, MoveKind.R2_REMOVE, MoveKind.R2_INSERT, MoveKind.R3}
)
POSITIONAL_KINDS = frozenset(
    {MoveKind.ARC_SHIFT, MoveKind.XI, MoveKind.FORBIDDEN_OVER, MoveKind.FORBIDDEN_UNDER}
)


class ArcShiftVariant(Enum):
    """Role pair of the two swapped endpoints (T = Over/tail, H = Under/head)."""

    TT = "TT"
    HH = "HH"
    TH = "TH"
    HT = "HT"
    S = "S"

    @classmethod
    def from_roles(cls, first: Role, second: Role) -> ArcShiftVariant:
        letters = "".join("T" if role is Role.OVER else "H" for role in (first, second))
        return cls(letters)


R1Order = Literal["OU", "UO"]
R2Order = Literal["PAR", "ANTI"]


@dataclass(frozen=True, slots=True)
class MoveInstance:
    """A single parameterized rewrite.

    Components are 1-based, positions 0-based. For insertions ``position``
    (and ``under_position``) is the position of the first new endpoint in
    the resulting component; the second one lands at the next position,
    wrapping to 0 when the first is last.
    """

    kind: MoveKind
    chords: tuple[int, ...] = ()
    component: int | None = None
    position: int | None = None
    under_component: int | None = None
    under_position: int | None = None
    sign: Sign | None = None
    order: str | None = None

    # ── Constructors ──────────────────────────────────────────────────────

    @classmethod
    def r1_remove(cls, chord: int) -> MoveInstance:
        return cls(MoveKind.R1_REMOVE, chords=(chord,))

    @classmethod
    def r1_insert(
        cls,
        component: int,
        gap: int,
        sign: Sign | int,
        order: R1Order,
        chord: int | None = None,
    ) -> MoveInstance:
        return cls(
            MoveKind.R1_INSERT,
            chords=() if chord is None else (chord,),
            component=component,
            position=gap,
            sign=Sign.of(sign),
            order=order,
        )

    @classmethod
    def r2_remove(cls, first: int, second: int) -> MoveInstance:
        return cls(MoveKind.R2_REMOVE, chords=(first, second))

    @classmethod
    def r2_insert(
        cls,
        over_component: int,
        over_gap: int,
        under_component: int,
        under_gap: int,
        sign: Sign | int,
        order: R2Order,
        chords: tuple[int, int] | None = None,
    ) -> MoveInstance:
        return cls(
            MoveKind.R2_INSERT,
            chords=chords or (),
            component=over_component,
            position=over_gap,
            under_component=under_component,
            under_position=under_gap,
            sign=Sign.of(sign),
            order=order,
        )

    @classmethod
    def r3(cls, first: int, second: int, third: int) -> MoveInstance:
        return cls(MoveKind.R3, chords=(first, second, third))

    @classmethod
    def arc_shift(cls, component: int, position: int) -> MoveInstance:
        return cls(MoveKind.ARC_SHIFT, component=component, position=position)

    @classmethod
    def sign_shift(cls, chord: int) -> MoveInstance:
        return cls(MoveKind.SIGN_SHIFT, chords=(chord,))

    @classmethod
    def xi(cls, component: int, position: int) -> MoveInstance:
        return cls(MoveKind.XI, component=component, position=position)

    @classmethod
    def forbidden_over(cls, component: int, position: int) -> MoveInstance:
        return cls(MoveKind.FORBIDDEN_OVER, component=component, position=position)

    @classmethod
    def forbidden_under(cls, component: int, position: int) -> MoveInstance:
        return cls(MoveKind.FORBIDDEN_UNDER, component=component, position=position)

    # ── Script form ───────────────────────────────────────────────────────

    @property
    def arc_shift_cost(self) -> int:
        return 1 if self.kind.is_arc_shift else 0

    def to_line(self) -> str:
        """Render in the script verb grammar."""
        kind = self.kind
        if kind in POSITIONAL_KINDS:
            return f"{kind.verb} {self.component} {self.position}"
        if kind is MoveKind.R1_INSERT:
            assert self.sign is not None
            parts = [kind.verb, str(self.component), str(self.position), self.sign.symbol, str(self.order)]
        elif kind is MoveKind.R2_INSERT:
            assert self.sign is not None
            parts = [
                kind.verb,
                str(self.component),
                str(self.position),
                str(self.under_component),
                str(self.under_position),
                self.sign.symbol,
                str(self.order),
            ]
        else:
            parts = [kind.verb]
        parts.extend(str(chord) for chord in self.chords)
        return " ".join(parts)

    def renamed(self, mapping: dict[int, int]) -> MoveInstance:
        """Same move with chord ids substituted through ``mapping``."""
        if not self.chords:
            return self
        chords = tuple(mapping.get(chord, chord) for chord in self.chords)
        return MoveInstance(
            self.kind,
            chords=chords,
            component=self.component,
            position=self.position,
            under_component=self.under_component,
            under_position=self.under_position,
            sign=self.sign,
            order=self.order,
        )

    def __str__(self) -> str:
        return self.to_line()


@dataclass(frozen=True, slots=True)
class MoveScript:
    """Replayable sequence of moves."""

    moves: tuple[MoveInstance, ...] = ()

    @classmethod
    def of(cls, *moves: MoveInstance) -> MoveScript:
        return cls(tuple(moves))

    @property
    def arc_shift_cost(self) -> int:
        return sum(move.arc_shift_cost for move in self.moves)

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def __add__(self, other: MoveScript) -> MoveScript:
        return MoveScript(self.moves + other.moves)

    def kinds(self) -> set[MoveKind]:
        return {move.kind for move in self.moves}

    def renamed(self, mapping: dict[int, int]) -> MoveScript:
        return MoveScript(tuple(move.renamed(mapping) for move in self.moves))

    def lines(self) -> list[str]:
        return [move.to_line() for move in self.moves]

    def __str__(self) -> str:
        return "; ".join(self.lines())
