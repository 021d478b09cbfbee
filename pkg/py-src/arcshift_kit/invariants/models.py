from __future__ import annotations

from fractions import Fraction
from itertools import product

from pydantic import BaseModel, ConfigDict, Field, model_validator


class InvariantModel(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)


class ParityMatrix(InvariantModel):
    """``bits[i-1][j-1]`` is vlk(i, j) mod 2; the diagonal is always 0."""

    n: int = Field(ge=1)
    bits: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_shape(self) -> ParityMatrix:
        if len(self.bits) != self.n or any(len(row) != self.n for row in self.bits):
            raise ValueError(f"parity matrix must be {self.n}x{self.n}")
        for i, row in enumerate(self.bits):
            for j, bit in enumerate(row):
                if bit not in (0, 1):
                    raise ValueError(f"parity bit ({i + 1},{j + 1}) must be 0 or 1")
                if i == j and bit:
                    raise ValueError("parity matrix diagonal must be 0")
        return self

    @classmethod
    def zero(cls, n: int) -> ParityMatrix:
        return cls(n=n, bits=tuple(tuple(0 for _ in range(n)) for _ in range(n)))

    @classmethod
    def from_pairs(cls, n: int, odd: set[tuple[int, int]] | list[tuple[int, int]]) -> ParityMatrix:
        """Matrix whose odd entries are the given 1-based ``(over, under)`` pairs."""
        marked = set(odd)
        return cls(
            n=n,
            bits=tuple(
                tuple(1 if (i, j) in marked else 0 for j in range(1, n + 1))
                for i in range(1, n + 1)
            ),
        )

    @classmethod
    def every(cls, n: int) -> list[ParityMatrix]:
        """All 2^(n(n-1)) matrices, ordered pairs enumerated lexicographically."""
        pairs = cls.ordered_pairs(n)
        return [
            cls.from_pairs(n, [pair for pair, bit in zip(pairs, choice) if bit])
            for choice in product((0, 1), repeat=len(pairs))
        ]

    @staticmethod
    def ordered_pairs(n: int) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]

    def bit(self, i: int, j: int) -> int:
        return self.bits[i - 1][j - 1]

    def odd_entries(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in self.ordered_pairs(self.n) if self.bit(i, j)]

    @property
    def is_zero(self) -> bool:
        return not self.odd_entries()

    @property
    def is_symmetric(self) -> bool:
        return all(self.bit(i, j) == self.bit(j, i) for i, j in self.ordered_pairs(self.n))

    def transposed(self) -> ParityMatrix:
        return ParityMatrix.from_pairs(self.n, [(j, i) for i, j in self.odd_entries()])

    def __str__(self) -> str:
        return "\n".join(" ".join(str(bit) for bit in row) for row in self.bits)


class LinkingNumber(InvariantModel):
    i: int
    j: int
    value: str

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.value)


class InvariantReport(InvariantModel):
    """Every invariant of one diagram; ``None`` marks an undefined odd writhe."""

    n: int
    chord_count: int
    self_chords: tuple[tuple[int, ...], ...]
    even: bool
    vlk: tuple[tuple[int, ...], ...]
    linking_numbers: tuple[LinkingNumber, ...]
    parity: ParityMatrix
    homogeneous_proper: bool
    odd_writhe_components: tuple[int | None, ...]
    odd_writhe: int | None

    def vlk_of(self, i: int, j: int) -> int:
        return self.vlk[i - 1][j - 1]

    def to_text(self) -> str:
        """Stable ``key = value`` rendering."""

        def flag(value: bool) -> str:
            return "true" if value else "false"

        def writhe(value: int | None) -> str:
            return "undefined" if value is None else str(value)

        lines = [f"components = {self.n}", f"chords = {self.chord_count}"]
        for i, j in ParityMatrix.ordered_pairs(self.n):
            lines.append(f"vlk({i},{j}) = {self.vlk_of(i, j)}")
        for entry in self.linking_numbers:
            lines.append(f"linking({entry.i},{entry.j}) = {entry.value}")
        for i, j in ParityMatrix.ordered_pairs(self.n):
            lines.append(f"parity({i},{j}) = {self.parity.bit(i, j)}")
        lines.append(f"homogeneous_proper = {flag(self.homogeneous_proper)}")
        lines.append(f"even = {flag(self.even)}")
        for k, value in enumerate(self.odd_writhe_components, start=1):
            lines.append(f"J(K{k}) = {writhe(value)}")
        lines.append(f"J(L) = {writhe(self.odd_writhe)}")
        return "\n".join(lines)
