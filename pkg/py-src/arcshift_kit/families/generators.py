"""Deterministic generators for the concrete link families, plus seeded random diagrams."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Literal

from ..errors import GenerationError
from ..gauss import Endpoint, GaussDiagram, Role, Sign, ensure_valid
from ..invariants import ParityMatrix, is_homogeneous_proper, parity_matrix, sign_e, vlk_matrix

logger = logging.getLogger(__name__)

DEFAULT_REJECTION_BUDGET = 10_000

FamilyName = Literal[
    "canonical", "lpq", "l2n1", "torus", "random", "virtual-hopf", "trefoil", "twin-trefoil"
]
FAMILY_NAMES: tuple[str, ...] = (
    "canonical",
    "lpq",
    "l2n1",
    "torus",
    "random",
    "virtual-hopf",
    "trefoil",
    "twin-trefoil",
)


def _over(chord: int) -> Endpoint:
    return Endpoint(chord, Role.OVER)


def _under(chord: int) -> Endpoint:
    return Endpoint(chord, Role.UNDER)


def _checked(d: GaussDiagram, expected: dict[tuple[int, int], int]) -> GaussDiagram:
    """Validate ``d`` and assert the stated virtual linking numbers."""
    ensure_valid(d)
    matrix = vlk_matrix(d)
    for (i, j), value in expected.items():
        if matrix[i - 1][j - 1] != value:
            raise GenerationError(f"vlk({i},{j}) = {matrix[i - 1][j - 1]}, expected {value}")
    return d


def _require_positive(name: str, value: int) -> None:
    if value < 1:
        raise GenerationError(f"{name} must be >= 1, got {value}")


# ── Families ─────────────────────────────────────────────────────────────


def gen_canonical(bits: ParityMatrix) -> GaussDiagram:
    """One +1 chord i-over-j for each odd entry, pairs taken lexicographically."""
    components: list[list[Endpoint]] = [[] for _ in range(bits.n)]
    signs: dict[int, Sign] = {}
    for chord, (i, j) in enumerate(bits.odd_entries(), start=1):
        components[i - 1].append(_over(chord))
        components[j - 1].append(_under(chord))
        signs[chord] = Sign.POSITIVE
    d = GaussDiagram.build(components, signs)
    ensure_valid(d)
    if parity_matrix(d) != bits:
        raise GenerationError("canonical representative does not realise its parity matrix")
    return d


def all_canonical(n: int) -> list[GaussDiagram]:
    """Every canonical representative on ``n`` components."""
    _require_positive("component count", n)
    return [gen_canonical(bits) for bits in ParityMatrix.every(n)]


def gen_lpq(p: int, q: int) -> GaussDiagram:
    """|p| chords 2-over-1 of sign e(p) then |q| chords 1-over-2 of sign e(q), in blocks."""
    first = list(range(1, abs(p) + 1))
    second = list(range(abs(p) + 1, abs(p) + abs(q) + 1))
    components = [
        [_under(c) for c in first] + [_over(c) for c in second],
        [_over(c) for c in first] + [_under(c) for c in second],
    ]
    signs = {c: sign_e(p) for c in first} | {c: sign_e(q) for c in second}
    return _checked(GaussDiagram.build(components, signs), {(2, 1): p, (1, 2): q})


def gen_torus(n: int) -> GaussDiagram:
    """(2, 4n) virtual torus link: 2n negative chords 1-over-2 in the same cyclic order."""
    _require_positive("n", n)
    chords = range(1, 2 * n + 1)
    components = [[_over(c) for c in chords], [_under(c) for c in chords]]
    d = GaussDiagram.build(components, {c: Sign.NEGATIVE for c in chords})
    return _checked(d, {(2, 1): 0, (1, 2): -2 * n})


def gen_l2n1(n: int) -> GaussDiagram:
    """2n - 1 positive chords 1-over-2 in the same cyclic order."""
    _require_positive("n", n)
    chords = range(1, 2 * n)
    components = [[_over(c) for c in chords], [_under(c) for c in chords]]
    d = GaussDiagram.build(components, {c: Sign.POSITIVE for c in chords})
    return _checked(d, {(2, 1): 0, (1, 2): 2 * n - 1})


def gen_virtual_hopf() -> GaussDiagram:
    return _checked(
        GaussDiagram.build([[_under(1)], [_over(1)]], {1: Sign.POSITIVE}),
        {(2, 1): 1, (1, 2): 0},
    )


def gen_virtual_trefoil(components: int = 1) -> GaussDiagram:
    """Virtual trefoil on component 1, followed by ``components - 1`` empty circles."""
    _require_positive("component count", components)
    rest: list[list[Endpoint]] = [[] for _ in range(components - 1)]
    d = GaussDiagram.build(
        [[_over(1), _over(2), _under(1), _under(2)], *rest],
        {1: Sign.POSITIVE, 2: Sign.POSITIVE},
    )
    return ensure_valid(d)


def gen_twin_trefoil() -> GaussDiagram:
    """Two components with vlk(2,1) = 2, vlk(1,2) = 0 and two odd self chords on each."""
    components = [
        [_under(1), _under(2), _over(3), _over(4), _under(3), _under(4)],
        [_over(1), _over(2), _over(5), _over(6), _under(5), _under(6)],
    ]
    d = GaussDiagram.build(components, {c: Sign.POSITIVE for c in range(1, 7)})
    return _checked(d, {(2, 1): 2, (1, 2): 0})


# ── Random diagrams ──────────────────────────────────────────────────────


def _random_diagram(rng: random.Random, components: int, chords: int) -> GaussDiagram:
    circles: list[list[Endpoint]] = [[] for _ in range(components)]
    signs: dict[int, Sign] = {}
    for chord in range(1, chords + 1):
        for endpoint in (_over(chord), _under(chord)):
            circle = circles[rng.randrange(components)]
            circle.insert(rng.randint(0, len(circle)), endpoint)
        signs[chord] = rng.choice((Sign.POSITIVE, Sign.NEGATIVE))
    return GaussDiagram.build(circles, signs)


def gen_random(
    components: int,
    chords: int,
    seed: int,
    *,
    homogeneous_proper: bool = False,
    max_attempts: int = DEFAULT_REJECTION_BUDGET,
) -> GaussDiagram:
    """Seeded random diagram; with ``homogeneous_proper`` rejection-sample until all vlk are even."""
    if components < 1:
        raise GenerationError(f"component count must be >= 1, got {components}", seed=seed)
    if chords < 0:
        raise GenerationError(f"chord count must be >= 0, got {chords}", seed=seed)
    rng = random.Random(seed)
    for attempt in range(1, max_attempts + 1):
        d = _random_diagram(rng, components, chords)
        if not homogeneous_proper or is_homogeneous_proper(d):
            if attempt > 1:
                logger.debug("seed %d accepted after %d attempts", seed, attempt)
            return ensure_valid(d)
    raise GenerationError(
        f"no homogeneous proper diagram within {max_attempts} attempts; retry with a new seed",
        seed=seed,
    )


# ── Family specs ─────────────────────────────────────────────────────────


@dataclass(frozen=True, slots=True)
class FamilySpec:
    """A named family plus its integer parameters.

    ``canonical`` takes ``args = (n,)`` and the odd ``(over, under)`` pairs in
    ``odd``; ``random`` takes ``(components, chords)`` and ``seed``.
    """

    name: FamilyName
    args: tuple[int, ...] = ()
    odd: tuple[tuple[int, int], ...] = ()
    seed: int | None = None
    homogeneous_proper: bool = False

    def _arity(self, count: int) -> tuple[int, ...]:
        if len(self.args) != count:
            raise GenerationError(f"family {self.name!r} takes {count} integer argument(s)")
        return self.args

    def generate(self) -> GaussDiagram:
        name = self.name
        if name == "canonical":
            (n,) = self._arity(1)
            _require_positive("component count", n)
            for i, j in self.odd:
                if not (1 <= i <= n and 1 <= j <= n) or i == j:
                    raise GenerationError(f"bad parity entry ({i},{j}) for {n} components")
            return gen_canonical(ParityMatrix.from_pairs(n, list(self.odd)))
        if name == "lpq":
            return gen_lpq(*self._arity(2))
        if name == "l2n1":
            return gen_l2n1(*self._arity(1))
        if name == "torus":
            return gen_torus(*self._arity(1))
        if name == "random":
            components, chords = self._arity(2)
            return gen_random(
                components,
                chords,
                0 if self.seed is None else self.seed,
                homogeneous_proper=self.homogeneous_proper,
            )
        if name == "virtual-hopf":
            self._arity(0)
            return gen_virtual_hopf()
        if name == "trefoil":
            if self.args:
                return gen_virtual_trefoil(*self._arity(1))
            return gen_virtual_trefoil()
        if name == "twin-trefoil":
            self._arity(0)
            return gen_twin_trefoil()
        raise GenerationError(f"unknown family {name!r}")
