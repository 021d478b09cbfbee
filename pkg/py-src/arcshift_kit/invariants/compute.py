"""Virtual linking numbers, parity matrix and odd writhe."""

from __future__ import annotations

import logging
from fractions import Fraction

from ..errors import DiagramError, OddWritheUndefinedError
from ..gauss import GaussDiagram, Role, self_chords
from .models import InvariantReport, LinkingNumber, ParityMatrix

logger = logging.getLogger(__name__)


def sign_e(value: int) -> int:
    """Sign map Z -> {-1, 0, 1}."""
    return (value > 0) - (value < 0)


def _check_pair(d: GaussDiagram, i: int, j: int) -> None:
    d.check_component(i)
    d.check_component(j)
    if i == j:
        raise DiagramError(f"virtual linking number needs distinct components, got {i} twice")


def vlk_matrix(d: GaussDiagram) -> list[list[int]]:
    """``matrix[i-1][j-1]`` = signed count of chords with Over on i, Under on j."""
    matrix = [[0] * d.n for _ in range(d.n)]
    for chord, sign in d.signs:
        over, _ = d.locate(chord, Role.OVER)
        under, _ = d.locate(chord, Role.UNDER)
        if over != under:
            matrix[over - 1][under - 1] += int(sign)
    return matrix


def vlk(d: GaussDiagram, i: int, j: int) -> int:
    """Virtual linking number of component ``i`` over component ``j``."""
    _check_pair(d, i, j)
    return vlk_matrix(d)[i - 1][j - 1]


def linking_number(d: GaussDiagram, i: int, j: int) -> Fraction:
    _check_pair(d, i, j)
    matrix = vlk_matrix(d)
    return Fraction(matrix[j - 1][i - 1] + matrix[i - 1][j - 1], 2)


def parity_matrix(d: GaussDiagram) -> ParityMatrix:
    matrix = vlk_matrix(d)
    return ParityMatrix(n=d.n, bits=tuple(tuple(value % 2 for value in row) for row in matrix))


def is_homogeneous_proper(d: GaussDiagram) -> bool:
    return parity_matrix(d).is_zero


def fused_class(d: GaussDiagram) -> tuple[tuple[int, ...], ...]:
    """The full vlk matrix; forbidden moves and Xi leave it unchanged."""
    return tuple(tuple(row) for row in vlk_matrix(d))


# ── Odd writhe ───────────────────────────────────────────────────────────


def odd_writhe_defined(d: GaussDiagram, i: int) -> bool:
    """False when component ``i`` carries a self chord but an odd endpoint count."""
    component = d.component(i)
    return len(component) % 2 == 0 or not self_chords(d, i)


def odd_crossings(d: GaussDiagram, i: int) -> set[int]:
    """Self chords of ``i`` with an odd number of endpoints strictly between their ends."""
    if not odd_writhe_defined(d, i):
        raise OddWritheUndefinedError(
            f"odd writhe undefined: component {i} has an odd endpoint count",
            component=i,
        )
    odd: set[int] = set()
    for chord in self_chords(d, i):
        _, a = d.locate(chord, Role.OVER)
        _, b = d.locate(chord, Role.UNDER)
        if (abs(a - b) - 1) % 2:
            odd.add(chord)
    return odd


def odd_writhe_component(d: GaussDiagram, i: int) -> int:
    return sum(int(d.sign(chord)) for chord in odd_crossings(d, i))


def odd_writhe(d: GaussDiagram) -> int:
    return sum(odd_writhe_component(d, i) for i in range(1, d.n + 1))


def _odd_writhe_or_none(d: GaussDiagram, i: int) -> int | None:
    if not odd_writhe_defined(d, i):
        return None
    return odd_writhe_component(d, i)


# ── Report ───────────────────────────────────────────────────────────────


def report(d: GaussDiagram) -> InvariantReport:
    matrix = vlk_matrix(d)
    parity = parity_matrix(d)
    components = tuple(_odd_writhe_or_none(d, i) for i in range(1, d.n + 1))
    total = None if any(value is None for value in components) else sum(components)  # type: ignore[arg-type]
    linking = tuple(
        LinkingNumber(i=i, j=j, value=str(Fraction(matrix[j - 1][i - 1] + matrix[i - 1][j - 1], 2)))
        for i in range(1, d.n + 1)
        for j in range(i + 1, d.n + 1)
    )
    result = InvariantReport(
        n=d.n,
        chord_count=d.chord_count,
        self_chords=tuple(tuple(self_chords(d, k)) for k in range(1, d.n + 1)),
        even=all(len(component) % 2 == 0 for component in d.components),
        vlk=tuple(tuple(row) for row in matrix),
        linking_numbers=linking,
        parity=parity,
        homogeneous_proper=parity.is_zero,
        odd_writhe_components=components,
        odd_writhe=total,
    )
    logger.debug("invariants: %d chords, parity odd entries %s", d.chord_count, parity.odd_entries())
    return result

