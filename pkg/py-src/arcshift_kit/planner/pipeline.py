"""Constructive unknotting and reduction to canonical parity representatives.

Pipeline, components taken left to right:

1. Self chords are made parallel: the Under endpoint of each interleaved
   self chord is arc-shifted along the shorter arc until it sits next to its
   Over endpoint, then the chord is removed by R1.
2. For each component pair ``i < j`` the chords between them are gathered
   into one block on ``i``, aligned in the same cyclic order on ``j`` and
   reordered so all i-over-j chords precede the j-over-i ones (two arc
   shifts per transposition, which keeps signs).
3. Consecutive chords of one direction are paired, signs made opposite by a
   SignShift when needed, and removed by R2.

Canonicalization leaves one chord per odd pair, then sorts every
component into the canonical layout and makes all leftover signs positive.
"""

from __future__ import annotations

import logging
from collections import Counter

from ..errors import ArcShiftError, NotHomogeneousProperError
from ..families import gen_canonical
from ..gauss import Endpoint, GaussDiagram, Role, Sign, chord_class, same_diagram, self_chords
from ..invariants import ParityMatrix, parity_matrix
from ..moves import MoveInstance, MoveScript, apply
from .types import PhaseCosts, Reduction, UnknotReport

logger = logging.getLogger(__name__)

_SELF = "self_alignment"
_MIXED = "mixed_alignment"
_REORDER = "direction_reordering"
_SIGN = "sign_adjustment"
_LAYOUT = "layout"


class _Session:
    """Current diagram plus the moves recorded so far."""

    def __init__(self, d: GaussDiagram) -> None:
        self.start = d
        self.diagram = d
        self.moves: list[MoveInstance] = []
        self.costs: Counter[str] = Counter()

    def do(self, move: MoveInstance, phase: str) -> None:
        self.diagram = apply(self.diagram, move)
        self.moves.append(move)
        self.costs[phase] += move.arc_shift_cost

    def where(self, endpoint: Endpoint) -> tuple[int, int]:
        return self.diagram.locations[endpoint]

    def length(self, k: int) -> int:
        return len(self.diagram.components[k - 1])

    def shift_backward(self, k: int, moving: Endpoint, anchor: Endpoint, phase: str) -> None:
        """Arc-shift ``moving`` backward until it sits right after ``anchor``."""
        while True:
            _, p = self.where(moving)
            _, q = self.where(anchor)
            size = self.length(k)
            if (q + 1) % size == p:
                return
            self.do(MoveInstance.arc_shift(k, (p - 1) % size), phase)

    def shift_forward(self, k: int, moving: Endpoint, anchor: Endpoint, phase: str) -> None:
        """Arc-shift ``moving`` forward until it sits right before ``anchor``."""
        while True:
            _, p = self.where(moving)
            _, q = self.where(anchor)
            size = self.length(k)
            if (p + 1) % size == q:
                return
            self.do(MoveInstance.arc_shift(k, p), phase)

    def reduction(self) -> Reduction:
        return Reduction(self.start, MoveScript(tuple(self.moves)), self.diagram)

    def phase_costs(self) -> PhaseCosts:
        return PhaseCosts(**{name: self.costs[name] for name in (_SELF, _MIXED, _REORDER, _SIGN, _LAYOUT)})


# ── Self chords ──────────────────────────────────────────────────────────


def _interleaved_self_chord(d: GaussDiagram, k: int) -> int | None:
    size = len(d.components[k - 1])
    for chord in self_chords(d, k):
        _, a = d.locate(chord, Role.OVER)
        _, b = d.locate(chord, Role.UNDER)
        if (a + 1) % size != b and (b + 1) % size != a:
            return chord
    return None


def _parallelize(session: _Session) -> None:
    for k in range(1, session.diagram.n + 1):
        while (chord := _interleaved_self_chord(session.diagram, k)) is not None:
            over, under = Endpoint(chord, Role.OVER), Endpoint(chord, Role.UNDER)
            _, a = session.where(over)
            _, b = session.where(under)
            size = session.length(k)
            backward = (b - a) % size - 1
            forward = (a - b) % size - 1
            if backward <= forward:
                session.shift_backward(k, under, over, _SELF)
            else:
                session.shift_forward(k, under, over, _SELF)
            logger.debug("self chord %d on component %d made parallel", chord, k)


def _strip(session: _Session) -> None:
    for k in range(1, session.diagram.n + 1):
        for chord in self_chords(session.diagram, k):
            session.do(MoveInstance.r1_remove(chord), _SELF)


def parallelize_self(d: GaussDiagram) -> Reduction:
    """Make every self chord's endpoints adjacent using ArcShift moves only."""
    session = _Session(d)
    _parallelize(session)
    return session.reduction()


def strip_self(d: GaussDiagram) -> Reduction:
    """Remove every self chord by R1; each must already have adjacent endpoints."""
    session = _Session(d)
    _strip(session)
    return session.reduction()


# ── Mixed chords ─────────────────────────────────────────────────────────


def _end_on(d: GaussDiagram, chord: int, k: int) -> Endpoint:
    over, _ = d.locate(chord, Role.OVER)
    return Endpoint(chord, Role.OVER if over == k else Role.UNDER)


def _pair_chords(d: GaussDiagram, i: int, j: int) -> tuple[list[int], list[int]]:
    """Chords i-over-j and j-over-i, each ordered by position on component ``i``."""
    forward: list[tuple[int, int]] = []
    backward: list[tuple[int, int]] = []
    for p, endpoint in enumerate(d.components[i - 1]):
        cls = chord_class(d, endpoint.chord)
        if (cls.over, cls.under) == (i, j):
            forward.append((p, endpoint.chord))
        elif (cls.over, cls.under) == (j, i):
            backward.append((p, endpoint.chord))
    return [c for _, c in forward], [c for _, c in backward]


def _reduce_pair(session: _Session, i: int, j: int) -> list[int]:
    """Cancel the chords between ``i`` and ``j`` in pairs; return the leftovers."""
    forward, backward = _pair_chords(session.diagram, i, j)
    if len(forward) < 2 and len(backward) < 2:
        return forward + backward

    d = session.diagram
    block = sorted(forward + backward, key=lambda c: d.locations[_end_on(d, c, i)][1])
    for prev, cur in zip(block, block[1:]):
        session.shift_backward(i, _end_on(d, cur, i), _end_on(d, prev, i), _MIXED)
    for prev, cur in zip(block, block[1:]):
        session.shift_backward(j, _end_on(d, cur, j), _end_on(d, prev, j), _MIXED)

    direction = {c: 0 for c in forward} | {c: 1 for c in backward}
    for _ in range(len(block)):
        for t in range(len(block) - 1):
            first, second = block[t], block[t + 1]
            if direction[first] <= direction[second]:
                continue
            for k in (i, j):
                _, p = session.where(_end_on(d, first, k))
                session.do(MoveInstance.arc_shift(k, p), _REORDER)
            block[t], block[t + 1] = second, first

    leftovers: list[int] = []
    for group in ([c for c in block if direction[c] == 0], [c for c in block if direction[c] == 1]):
        for first, second in zip(group[0::2], group[1::2]):
            if session.diagram.sign(first) == session.diagram.sign(second):
                session.do(MoveInstance.sign_shift(second), _SIGN)
            session.do(MoveInstance.r2_remove(first, second), _SIGN)
        if len(group) % 2:
            leftovers.append(group[-1])
    logger.debug("pair (%d,%d): leftovers %s", i, j, leftovers)
    return leftovers


def _reduce_mixed(session: _Session) -> None:
    n = session.diagram.n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            _reduce_pair(session, i, j)


def _run(d: GaussDiagram) -> _Session:
    session = _Session(d)
    _parallelize(session)
    _strip(session)
    _reduce_mixed(session)
    return session


# ── Public pipeline ──────────────────────────────────────────────────────


def _require_homogeneous_proper(d: GaussDiagram) -> None:
    parity = parity_matrix(d)
    if not parity.is_zero:
        odd = parity.odd_entries()
        raise NotHomogeneousProperError(
            "not homogeneous proper: odd virtual linking numbers at "
            + ", ".join(f"vlk({i},{j})" for i, j in odd),
            odd_entries=odd,
        )


def unknot_report(d: GaussDiagram) -> UnknotReport:
    """Unknotting reduction together with the cost spent in each phase."""
    _require_homogeneous_proper(d)
    session = _run(d)
    if not session.diagram.is_unlink:
        raise ArcShiftError("planner did not reach the unlink")
    phases = session.phase_costs()
    logger.info("unknotted %d chords with arc shift cost %d", d.chord_count, phases.total)
    return UnknotReport(session.reduction(), phases)


def unknot(d: GaussDiagram) -> MoveScript:
    """Script taking a homogeneous proper diagram to the unlink."""
    return unknot_report(d).script


def _pair_rank(n: int) -> dict[tuple[int, int], int]:
    return {pair: rank for rank, pair in enumerate(ParityMatrix.ordered_pairs(n))}


def _normalize_layout(session: _Session) -> None:
    d = session.diagram
    rank = _pair_rank(d.n)

    def key(endpoint: Endpoint) -> int:
        cls = chord_class(session.diagram, endpoint.chord)
        return rank[(cls.over, cls.under)]

    for k in range(1, d.n + 1):
        size = session.length(k)
        for _ in range(size):
            for p in range(size - 1):
                component = session.diagram.components[k - 1]
                if key(component[p]) > key(component[p + 1]):
                    session.do(MoveInstance.arc_shift(k, p), _LAYOUT)

    for chord in list(session.diagram.first_occurrence_labels()):
        if session.diagram.sign(chord) is Sign.NEGATIVE:
            session.do(MoveInstance.sign_shift(chord), _SIGN)


def canonicalize_to_class(d: GaussDiagram) -> Reduction:
    """Reduce ``d`` to the canonical representative of its parity class."""
    session = _run(d)
    _normalize_layout(session)
    target = gen_canonical(parity_matrix(d))
    if not same_diagram(session.diagram, target):
        raise ArcShiftError("canonicalization did not reach the class representative")
    return session.reduction()
