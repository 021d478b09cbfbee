"""Arc shift number brackets.

Lower bounds come from invariants. Upper bounds come from the planner and
from a breadth-first search layered by arc shift count: states are
simplify-normal forms deduplicated by canonical key, successors are every
ArcShift and SignShift instance followed by simplify. Levels are expanded
in frontier order and merged in that order, so the result does not depend
on the number of workers.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import Executor, ProcessPoolExecutor
from contextlib import nullcontext
from dataclasses import dataclass
from functools import partial
from typing import Iterable

from ..errors import ArcShiftError
from ..gauss import CanonicalKey, GaussDiagram, canonical_key
from ..invariants import odd_writhe, parity_matrix, vlk_matrix
from ..moves import MoveInstance, MoveKind, MoveScript, applicable, apply
from ..planner import Reduction, replay, unknot
from .models import AtLeast, AtMost, Bracket, Obstructed, SearchBudget, SearchStats

logger = logging.getLogger(__name__)


def simplify(d: GaussDiagram) -> Reduction:
    """Apply the first R1Remove, else the first R2Remove, until neither applies."""
    current = d
    moves: list[MoveInstance] = []
    while True:
        candidates = applicable(current, MoveKind.R1_REMOVE) or applicable(current, MoveKind.R2_REMOVE)
        if not candidates:
            return Reduction(d, MoveScript(tuple(moves)), current)
        current = apply(current, candidates[0])
        moves.append(candidates[0])


def lower_bound(d: GaussDiagram) -> Obstructed | AtLeast:
    """Obstructed when a parity bit is odd, else max(ceil(|J|/2), t)."""
    parity = parity_matrix(d)
    if not parity.is_zero:
        return Obstructed(odd_entries=tuple(parity.odd_entries()))
    writhe = odd_writhe(d)
    nontrivial = writhe != 0 or any(value for row in vlk_matrix(d) for value in row)
    t = 1 if nontrivial and not simplify(d).output.is_unlink else 0
    return AtLeast(value=max(math.ceil(abs(writhe) / 2), t))


# ── Search ───────────────────────────────────────────────────────────────


@dataclass(frozen=True, slots=True)
class _State:
    diagram: GaussDiagram
    script: MoveScript


@dataclass(frozen=True, slots=True)
class _Successor:
    move: MoveInstance
    reduction: Reduction


@dataclass(frozen=True, slots=True)
class SearchResult:
    upper: AtMost | None
    stats: SearchStats


def _successors(state: _State, budget: SearchBudget) -> tuple[list[_Successor], list[_Successor]]:
    """(arc shift successors, zero-cost successors) in deterministic order."""
    d = state.diagram
    costly = [
        _Successor(move, simplify(apply(d, move)))
        for kind in (MoveKind.ARC_SHIFT, MoveKind.SIGN_SHIFT)
        for move in applicable(d, kind)
    ]
    free: list[_Successor] = []
    if budget.allow_r3:
        free.extend(_Successor(move, simplify(apply(d, move))) for move in applicable(d, MoveKind.R3))
    if budget.allow_r2_insert and d.chord_count + 2 <= budget.max_chords_inflight:
        for move in applicable(d, MoveKind.R2_INSERT):
            after = apply(d, move)
            free.append(_Successor(move, Reduction(after, MoveScript(), after)))
    return costly, free


def _expand(
    wave: list[_State], budget: SearchBudget, pool: Executor | None
) -> Iterable[tuple[list[_Successor], list[_Successor]]]:
    """Successors of every state in ``wave``, in wave order."""
    expand = partial(_successors, budget=budget)
    if pool is None or len(wave) < 2:
        return map(expand, wave)
    return pool.map(expand, wave, chunksize=max(1, len(wave) // (4 * budget.workers)))


class _LayeredSearch:
    def __init__(self, d: GaussDiagram, budget: SearchBudget, limit: int) -> None:
        self.origin = d
        self.budget = budget
        self.limit = limit
        self.seen: set[CanonicalKey] = set()
        self.explored = 0
        self.levels = 0
        self.exhausted = False

    def _verified(self, script: MoveScript) -> AtMost:
        if not replay(self.origin, script).is_unlink:
            raise ArcShiftError(f"search witness does not reach the unlink: {script}")
        return AtMost.of(script)

    def _admit(self, state: _State, successor: _Successor) -> _State | None:
        output = successor.reduction.output
        key = canonical_key(output)
        if key in self.seen:
            return None
        if self.explored >= self.budget.max_states:
            self.exhausted = True
            return None
        self.seen.add(key)
        self.explored += 1
        script = state.script + MoveScript.of(successor.move) + successor.reduction.script
        return _State(output, script)

    def run(self, start: Reduction) -> AtMost | None:
        pool = ProcessPoolExecutor(max_workers=self.budget.workers) if self.budget.workers > 1 else None
        with pool or nullcontext():
            return self._levels(start, pool)

    def _levels(self, start: Reduction, pool: Executor | None) -> AtMost | None:
        self.seen.add(canonical_key(start.output))
        frontier = [_State(start.output, start.script)]
        for level in range(1, self.limit + 1):
            next_frontier: list[_State] = []
            wave = frontier
            while wave and not self.exhausted:
                expanded = _expand(wave, self.budget, pool)
                next_wave: list[_State] = []
                for state, (costly, free) in zip(wave, expanded):
                    for successor, target in [(s, next_frontier) for s in costly] + [(s, next_wave) for s in free]:
                        admitted = self._admit(state, successor)
                        if admitted is None:
                            continue
                        if admitted.diagram.is_unlink:
                            return self._verified(admitted.script)
                        target.append(admitted)
                    if self.exhausted:
                        break
                wave = next_wave
            if self.exhausted:
                logger.warning("search budget exhausted after %d states at level %d", self.explored, level)
                return None
            self.levels = level
            logger.info("level %d: %d new states, %d explored", level, len(next_frontier), self.explored)
            if not next_frontier:
                return None
            frontier = next_frontier
        return None


def _planner_witness(d: GaussDiagram, budget: SearchBudget) -> AtMost | None:
    if not budget.seed_with_planner or not parity_matrix(d).is_zero:
        return None
    return AtMost.of(unknot(d))


def run_search(d: GaussDiagram, budget: SearchBudget | None = None, *, lower: int = 0) -> SearchResult:
    """Best upper bound within ``budget`` together with the search statistics."""
    budget = budget or SearchBudget()
    if not parity_matrix(d).is_zero:
        return SearchResult(None, SearchStats(budget_status="not-needed"))

    start = simplify(d)
    if start.output.is_unlink:
        return SearchResult(AtMost.of(start.script), SearchStats(budget_status="not-needed"))

    seed = _planner_witness(d, budget)
    if seed is not None and seed.value <= max(lower, 1):
        return SearchResult(seed, SearchStats(budget_status="not-needed"))

    limit = budget.max_arc_shifts if seed is None else min(budget.max_arc_shifts, seed.value - 1)
    search = _LayeredSearch(d, budget, limit)
    found = search.run(start)
    status = "exhausted" if search.exhausted else "complete"
    stats = SearchStats(states_explored=search.explored, levels_completed=search.levels, budget_status=status)
    return SearchResult(found or seed, stats)


def upper_bound(d: GaussDiagram, budget: SearchBudget | None = None) -> AtMost | None:
    """Replay-verified upper bound, or None when the budget runs out first."""
    return run_search(d, budget).upper


def bracket(d: GaussDiagram, budget: SearchBudget | None = None) -> Bracket:
    low = lower_bound(d)
    if isinstance(low, Obstructed):
        return Bracket(lower=low, upper=None, exact=False)
    result = run_search(d, budget, lower=low.value)
    upper = result.upper
    if upper is not None and upper.value < low.value:
        raise ArcShiftError(f"unsound bracket: upper {upper.value} below lower {low.value}")
    exact = upper is not None and upper.value == low.value
    return Bracket(lower=low, upper=upper, exact=exact, stats=result.stats)
