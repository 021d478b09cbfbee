from .engine import SearchResult, bracket, lower_bound, run_search, simplify, upper_bound
from .models import (
    DEFAULT_MAX_ARC_SHIFTS,
    DEFAULT_MAX_CHORDS_INFLIGHT,
    DEFAULT_MAX_STATES,
    DEFAULT_WORKERS,
    AtLeast,
    AtMost,
    Bracket,
    BudgetStatus,
    Obstructed,
    SearchBudget,
    SearchModel,
    SearchStats,
)

__all__ = [
    "DEFAULT_MAX_ARC_SHIFTS",
    "DEFAULT_MAX_CHORDS_INFLIGHT",
    "DEFAULT_MAX_STATES",
    "DEFAULT_WORKERS",
    "AtLeast",
    "AtMost",
    "Bracket",
    "BudgetStatus",
    "Obstructed",
    "SearchBudget",
    "SearchModel",
    "SearchResult",
    "SearchStats",
    "bracket",
    "lower_bound",
    "run_search",
    "simplify",
    "upper_bound",
]
