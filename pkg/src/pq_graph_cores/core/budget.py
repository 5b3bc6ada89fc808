"""
Search budgets and result records shared by every exact solver.

A budget bounds one solver call by node count and wall-clock seconds. When it
runs out the solver reports INDETERMINATE instead of a guessed answer.
"""

import logging
import time
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple

logger = logging.getLogger(__name__)

DEFAULT_NODE_LIMIT = 10**8
DEFAULT_TIME_LIMIT = 300.0

# Clock is read once per this many nodes.
_CLOCK_STRIDE = 1024


class SearchStatus(Enum):
    FOUND = "found"
    NONE = "none"
    INDETERMINATE = "indeterminate"


class BudgetExhausted(Exception):
    """Raised inside a search when its meter runs out."""

    def __init__(self, nodes: int, elapsed: float):
        super().__init__(f"budget exhausted after {nodes} nodes / {elapsed:.2f}s")
        self.nodes = nodes
        self.elapsed = elapsed


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int = DEFAULT_NODE_LIMIT
    time_limit: float = DEFAULT_TIME_LIMIT

    def __post_init__(self):
        if self.node_limit < 1:
            raise ValueError(f"node_limit must be positive, got {self.node_limit}")
        if self.time_limit <= 0:
            raise ValueError(f"time_limit must be positive, got {self.time_limit}")

    def start(self) -> "SearchMeter":
        return SearchMeter(self)


class SearchMeter:
    """Counts nodes of one search and enforces its budget."""

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.started = time.monotonic()

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.started

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise BudgetExhausted(self.nodes, self.elapsed)
        if self.nodes % _CLOCK_STRIDE == 0 and self.elapsed > self.budget.time_limit:
            raise BudgetExhausted(self.nodes, self.elapsed)


@dataclass
class SearchResult:
    """
    Outcome of one exact search.

    `value` carries the computed number (clique size, chromatic number) and
    `witness` the object proving it (clique, colouring, Homomorphism). On
    INDETERMINATE, `lower`/`upper` hold the bounds reached so far.
    """

    status: SearchStatus
    value: Optional[int] = None
    witness: Any = None
    lower: Optional[int] = None
    upper: Optional[int] = None
    nodes: int = 0
    elapsed: float = 0.0

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND

    @property
    def indeterminate(self) -> bool:
        return self.status is SearchStatus.INDETERMINATE

    @property
    def bounds(self) -> Tuple[Optional[int], Optional[int]]:
        return self.lower, self.upper

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {"status": self.status.value, "nodes": self.nodes}
        if self.value is not None:
            data["value"] = self.value
        if self.status is SearchStatus.INDETERMINATE:
            data["bounds"] = [self.lower, self.upper]
        if timing:
            data["elapsed_s"] = round(self.elapsed, 4)
        return data


def budget_from_config(config: Optional[Dict[str, Any]] = None) -> SearchBudget:
    """
    Build a budget from a plain config dict.

    Keys: node_limit (int), time_limit (seconds). Missing keys fall back to
    DEFAULT_NODE_LIMIT / DEFAULT_TIME_LIMIT.
    """
    config = config or {}
    return SearchBudget(
        node_limit=int(config.get("node_limit", DEFAULT_NODE_LIMIT)),
        time_limit=float(config.get("time_limit", DEFAULT_TIME_LIMIT)),
    )
