"""
Exact maximum clique / maximum independent set.

Branch and bound with a greedy colouring bound (MCQ ordering): vertices are
re-indexed by descending degree, candidate sets are bitsets, and a branch is
cut when |R| + colour(v) cannot beat the incumbent.
"""

import logging
from typing import List, Optional, Tuple

from .budget import BudgetExhausted, SearchBudget, SearchMeter, SearchResult, SearchStatus
from .graph import Graph, complement, iter_bits

logger = logging.getLogger(__name__)


def _color_sort(rows: List[int], candidates: int) -> Tuple[List[int], List[int]]:
    """Greedy sequential colouring; returns vertices and their colour numbers."""
    order: List[int] = []
    colors: List[int] = []
    uncolored = candidates
    color = 0
    while uncolored:
        color += 1
        available = uncolored
        while available:
            low = available & -available
            v = low.bit_length() - 1
            available &= ~low & ~rows[v]
            uncolored &= ~low
            order.append(v)
            colors.append(color)
    return order, colors


class _CliqueSearch:
    def __init__(self, rows: List[int], meter: SearchMeter):
        self.rows = rows
        self.meter = meter
        self.best: List[int] = []
        self.current: List[int] = []

    def seed_greedy(self, candidates: int) -> None:
        clique: List[int] = []
        while candidates:
            v = max(iter_bits(candidates), key=lambda x: (self.rows[x] & candidates).bit_count())
            clique.append(v)
            candidates &= self.rows[v]
        self.best = clique

    def expand(self, candidates: int) -> None:
        self.meter.tick()
        order, colors = _color_sort(self.rows, candidates)
        for i in range(len(order) - 1, -1, -1):
            if len(self.current) + colors[i] <= len(self.best):
                return
            v = order[i]
            self.current.append(v)
            narrowed = candidates & self.rows[v]
            if narrowed:
                self.expand(narrowed)
            elif len(self.current) > len(self.best):
                self.best = list(self.current)
            self.current.pop()
            candidates &= ~(1 << v)


def clique_number(graph: Graph, budget: Optional[SearchBudget] = None) -> SearchResult:
    """
    Exact omega(G) with a witness clique (sorted original vertex indices).

    Returns:
        SearchResult FOUND with value/witness, or INDETERMINATE with bounds
    """
    if graph.n == 0:
        return SearchResult(SearchStatus.FOUND, value=0, witness=(), lower=0, upper=0)

    by_degree = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
    position = {v: i for i, v in enumerate(by_degree)}
    rows = [0] * graph.n
    for v in range(graph.n):
        for u in iter_bits(graph.rows[v]):
            rows[position[v]] |= 1 << position[u]

    meter = (budget or SearchBudget()).start()
    search = _CliqueSearch(rows, meter)
    everything = (1 << graph.n) - 1
    search.seed_greedy(everything)
    upper = max(_color_sort(rows, everything)[1])
    try:
        search.expand(everything)
    except BudgetExhausted:
        lower = len(search.best)
        logger.warning(f"clique search exhausted budget at bounds [{lower}, {upper}]")
        return SearchResult(
            SearchStatus.INDETERMINATE,
            witness=tuple(sorted(by_degree[v] for v in search.best)),
            lower=lower,
            upper=upper,
            nodes=meter.nodes,
            elapsed=meter.elapsed,
        )

    witness = tuple(sorted(by_degree[v] for v in search.best))
    logger.debug(f"omega={len(witness)} for {graph!r} in {meter.nodes} nodes")
    return SearchResult(
        SearchStatus.FOUND,
        value=len(witness),
        witness=witness,
        lower=len(witness),
        upper=len(witness),
        nodes=meter.nodes,
        elapsed=meter.elapsed,
    )


def independence_number(graph: Graph, budget: Optional[SearchBudget] = None) -> SearchResult:
    """Exact alpha(G) as omega of the complement; witness is an independent set."""
    return clique_number(complement(graph), budget)
