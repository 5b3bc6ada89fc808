"""
Graph isomorphism and induced-subgraph search.

Colour refinement is run jointly on both graphs so colours are comparable,
then a backtracking matcher extends a partial map one vertex at a time with
bitset consistency checks.
"""

import logging
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from .budget import BudgetExhausted, SearchBudget, SearchMeter, SearchResult, SearchStatus
from .graph import Graph, bfs_levels, iter_bits

logger = logging.getLogger(__name__)


def _distance_signature(graph: Graph, v: int) -> Tuple[int, ...]:
    counts = Counter(level for level in bfs_levels(graph, v) if level >= 0)
    return tuple(counts[k] for k in range(max(counts) + 1))


def refine_colors(graphs: Sequence[Graph]) -> List[List[int]]:
    """
    Stable colour refinement over several graphs with a shared palette.

    Initial colours are (degree, distance profile); each round appends the
    sorted multiset of neighbour colours.
    """
    signatures = [
        [(g.degree(v), _distance_signature(g, v)) for v in range(g.n)] for g in graphs
    ]
    palette = {sig: i for i, sig in enumerate(sorted({s for sigs in signatures for s in sigs}))}
    colors = [[palette[s] for s in sigs] for sigs in signatures]
    classes = len(palette)
    while True:
        signatures = [
            [(c[v], tuple(sorted(c[u] for u in iter_bits(g.rows[v])))) for v in range(g.n)]
            for g, c in zip(graphs, colors)
        ]
        palette = {
            sig: i for i, sig in enumerate(sorted({s for sigs in signatures for s in sigs}))
        }
        colors = [[palette[s] for s in sigs] for sigs in signatures]
        if len(palette) == classes:
            return colors
        classes = len(palette)


class _Matcher:
    """Injective, adjacency- and non-adjacency-preserving map small -> large."""

    def __init__(
        self,
        small: Graph,
        large: Graph,
        allowed: List[int],
        seed: Dict[int, int],
        meter: SearchMeter,
    ):
        self.small = small
        self.large = large
        self.allowed = allowed
        self.meter = meter
        self.mapping: Dict[int, int] = {}
        self.image_mask = 0
        self.seed = seed
        self.order = self._vertex_order()

    def _vertex_order(self) -> List[int]:
        order = list(self.seed)
        placed = 0
        for v in order:
            placed |= 1 << v
        remaining = [v for v in range(self.small.n) if not (placed >> v) & 1]
        while remaining:
            best = max(
                remaining,
                key=lambda v: (
                    (self.small.rows[v] & placed).bit_count(),
                    -self.allowed[v].bit_count(),
                    self.small.degree(v),
                    -v,
                ),
            )
            order.append(best)
            placed |= 1 << best
            remaining.remove(best)
        return order

    def _candidates(self, v: int) -> int:
        nbr_img = 0
        for u in iter_bits(self.small.rows[v]):
            if u in self.mapping:
                nbr_img |= 1 << self.mapping[u]
        non_img = self.image_mask & ~nbr_img
        mask = self.allowed[v] & ~self.image_mask
        result = 0
        for c in iter_bits(mask):
            row = self.large.rows[c]
            if row & nbr_img == nbr_img and not row & non_img:
                result |= 1 << c
        return result

    def run(self) -> Optional[Tuple[int, ...]]:
        if self._extend(0):
            return tuple(self.mapping[v] for v in range(self.small.n))
        return None

    def _extend(self, depth: int) -> bool:
        if depth == len(self.order):
            return True
        self.meter.tick()
        v = self.order[depth]
        candidates = self._candidates(v)
        if v in self.seed:
            candidates &= 1 << self.seed[v]
        for c in iter_bits(candidates):
            self.mapping[v] = c
            self.image_mask |= 1 << c
            if self._extend(depth + 1):
                return True
            del self.mapping[v]
            self.image_mask &= ~(1 << c)
        return False


def _run_matcher(
    small: Graph,
    large: Graph,
    allowed: List[int],
    seed: Dict[int, int],
    budget: Optional[SearchBudget],
) -> SearchResult:
    meter = (budget or SearchBudget()).start()
    try:
        mapping = _Matcher(small, large, allowed, seed, meter).run()
    except BudgetExhausted:
        logger.warning(f"matcher budget exhausted after {meter.nodes} nodes")
        return SearchResult(SearchStatus.INDETERMINATE, nodes=meter.nodes, elapsed=meter.elapsed)
    status = SearchStatus.FOUND if mapping is not None else SearchStatus.NONE
    return SearchResult(status, witness=mapping, nodes=meter.nodes, elapsed=meter.elapsed)


def find_isomorphism(
    g: Graph,
    h: Graph,
    seed: Optional[Dict[int, int]] = None,
    budget: Optional[SearchBudget] = None,
) -> SearchResult:
    """Bijection g -> h (as a tuple) in `witness`, honouring prescribed `seed` pairs."""
    seed = dict(seed or {})
    if g.n != h.n or g.edge_count != h.edge_count:
        return SearchResult(SearchStatus.NONE)
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return SearchResult(SearchStatus.NONE)
    colors_g, colors_h = refine_colors([g, h])
    if Counter(colors_g) != Counter(colors_h):
        return SearchResult(SearchStatus.NONE)
    by_color: Dict[int, int] = {}
    for x, c in enumerate(colors_h):
        by_color[c] = by_color.get(c, 0) | (1 << x)
    allowed = [by_color[colors_g[v]] for v in range(g.n)]
    for v, x in seed.items():
        if not (allowed[v] >> x) & 1:
            return SearchResult(SearchStatus.NONE)
    return _run_matcher(g, h, allowed, seed, budget)


def is_isomorphic(
    g: Graph,
    h: Graph,
    seed: Optional[Dict[int, int]] = None,
    budget: Optional[SearchBudget] = None,
) -> Optional[Tuple[int, ...]]:
    """
    Isomorphism g -> h or None.

    Raises:
        BudgetExhausted: when the search cannot decide within the budget
    """
    result = find_isomorphism(g, h, seed, budget)
    if result.indeterminate:
        raise BudgetExhausted(result.nodes, result.elapsed)
    return result.witness


def find_induced_copy(
    small: Graph, large: Graph, budget: Optional[SearchBudget] = None
) -> SearchResult:
    """Vertices of `large` inducing a copy of `small`; witness maps small -> large."""
    if small.n > large.n:
        return SearchResult(SearchStatus.NONE)
    allowed = [
        sum(1 << c for c in range(large.n) if large.degree(c) >= small.degree(v))
        for v in range(small.n)
    ]
    return _run_matcher(small, large, allowed, {}, budget)
