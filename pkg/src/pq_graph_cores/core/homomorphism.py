"""
Exact homomorphism search.

Variables are source vertices, domains are target bitsets. Vertices are
ordered statically (largest degree first, then most neighbours among the
already-ordered vertices) and values are tried in ascending index order, so
identical inputs give identical witnesses. Forward checking intersects each
unassigned neighbour's domain with the chosen value's neighbourhood.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .budget import BudgetExhausted, SearchBudget, SearchMeter, SearchResult, SearchStatus
from .clique import clique_number
from .graph import (
    Graph,
    GraphError,
    Homomorphism,
    VertexSet,
    complete_graph,
    induced_subgraph,
    iter_bits,
    odd_girth,
    to_mask,
)

logger = logging.getLogger(__name__)


class ConstraintError(ValueError):
    """Raised for a HomConstraint that is not total or has an empty class."""


class ConstraintMode(Enum):
    ETA = "eta"  # G(p,s) -> G(q,u)
    ZETA = "zeta"  # G(q,u) -> G(p,s)


@dataclass(frozen=True)
class HomConstraint:
    """
    Arc-labelled restriction on a homomorphism into a cyclic target.

    Every source arc (x, z) carries a class; the target value of z must lie in
    f(x) + allowed[class] (mod modulus). Target vertex i is residue i.
    """

    mode: ConstraintMode
    modulus: int
    arc_class: Dict[Tuple[int, int], int] = field(hash=False)
    allowed: Dict[int, FrozenSet[int]] = field(hash=False)

    def validate(self, source: Graph) -> None:
        for arc in source.arcs():
            if arc not in self.arc_class:
                raise ConstraintError(f"arc {arc} has no class")
        for cls, residues in self.allowed.items():
            if not residues:
                raise ConstraintError(f"class {cls} has an empty allowed set")
        missing = set(self.arc_class.values()) - set(self.allowed)
        if missing:
            raise ConstraintError(f"classes {sorted(missing)} have no allowed set")

    def shifted_masks(self) -> Dict[int, List[int]]:
        """masks[cls][y] = bitset of y + allowed[cls]."""
        return {
            cls: [to_mask((y + d) % self.modulus for d in residues) for y in range(self.modulus)]
            for cls, residues in self.allowed.items()
        }

    def satisfied_by(self, mapping: Sequence[int]) -> bool:
        return all(
            (mapping[z] - mapping[x]) % self.modulus in self.allowed[cls]
            for (x, z), cls in self.arc_class.items()
        )


def search_order(graph: Graph, first: Sequence[int] = ()) -> List[int]:
    """
    Static variable order: pinned vertices, then max degree, then most
    neighbours among ordered vertices (ties: degree, then index).
    """
    order = list(first)
    placed = to_mask(order)
    remaining = [v for v in range(graph.n) if not (placed >> v) & 1]
    while remaining:
        best = max(
            remaining,
            key=lambda v: ((graph.rows[v] & placed).bit_count(), graph.degree(v), -v),
        )
        order.append(best)
        placed |= 1 << best
        remaining.remove(best)
    return order


class _HomSearch:
    def __init__(
        self,
        source: Graph,
        target: Graph,
        domains: List[int],
        order: List[int],
        meter: SearchMeter,
        constraint: Optional[HomConstraint] = None,
    ):
        self.source = source
        self.target = target
        self.domains = domains
        self.order = order
        self.meter = meter
        self.constraint = constraint
        self.masks = constraint.shifted_masks() if constraint else None
        self.assignment: List[int] = [-1] * source.n

    def _allowed_for(self, v: int, y: int, z: int) -> int:
        allowed = self.target.rows[y]
        if self.masks is not None:
            allowed &= self.masks[self.constraint.arc_class[(v, z)]][y]
        return allowed

    def run(self) -> Optional[Tuple[int, ...]]:
        if any(d == 0 for d in self.domains):
            return None
        if self._assign(0):
            return tuple(self.assignment)
        return None

    def _assign(self, depth: int) -> bool:
        if depth == len(self.order):
            return True
        self.meter.tick()
        v = self.order[depth]
        for y in iter_bits(self.domains[v]):
            saved: List[Tuple[int, int]] = []
            ok = True
            for z in iter_bits(self.source.rows[v]):
                if self.assignment[z] != -1:
                    continue
                narrowed = self.domains[z] & self._allowed_for(v, y, z)
                if narrowed != self.domains[z]:
                    saved.append((z, self.domains[z]))
                    self.domains[z] = narrowed
                if not narrowed:
                    ok = False
                    break
            if ok:
                self.assignment[v] = y
                if self._assign(depth + 1):
                    return True
                self.assignment[v] = -1
            for z, old in reversed(saved):
                self.domains[z] = old
        return False


def _prefilter(source: Graph, target: Graph) -> Optional[str]:
    """Reason no homomorphism can exist, or None."""
    if source.edge_count and not target.edge_count:
        return "source has edges, target has none"
    if source.edge_count:
        g_source = odd_girth(source)
        g_target = odd_girth(target)
        if g_source is not None and (g_target is None or g_source < g_target):
            return f"odd girth {g_source} below target odd girth {g_target}"
    return None


def find_homomorphism(
    source: Graph,
    target: Graph,
    budget: Optional[SearchBudget] = None,
    fixed: Optional[Dict[int, int]] = None,
    constraint: Optional[HomConstraint] = None,
) -> SearchResult:
    """
    Search for a homomorphism source -> target.

    Args:
        fixed: source vertex -> target vertex pins
        constraint: optional arc-class restriction (eta/zeta searches)

    Returns:
        SearchResult FOUND (witness: Homomorphism), NONE, or INDETERMINATE
    """
    fixed = dict(fixed or {})
    if constraint is not None:
        constraint.validate(source)
        if constraint.modulus != target.n:
            raise ConstraintError("constraint modulus must equal the target order")

    reason = _prefilter(source, target)
    if reason is not None:
        logger.debug(f"no homomorphism {source!r} -> {target!r}: {reason}")
        return SearchResult(SearchStatus.NONE)

    full = target.all_mask
    domains = [full] * source.n
    for v, y in fixed.items():
        domains[v] = 1 << y
    # propagate pins before searching
    masks = constraint.shifted_masks() if constraint is not None else None
    for v, y in fixed.items():
        for z in iter_bits(source.rows[v]):
            allowed = target.rows[y]
            if masks is not None:
                allowed &= masks[constraint.arc_class[(v, z)]][y]
            domains[z] &= allowed

    meter = (budget or SearchBudget()).start()
    order = search_order(source, first=sorted(fixed))
    search = _HomSearch(source, target, domains, order, meter, constraint)
    try:
        mapping = search.run()
    except BudgetExhausted:
        logger.warning(
            f"homomorphism search {source!r} -> {target!r} "
            f"exhausted budget after {meter.nodes} nodes"
        )
        return SearchResult(SearchStatus.INDETERMINATE, nodes=meter.nodes, elapsed=meter.elapsed)

    if mapping is None:
        return SearchResult(SearchStatus.NONE, nodes=meter.nodes, elapsed=meter.elapsed)
    hom = Homomorphism(source, target, mapping)
    ok, why = hom.validate()
    if not ok or (constraint is not None and not constraint.satisfied_by(mapping)):
        raise RuntimeError(f"search produced an invalid map: {why}")
    return SearchResult(SearchStatus.FOUND, witness=hom, nodes=meter.nodes, elapsed=meter.elapsed)


def find_constrained_homomorphism(
    source: Graph,
    target: Graph,
    constraint: HomConstraint,
    budget: Optional[SearchBudget] = None,
) -> SearchResult:
    return find_homomorphism(source, target, budget, constraint=constraint)


def find_retraction(
    graph: Graph, vertices: VertexSet, budget: Optional[SearchBudget] = None
) -> SearchResult:
    """
    Homomorphism graph -> induced_subgraph(graph, vertices) fixing `vertices`.

    The target is indexed in ascending order of `vertices`.
    """
    mask = to_mask(vertices)
    if not mask or mask & ~graph.all_mask:
        raise GraphError("retraction needs a non-empty subset of the vertex set")
    members = list(iter_bits(mask))
    target = induced_subgraph(graph, mask)
    pins = {v: i for i, v in enumerate(members)}
    return find_homomorphism(graph, target, budget, fixed=pins)


def greedy_coloring(graph: Graph) -> Tuple[int, ...]:
    """DSATUR colouring (ties: degree, then index)."""
    colors = [-1] * graph.n
    saturation = [0] * graph.n  # bitset of neighbour colours
    for _ in range(graph.n):
        v = max(
            (x for x in range(graph.n) if colors[x] == -1),
            key=lambda x: (saturation[x].bit_count(), graph.degree(x), -x),
        )
        c = 0
        while (saturation[v] >> c) & 1:
            c += 1
        colors[v] = c
        for u in iter_bits(graph.rows[v]):
            saturation[u] |= 1 << c
    return tuple(colors)


def chromatic_number(graph: Graph, budget: Optional[SearchBudget] = None) -> SearchResult:
    """
    Exact chi(G) by iterative k-colourability, k from omega upwards.

    The witness clique is pre-coloured 0..omega-1 to break colour symmetry.
    """
    if graph.n == 0:
        return SearchResult(SearchStatus.FOUND, value=0, witness=(), lower=0, upper=0)
    if graph.edge_count == 0:
        return SearchResult(
            SearchStatus.FOUND, value=1, witness=(0,) * graph.n, lower=1, upper=1
        )

    greedy = greedy_coloring(graph)
    upper = max(greedy) + 1
    clique = clique_number(graph, budget)
    nodes = clique.nodes
    if clique.indeterminate:
        return SearchResult(
            SearchStatus.INDETERMINATE, lower=clique.lower, upper=upper, nodes=nodes
        )
    lower = clique.value
    pins = {v: i for i, v in enumerate(clique.witness)}

    for k in range(lower, upper):
        attempt = find_homomorphism(graph, complete_graph(k), budget, fixed=pins)
        nodes += attempt.nodes
        if attempt.indeterminate:
            return SearchResult(SearchStatus.INDETERMINATE, lower=k, upper=upper, nodes=nodes)
        if attempt.found:
            coloring = attempt.witness.mapping
            return SearchResult(
                SearchStatus.FOUND, value=k, witness=coloring, lower=k, upper=k, nodes=nodes
            )
        logger.debug(f"no {k}-colouring of {graph!r}")

    return SearchResult(
        SearchStatus.FOUND, value=upper, witness=greedy, lower=upper, upper=upper, nodes=nodes
    )
