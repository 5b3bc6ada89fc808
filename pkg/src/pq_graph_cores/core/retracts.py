"""
Core computation by retract search, and core certificates.

For a vertex-transitive connected graph the core is vertex-transitive, so it
is a connected regular induced subgraph whose order divides |V|. The brute
force search enumerates such candidates through vertex 0 and asks for a
retraction pinned on the candidate. Other graphs are shrunk one vertex at a
time until no proper endomorphism remains.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

from .algebra import divisors, is_prime
from .budget import BudgetExhausted, SearchBudget, SearchMeter, SearchStatus
from .clique import clique_number
from .graph import (
    Graph,
    GraphError,
    Homomorphism,
    induced_subgraph,
    is_bipartite,
    is_connected,
    iter_bits,
    odd_girth,
    to_mask,
    valency,
)
from .homomorphism import find_homomorphism, find_retraction
from .isomorphism import find_induced_copy
from .orbits import GeneratorSet, vertex_orbits

logger = logging.getLogger(__name__)

BRUTE_FORCE_CUTOFF = 35


class CoreMethod(Enum):
    BRUTE = "brute"
    CLASSIFIED = "classified"
    CERTIFICATE = "certificate"


class CertificateLeg(Enum):
    INDUCED_COPY = "induced_copy"
    HOMOMORPHISM = "homomorphism"
    CORE_CHECK = "core_check"


class CertificateRejected(Exception):
    def __init__(self, leg: CertificateLeg, reason: str):
        super().__init__(f"certificate rejected at {leg.value}: {reason}")
        self.leg = leg
        self.reason = reason


@dataclass
class CoreResult:
    """
    A core with its retraction.

    `retraction` maps the source onto induced_subgraph(source, core_vertices),
    indexed in ascending order of core_vertices. Both are None when the search
    ran out of budget.
    """

    source: Graph
    status: SearchStatus
    method: CoreMethod
    core: Optional[Graph] = None
    retraction: Optional[Homomorphism] = None
    core_vertices: Tuple[int, ...] = ()
    core_tag: str = ""
    nodes: int = 0
    notes: List[str] = field(default_factory=list)

    @property
    def resolved(self) -> bool:
        return self.status is SearchStatus.FOUND

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "status": self.status.value,
            "method": self.method.value,
            "core_tag": self.core_tag,
            "nodes": self.nodes,
        }
        if self.core is not None:
            data["core_order"] = self.core.n
            data["core_vertices"] = list(self.core_vertices)
            data["retraction"] = list(self.retraction.mapping)
        if self.notes:
            data["notes"] = list(self.notes)
        return data


def core_tag_for(core: Graph, source_order: int) -> str:
    if core.n == source_order:
        return "SELF"
    if core.edge_count == core.n * (core.n - 1) // 2:
        return f"K_{core.n}"
    return f"order-{core.n}"


def _result(
    graph: Graph,
    vertices: Iterable[int],
    mapping: Tuple[int, ...],
    method: CoreMethod,
    nodes: int,
    notes: Optional[List[str]] = None,
) -> CoreResult:
    members = tuple(sorted(vertices))
    core = induced_subgraph(graph, members)
    retraction = Homomorphism(graph, core, mapping)
    return CoreResult(
        source=graph,
        status=SearchStatus.FOUND,
        method=method,
        core=core,
        retraction=retraction,
        core_vertices=members,
        core_tag=core_tag_for(core, graph.n),
        nodes=nodes,
        notes=notes or [],
    )


def _undecided(graph: Graph, method: CoreMethod, nodes: int, note: str) -> CoreResult:
    logger.warning(f"core of {graph!r} undecided: {note}")
    return CoreResult(graph, SearchStatus.INDETERMINATE, method, nodes=nodes, notes=[note])


def identity_result(
    graph: Graph, method: CoreMethod, notes: Optional[List[str]] = None
) -> CoreResult:
    """The graph as its own core."""
    return _result(graph, range(graph.n), tuple(range(graph.n)), method, 0, notes)


def regular_connected_subsets(
    graph: Graph, root: int, size: int, degree: int, meter: SearchMeter
) -> Iterator[int]:
    """
    Connected vertex sets of `size` containing `root` (other members above
    root) whose induced subgraph is `degree`-regular, as bitmasks.

    ESU-style growth: each set is produced once.
    """
    rows = graph.rows
    above = graph.all_mask & ~((1 << (root + 1)) - 1)

    def feasible(sub: int, count: int) -> bool:
        slots = size - count
        for x in iter_bits(sub):
            inner = (rows[x] & sub).bit_count()
            if inner > degree or degree - inner > slots:
                return False
        return True

    def grow(sub: int, count: int, ext: int, seen: int) -> Iterator[int]:
        meter.tick()
        if count == size:
            if all((rows[x] & sub).bit_count() == degree for x in iter_bits(sub)):
                yield sub
            return
        while ext:
            low = ext & -ext
            ext ^= low
            w = low.bit_length() - 1
            grown = sub | low
            if not feasible(grown, count + 1):
                continue
            new_ext = ext | (rows[w] & above & ~seen)
            yield from grow(grown, count + 1, new_ext, seen | rows[w] | low)

    start = 1 << root
    yield from grow(start, 1, rows[root] & above, start | rows[root])


def _bipartite_core(graph: Graph) -> CoreResult:
    coloring = is_bipartite(graph).coloring
    u, v = graph.edges()[0]
    members = (u, v)
    mapping = tuple(0 if coloring[x] == coloring[u] else 1 for x in range(graph.n))
    return _result(graph, members, mapping, CoreMethod.BRUTE, 0, ["bipartite"])


def _retraction_result(
    graph: Graph, members: Tuple[int, ...], hom: Homomorphism, nodes: int, note: str
) -> CoreResult:
    return _result(graph, members, hom.mapping, CoreMethod.BRUTE, nodes, [note])


def core_bruteforce(
    graph: Graph,
    vt: bool = False,
    budget: Optional[SearchBudget] = None,
    candidate_orders: Optional[Iterable[int]] = None,
) -> CoreResult:
    """
    Exact core by retract search.

    Args:
        vt: caller asserts vertex-transitivity (checked via generators upstream)
        candidate_orders: restrict candidate core orders (defaults to divisors of n)

    Returns:
        CoreResult, INDETERMINATE when any needed search ran out of budget
    """
    budget = budget or SearchBudget()
    n = graph.n
    if n == 0:
        raise GraphError("the empty graph has no core")
    if graph.edge_count == 0:
        return _result(graph, (0,), (0,) * n, CoreMethod.BRUTE, 0, ["edgeless"])
    if is_bipartite(graph).bipartite:
        return _bipartite_core(graph)
    if vt and is_prime(n):
        return identity_result(graph, CoreMethod.BRUTE, ["vertex-transitive of prime order"])

    nodes = 0
    clique = clique_number(graph, budget)
    nodes += clique.nodes
    if clique.indeterminate:
        return _undecided(graph, CoreMethod.BRUTE, nodes, "clique number")
    omega, witness = clique.value, clique.witness
    attempt = find_retraction(graph, witness, budget)
    nodes += attempt.nodes
    if attempt.indeterminate:
        return _undecided(graph, CoreMethod.BRUTE, nodes, f"retraction onto K_{omega}")
    if attempt.found:
        return _retraction_result(
            graph, witness, attempt.witness, nodes, f"retracts onto K_{omega}"
        )

    if vt and is_connected(graph):
        return _vt_core(graph, omega, budget, candidate_orders, nodes)
    return _shrink_core(graph, budget, nodes)


def _vt_core(
    graph: Graph,
    omega: int,
    budget: SearchBudget,
    candidate_orders: Optional[Iterable[int]],
    nodes: int,
) -> CoreResult:
    n = graph.n
    orders = sorted(
        k for k in (candidate_orders or divisors(n)) if omega < k < n and n % k == 0
    )
    target_girth = odd_girth(graph)
    top_degree = valency(graph) or max(graph.degree(v) for v in range(n))
    meter = budget.start()
    undecided = False
    try:
        for k in orders:
            for d in range(max(1, omega - 1), min(k, top_degree + 1)):
                if (k * d) % 2:
                    continue
                for candidate in regular_connected_subsets(graph, 0, k, d, meter):
                    sub = induced_subgraph(graph, candidate)
                    if odd_girth(sub) != target_girth:
                        continue
                    sized = clique_number(sub, budget)
                    nodes += sized.nodes
                    if sized.indeterminate:
                        undecided = True
                        continue
                    if sized.value != omega:
                        continue
                    attempt = find_retraction(graph, candidate, budget)
                    nodes += attempt.nodes
                    if attempt.found:
                        members = tuple(iter_bits(candidate))
                        return _retraction_result(
                            graph,
                            members,
                            attempt.witness,
                            nodes + meter.nodes,
                            f"order-{k} retract",
                        )
                    if attempt.indeterminate:
                        undecided = True
            if undecided:
                return _undecided(
                    graph, CoreMethod.BRUTE, nodes + meter.nodes, f"order-{k} retracts"
                )
    except BudgetExhausted:
        return _undecided(graph, CoreMethod.BRUTE, nodes + meter.nodes, "candidate enumeration")
    return _result(
        graph,
        range(n),
        tuple(range(n)),
        CoreMethod.BRUTE,
        nodes + meter.nodes,
        ["no proper retract"],
    )


def _shrink_core(graph: Graph, budget: SearchBudget, nodes: int) -> CoreResult:
    n = graph.n
    current = graph.all_mask
    phi = list(range(n))
    while True:
        members = list(iter_bits(current))
        sub = induced_subgraph(graph, current)
        shrunk = False
        for v in members:
            smaller = current & ~(1 << v)
            attempt = find_homomorphism(sub, induced_subgraph(graph, smaller), budget)
            nodes += attempt.nodes
            if attempt.indeterminate:
                return _undecided(graph, CoreMethod.BRUTE, nodes, "endomorphism search")
            if attempt.found:
                targets = list(iter_bits(smaller))
                step = {members[i]: targets[y] for i, y in enumerate(attempt.witness.mapping)}
                phi = [step[phi[x]] for x in range(n)]
                current = to_mask(step.values())
                shrunk = True
                break
        if not shrunk:
            break

    core = sorted(iter_bits(current))
    position = {c: i for i, c in enumerate(core)}
    # phi restricted to the core is an automorphism; undo it
    undo = {phi[c]: c for c in core}
    mapping = tuple(position[undo[phi[x]]] for x in range(n))
    return _result(graph, core, mapping, CoreMethod.BRUTE, nodes, ["shrunk by endomorphisms"])


def is_core(
    graph: Graph,
    divisors_hint: Optional[Iterable[int]] = None,
    budget: Optional[SearchBudget] = None,
) -> Optional[bool]:
    """
    True/False, or None when undecided within budget.

    A divisors hint asserts vertex-transitivity; prime order with edges is
    then a core outright.
    """
    if graph.n <= 1:
        return True
    result = core_bruteforce(
        graph,
        vt=divisors_hint is not None,
        budget=budget,
        candidate_orders=list(divisors_hint) if divisors_hint is not None else None,
    )
    if not result.resolved:
        return None
    return result.core.n == graph.n


def _claimed_is_core(claimed: Graph, generators: Optional[GeneratorSet]) -> Optional[str]:
    """None when the claimed graph is a core, else the reason it is not known to be."""
    if claimed.edge_count == claimed.n * (claimed.n - 1) // 2:
        return None
    if not is_prime(claimed.n):
        return f"claimed core of order {claimed.n} is neither complete nor of prime order"
    if claimed.edge_count == 0:
        return "claimed core has no edges"
    if generators is None or len(vertex_orbits(claimed.n, generators)) != 1:
        return "claimed core of prime order is not shown vertex-transitive"
    return None


def core_certificate(
    graph: Graph,
    claimed: Graph,
    generators: Optional[GeneratorSet] = None,
    budget: Optional[SearchBudget] = None,
) -> CoreResult:
    """
    Certify that `claimed` is the core of `graph`.

    Legs: the claimed graph is a core (complete, or vertex-transitive of prime
    order); an induced copy exists in `graph`; `graph` retracts onto it.

    Raises:
        CertificateRejected: naming the failing leg
    """
    reason = _claimed_is_core(claimed, generators)
    if reason is not None:
        raise CertificateRejected(CertificateLeg.CORE_CHECK, reason)

    nodes = 0
    if claimed.edge_count == claimed.n * (claimed.n - 1) // 2:
        clique = clique_number(graph, budget)
        nodes += clique.nodes
        if clique.indeterminate:
            return _undecided(graph, CoreMethod.CERTIFICATE, nodes, "clique for induced copy")
        if clique.value < claimed.n:
            raise CertificateRejected(
                CertificateLeg.INDUCED_COPY, f"omega={clique.value} < {claimed.n}"
            )
        members = tuple(sorted(clique.witness[: claimed.n]))
    else:
        copy = find_induced_copy(claimed, graph, budget)
        nodes += copy.nodes
        if copy.indeterminate:
            return _undecided(graph, CoreMethod.CERTIFICATE, nodes, "induced copy search")
        if not copy.found:
            raise CertificateRejected(CertificateLeg.INDUCED_COPY, "no induced copy")
        members = tuple(sorted(copy.witness))

    attempt = find_retraction(graph, members, budget)
    nodes += attempt.nodes
    if attempt.indeterminate:
        return _undecided(graph, CoreMethod.CERTIFICATE, nodes, "retraction search")
    if not attempt.found:
        raise CertificateRejected(CertificateLeg.HOMOMORPHISM, "no homomorphism onto the copy")
    logger.info(f"certificate accepted: core of {graph!r} is {claimed!r}")
    return _result(graph, members, attempt.witness.mapping, CoreMethod.CERTIFICATE, nodes)


def validate_core_result(result: CoreResult, vertex_transitive: bool = False) -> List[str]:
    """Violated core invariants of a resolved result (empty when all hold)."""
    if not result.resolved:
        return []
    problems = []
    ok, why = result.retraction.validate()
    if not ok:
        problems.append(f"retraction invalid: {why}")
    for i, v in enumerate(result.core_vertices):
        if result.retraction.mapping[v] != i:
            problems.append(f"retraction moves core vertex {v}")
            break
    if vertex_transitive:
        n, k = result.source.n, len(result.core_vertices)
        if n % k:
            problems.append(f"core order {k} does not divide {n}")
        sizes = {len(f) for f in result.retraction.fibres().values()}
        if len(sizes) > 1:
            problems.append(f"fibres have unequal sizes {sorted(sizes)}")
    for fibre in result.retraction.fibres().values():
        mask = to_mask(fibre)
        if any(result.source.rows[v] & mask for v in fibre):
            problems.append("a fibre is not independent")
            break
    return problems
