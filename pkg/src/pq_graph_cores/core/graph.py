"""
Finite simple graphs as bit-matrices.

Vertex v's neighbourhood is the int `rows[v]` (bit u set iff u ~ v). Labels are
hashable and pairwise distinct; edge lists are sorted with u < v.
"""

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

logger = logging.getLogger(__name__)

Label = Hashable
VertexSet = Union[int, Iterable[int]]


class GraphError(ValueError):
    """Raised for malformed graphs, vertex sets or maps."""


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: VertexSet) -> int:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    rows: Tuple[int, ...]
    labels: Tuple[Label, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        n = len(self.rows)
        if len(self.labels) != n:
            raise GraphError(f"{len(self.labels)} labels for {n} vertices")
        if len(set(self.labels)) != n:
            raise GraphError("vertex labels are not pairwise distinct")
        full = (1 << n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {u} references vertices outside 0..{n - 1}")
            if (row >> u) & 1:
                raise GraphError(f"loop at vertex {u}")
            for v in iter_bits(row):
                if not (self.rows[v] >> u) & 1:
                    raise GraphError(f"adjacency not symmetric at ({u},{v})")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Tuple[int, int]],
        labels: Optional[Sequence[Label]] = None,
        name: str = "",
    ) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(tuple(rows), tuple(labels) if labels is not None else tuple(range(n)), name)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def index(self) -> Dict[Label, int]:
        return {label: v for v, label in enumerate(self.labels)}

    @cached_property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> List[Tuple[int, int]]:
        return [
            (u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))
        ]

    def arcs(self) -> Iterator[Tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.rows[u]):
                yield u, v

    def renamed(self, name: str) -> "Graph":
        return Graph(self.rows, self.labels, name)

    def __repr__(self) -> str:
        return f"Graph(name={self.name!r}, n={self.n}, edges={self.edge_count})"


@dataclass(frozen=True)
class Homomorphism:
    """Vertex map source -> target, stored as target indices."""

    source: Graph
    target: Graph
    mapping: Tuple[int, ...]

    def validate(self) -> Tuple[bool, str]:
        """
        Check totality and edge preservation.

        Returns:
            (ok, reason) with reason naming the first offending edge
        """
        if len(self.mapping) != self.source.n:
            return False, f"map covers {len(self.mapping)} of {self.source.n} vertices"
        for x in self.mapping:
            if not 0 <= x < self.target.n:
                return False, f"image {x} is not a target vertex"
        for u, v in self.source.edges():
            if not self.target.adjacent(self.mapping[u], self.mapping[v]):
                image = (self.mapping[u], self.mapping[v])
                return False, f"edge ({u},{v}) maps to non-edge {image}"
        return True, "ok"

    @property
    def is_valid(self) -> bool:
        return self.validate()[0]

    def image(self) -> int:
        return to_mask(self.mapping)

    def fibres(self) -> Dict[int, List[int]]:
        fibres: Dict[int, List[int]] = {}
        for v, x in enumerate(self.mapping):
            fibres.setdefault(x, []).append(v)
        return fibres

    def compose(self, after: "Homomorphism") -> "Homomorphism":
        """`after` o self."""
        if after.source != self.target:
            raise GraphError("composition requires matching graphs")
        mapping = tuple(after.mapping[x] for x in self.mapping)
        return Homomorphism(self.source, after.target, mapping)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(tuple(full & ~(1 << v) for v in range(n)), tuple(range(n)), f"K_{n}")


def empty_graph(n: int) -> Graph:
    return Graph((0,) * n, tuple(range(n)), f"E_{n}")


def complement(graph: Graph) -> Graph:
    full = graph.all_mask
    rows = tuple(full & ~row & ~(1 << v) for v, row in enumerate(graph.rows))
    return Graph(rows, graph.labels, f"co-{graph.name}" if graph.name else "")


def _product_rows(
    g: Graph, h: Graph, same_base: bool, keep_fibre_matching: bool, full_fibre: bool
) -> Tuple[int, ...]:
    m = h.n
    fibre = (1 << m) - 1
    rows = []
    for u in range(g.n):
        for x in range(m):
            row = 0
            for v in iter_bits(g.rows[u]):
                if full_fibre:
                    block = fibre if keep_fibre_matching else fibre & ~(1 << x)
                else:
                    block = h.rows[x]
                row |= block << (v * m)
            if same_base:
                row |= h.rows[x] << (u * m)
            rows.append(row)
    return tuple(rows)


def _pair_labels(g: Graph, h: Graph) -> Tuple[Label, ...]:
    return tuple((a, b) for a in g.labels for b in h.labels)


def categorical_product(g: Graph, h: Graph) -> Graph:
    """(u,x) ~ (v,y) iff u ~ v and x ~ y. Vertex (u,x) has index u*|H| + x."""
    rows = _product_rows(g, h, same_base=False, keep_fibre_matching=False, full_fibre=False)
    return Graph(rows, _pair_labels(g, h), f"{g.name} x {h.name}")


def lexicographic_product(g: Graph, h: Graph) -> Graph:
    """(u,x) ~ (v,y) iff u ~ v, or u = v and x ~ y."""
    rows = _product_rows(g, h, same_base=True, keep_fibre_matching=True, full_fibre=True)
    return Graph(rows, _pair_labels(g, h), f"{g.name}[{h.name}]")


def deleted_lexicographic_product(g: Graph, h: Graph) -> Graph:
    """The lexicographic product minus {(u,x),(v,x)} for u ~ v."""
    rows = _product_rows(g, h, same_base=True, keep_fibre_matching=False, full_fibre=True)
    return Graph(rows, _pair_labels(g, h), f"{g.name}[{h.name}]-{g.n}{h.name}")


def induced_subgraph(graph: Graph, vertices: VertexSet) -> Graph:
    """Subgraph on `vertices`, re-indexed in ascending original order."""
    mask = to_mask(vertices)
    if mask & ~graph.all_mask:
        raise GraphError("vertex set is not a subset of the graph")
    order = list(iter_bits(mask))
    position = {v: i for i, v in enumerate(order)}
    rows = tuple(
        to_mask(position[u] for u in iter_bits(graph.rows[v] & mask)) for v in order
    )
    return Graph(rows, tuple(graph.labels[v] for v in order), graph.name)


@dataclass(frozen=True)
class BipartiteResult:
    bipartite: bool
    coloring: Optional[Tuple[int, ...]] = None
    odd_cycle: Optional[Tuple[int, ...]] = None


def is_bipartite(graph: Graph) -> BipartiteResult:
    """2-colouring by BFS, or an odd closed walk certificate."""
    color = [-1] * graph.n
    parent = [-1] * graph.n
    for start in range(graph.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in iter_bits(graph.rows[u]):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    return BipartiteResult(False, odd_cycle=_odd_cycle(parent, u, v))
    return BipartiteResult(True, coloring=tuple(color))


def _odd_cycle(parent: List[int], u: int, v: int) -> Tuple[int, ...]:
    path_u = [u]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    path_v = [v]
    while parent[path_v[-1]] != -1:
        path_v.append(parent[path_v[-1]])
    ancestors = set(path_u)
    meet = next(x for x in path_v if x in ancestors)
    left = path_u[: path_u.index(meet) + 1]
    right = path_v[: path_v.index(meet)]
    return tuple(left + right[::-1])


def valency_profile(graph: Graph) -> Counter:
    return Counter(graph.degree(v) for v in range(graph.n))


def valency(graph: Graph) -> Optional[int]:
    """Common degree of a regular graph, else None."""
    profile = valency_profile(graph)
    return next(iter(profile)) if len(profile) == 1 else None


def reachable(graph: Graph, start: int, within: Optional[int] = None) -> int:
    allowed = graph.all_mask if within is None else within
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= graph.rows[u]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(graph: Graph) -> bool:
    if graph.n == 0:
        return True
    return reachable(graph, 0) == graph.all_mask


def bfs_levels(graph: Graph, start: int) -> List[int]:
    level = [-1] * graph.n
    level[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in iter_bits(graph.rows[u]):
            if level[v] == -1:
                level[v] = level[u] + 1
                queue.append(v)
    return level


def odd_girth(graph: Graph) -> Optional[int]:
    """Length of a shortest odd cycle, None when bipartite."""
    best = None
    edges = graph.edges()
    for start in range(graph.n):
        level = bfs_levels(graph, start)
        for u, v in edges:
            if level[u] != -1 and level[u] == level[v]:
                length = 2 * level[u] + 1
                if best is None or length < best:
                    best = length
    return best


def girth(graph: Graph) -> Optional[int]:
    """Length of a shortest cycle, None for forests."""
    best = None
    edges = graph.edges()
    for start in range(graph.n):
        level = bfs_levels(graph, start)
        parent_seen = [0] * graph.n
        for u, v in edges:
            if level[u] == -1:
                continue
            if level[u] == level[v]:
                length = 2 * level[u] + 1
            elif abs(level[u] - level[v]) == 1:
                child = u if level[u] > level[v] else v
                parent_seen[child] += 1
                if parent_seen[child] < 2:
                    continue
                length = 2 * level[child]
            else:
                continue
            if best is None or length < best:
                best = length
    return best


def check_automorphism(graph: Graph, perm: Sequence[int]) -> Optional[Tuple[int, int]]:
    """First edge whose image is a non-edge, or None for an automorphism."""
    if sorted(perm) != list(range(graph.n)):
        raise GraphError("not a permutation of the vertex set")
    for u, v in graph.edges():
        if not graph.adjacent(perm[u], perm[v]):
            return u, v
    return None
