"""
Automorphism generators and orbit computations.

A GeneratorSet lists named vertex permutations claimed to be automorphisms;
the orbit check reports whether the group they generate is transitive on
vertices and on arcs.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from .graph import Graph, check_automorphism

logger = logging.getLogger(__name__)


class GeneratorError(ValueError):
    """A listed permutation is not an automorphism."""

    def __init__(self, name: str, edge: Tuple[int, int]):
        super().__init__(f"generator '{name}' maps edge {edge} to a non-edge")
        self.name = name
        self.edge = edge


@dataclass(frozen=True)
class GeneratorSet:
    names: Tuple[str, ...]
    perms: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_pairs(cls, pairs: Sequence[Tuple[str, Sequence[int]]]) -> "GeneratorSet":
        return cls(tuple(name for name, _ in pairs), tuple(tuple(p) for _, p in pairs))

    def __iter__(self) -> Iterator[Tuple[str, Tuple[int, ...]]]:
        return iter(zip(self.names, self.perms))

    def __len__(self) -> int:
        return len(self.perms)


@dataclass(frozen=True)
class TransitivityReport:
    vertex_transitive: bool
    arc_transitive: bool
    vertex_orbits: int
    arc_orbit_size: int
    arcs: int

    def to_dict(self) -> Dict[str, object]:
        return {
            "vertex_transitive": self.vertex_transitive,
            "arc_transitive": self.arc_transitive,
            "vertex_orbits": self.vertex_orbits,
            "arc_orbit_size": self.arc_orbit_size,
            "arcs": self.arcs,
        }


def validate_generators(graph: Graph, generators: GeneratorSet) -> None:
    """Raises GeneratorError naming the first failing generator and edge."""
    for name, perm in generators:
        edge = check_automorphism(graph, perm)
        if edge is not None:
            raise GeneratorError(name, edge)


def vertex_orbits(n: int, generators: GeneratorSet) -> List[List[int]]:
    seen = [False] * n
    orbits = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        orbit = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for perm in generators.perms:
                w = perm[v]
                if not seen[w]:
                    seen[w] = True
                    orbit.append(w)
                    queue.append(w)
        orbits.append(sorted(orbit))
    return orbits


def _arc_orbit_size(graph: Graph, generators: GeneratorSet, start: Tuple[int, int]) -> int:
    seen = {start}
    queue = deque([start])
    while queue:
        u, v = queue.popleft()
        for perm in generators.perms:
            arc = (perm[u], perm[v])
            if arc not in seen:
                seen.add(arc)
                queue.append(arc)
    return len(seen)


def orbit_transitivity_check(graph: Graph, generators: GeneratorSet) -> TransitivityReport:
    """Validate generators, then test vertex- and arc-transitivity by orbit BFS."""
    validate_generators(graph, generators)
    orbits = vertex_orbits(graph.n, generators)
    arcs = 2 * graph.edge_count
    if arcs:
        first = next(graph.arcs())
        arc_orbit = _arc_orbit_size(graph, generators, first)
    else:
        arc_orbit = 0
    report = TransitivityReport(
        vertex_transitive=len(orbits) == 1,
        arc_transitive=arc_orbit == arcs,
        vertex_orbits=len(orbits),
        arc_orbit_size=arc_orbit,
        arcs=arcs,
    )
    logger.debug(f"{graph!r}: {report}")
    return report
