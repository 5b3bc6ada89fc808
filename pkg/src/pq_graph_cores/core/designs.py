"""
Symmetric 2-designs used by the incidence families: PG(d-1, r) and H(11).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from itertools import product
from typing import Dict, FrozenSet, Hashable, List, Optional, Tuple

from .algebra import AlgebraError, is_prime, primitive_root, subgroup

logger = logging.getLogger(__name__)


class DesignKind(str, Enum):
    PROJECTIVE = "pg"
    HADAMARD_11 = "h11"


@dataclass(frozen=True)
class ProjectiveDesign:
    """
    Points and blocks of a symmetric design.

    Blocks are frozensets of point indices. For PG designs, `block_labels[i]`
    is the normal vector h of the hyperplane {x : x.h = 0}; point i and block i
    share a label, so i <-> i is a polarity.
    """

    kind: DesignKind
    parameters: Tuple[int, ...]
    points: Tuple[Hashable, ...]
    block_labels: Tuple[Hashable, ...]
    blocks: Tuple[FrozenSet[int], ...]

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    @cached_property
    def replication(self) -> int:
        return sum(1 for block in self.blocks if 0 in block)

    @cached_property
    def block_index(self) -> Dict[FrozenSet[int], int]:
        return {block: i for i, block in enumerate(self.blocks)}

    def incident(self, point: int, block: int) -> bool:
        return point in self.blocks[block]

    def block_image(self, point_perm: Tuple[int, ...], block: int) -> int:
        """Index of the block onto which a point permutation sends `block`."""
        image = frozenset(point_perm[x] for x in self.blocks[block])
        try:
            return self.block_index[image]
        except KeyError:
            raise AlgebraError("point permutation does not preserve the block set") from None


def _is_normalized(vector: Tuple[int, ...]) -> bool:
    return next((x for x in vector if x), 0) == 1


def _normalize(vector: Tuple[int, ...], r: int) -> Tuple[int, ...]:
    lead = next(x for x in vector if x % r)
    scale = pow(lead, -1, r)
    return tuple(x * scale % r for x in vector)


@lru_cache(maxsize=None)
def pg_design(d: int, r: int) -> ProjectiveDesign:
    """
    Points and hyperplanes of PG(d-1, r).

    Points are normalized vectors of GF(r)^d (first nonzero coordinate 1) in
    lexicographic order; hyperplanes are listed in the same order of normals.
    """
    if d < 2:
        raise AlgebraError(f"dimension d={d} must be at least 2")
    if not is_prime(r):
        raise AlgebraError(f"r={r} is not prime")

    points = tuple(v for v in product(range(r), repeat=d) if _is_normalized(v))
    blocks = tuple(
        frozenset(i for i, x in enumerate(points) if sum(a * b for a, b in zip(x, h)) % r == 0)
        for h in points
    )
    logger.debug(f"PG({d - 1},{r}): {len(points)} points, block size {len(blocks[0])}")
    return ProjectiveDesign(
        kind=DesignKind.PROJECTIVE,
        parameters=(d, r),
        points=points,
        block_labels=points,
        blocks=blocks,
    )


@lru_cache(maxsize=None)
def h11_design() -> ProjectiveDesign:
    """The (11, 5, 2) design: blocks R + i with R the nonzero squares mod 11."""
    residues = subgroup(11, 5).elements
    blocks = tuple(frozenset((x + i) % 11 for x in residues) for i in range(11))
    return ProjectiveDesign(
        kind=DesignKind.HADAMARD_11,
        parameters=(11,),
        points=tuple(range(11)),
        block_labels=tuple(range(11)),
        blocks=blocks,
    )


def pg_point_permutations(design: ProjectiveDesign) -> List[Tuple[str, Tuple[int, ...]]]:
    """
    Point permutations induced by generators of GL(d, r).

    Transvection x0 += x1, coordinate cycle, swap of the first two
    coordinates, and diag(g, 1, ..., 1) for a primitive root g (r > 2).
    """
    d, r = design.parameters
    index = {v: i for i, v in enumerate(design.points)}

    def induced(linear) -> Tuple[int, ...]:
        return tuple(index[_normalize(linear(v), r)] for v in design.points)

    maps = [
        ("transvection", lambda v: ((v[0] + v[1]) % r,) + v[1:]),
        ("coordinate_cycle", lambda v: (v[-1],) + v[:-1]),
        ("coordinate_swap", lambda v: (v[1], v[0]) + v[2:]),
    ]
    if r > 2:
        g = primitive_root(r)
        maps.append(("scalar", lambda v: (v[0] * g % r,) + v[1:]))
    return [(name, induced(linear)) for name, linear in maps]


def h11_point_permutations(
    stabilizer_element: Optional[Tuple[int, ...]] = None,
) -> List[Tuple[str, Tuple[int, ...]]]:
    perms = [
        ("translation", tuple((x + 1) % 11 for x in range(11))),
        ("multiplication", tuple(3 * x % 11 for x in range(11))),
    ]
    if stabilizer_element is not None:
        perms.append(("point_stabilizer", stabilizer_element))
    return perms
