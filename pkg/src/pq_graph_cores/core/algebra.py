"""
Number-theoretic substrate for the pq families.

Multiplicative subgroups H(n, r) of Z_n*, element orders, Fermat numbers and
the admissible t-values of the G(pq; r, s, u) construction.
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd
from typing import FrozenSet, List, Optional, Tuple

logger = logging.getLogger(__name__)

MAX_FERMAT_INDEX = 5


class AlgebraError(ValueError):
    """Raised when a number-theoretic precondition fails."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def prime_factors(n: int) -> List[int]:
    """Distinct prime factors of n in ascending order."""
    factors = []
    k = 2
    while k * k <= n:
        if n % k == 0:
            factors.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        factors.append(n)
    return factors


def divisors(n: int) -> List[int]:
    if n < 1:
        raise AlgebraError(f"divisors undefined for {n}")
    small = [k for k in range(1, int(n**0.5) + 1) if n % k == 0]
    return sorted(set(small + [n // k for k in small]))


def lcm(x: int, y: int) -> int:
    return x * y // gcd(x, y)


def _require_prime(n: int, what: str = "modulus") -> None:
    if not is_prime(n):
        raise AlgebraError(f"{what} {n} is not prime")


@lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    """Smallest generator of Z_p*."""
    _require_prime(p)
    if p == 2:
        return 1
    factors = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
    raise AlgebraError(f"no primitive root modulo {p}")  # unreachable for primes


def element_order(x: int, n: int) -> int:
    """Multiplicative order of x modulo n."""
    x %= n
    if gcd(x, n) != 1:
        raise AlgebraError(f"{x} is not a unit modulo {n}")
    k, y = 1, x
    while y != 1 % n:
        y = y * x % n
        k += 1
    return k


@dataclass(frozen=True)
class SubgroupH:
    """The unique subgroup of order r in Z_n* (n prime)."""

    modulus: int
    order: int
    elements: Tuple[int, ...]
    generator: int

    @cached_property
    def members(self) -> FrozenSet[int]:
        return frozenset(self.elements)

    def __contains__(self, x: int) -> bool:
        return x % self.modulus in self.members

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def coset(self, t: int) -> FrozenSet[int]:
        """The coset t·H."""
        return frozenset(t * h % self.modulus for h in self.elements)

    def negated(self) -> FrozenSet[int]:
        return self.coset(-1)


@lru_cache(maxsize=None)
def subgroup(n: int, r: int) -> SubgroupH:
    """
    H(n, r): the elements g^{(n-1)k/r} for the smallest primitive root g.

    The recorded generator is the smallest element of order r, which is the
    canonical 'a' used by the G(pq; r, s, u) family.
    """
    _require_prime(n)
    if r < 1 or (n - 1) % r != 0:
        raise AlgebraError(f"r={r} does not divide {n}-1")
    step = pow(primitive_root(n), (n - 1) // r, n)
    elements = tuple(sorted({pow(step, k, n) for k in range(r)}))
    generator = min(x for x in elements if element_order(x, n) == r)
    return SubgroupH(modulus=n, order=r, elements=elements, generator=generator)


def fermat(t: int) -> int:
    """F_t = 2^(2^t) + 1."""
    if t < 0 or t > MAX_FERMAT_INDEX:
        raise AlgebraError(f"Fermat index {t} outside 0..{MAX_FERMAT_INDEX}")
    return 2 ** (2**t) + 1


def fermat_index(p: int) -> Optional[int]:
    """l with p = F_l, or None."""
    for t in range(MAX_FERMAT_INDEX + 1):
        if fermat(t) == p:
            return t
    return None


def is_fermat_prime(p: int) -> bool:
    return fermat_index(p) is not None and is_prime(p)


def choose_t(p: int, q: int, r: int, s: int) -> List[Tuple[int, int]]:
    """
    All t in Z_q* with t^(s/2) in -H(q, r), paired with u = lcm(r, o(t)).

    Sorted by (u, t). Empty when no admissible t exists.
    """
    _require_prime(p, "p")
    _require_prime(q, "q")
    if p == q:
        raise AlgebraError("p and q must be distinct")
    if s % 2 != 0:
        raise AlgebraError(f"s={s} must be even")
    if (p - 1) % s != 0:
        raise AlgebraError(f"s={s} does not divide {p}-1")
    neg_h = subgroup(q, r).negated()
    admissible = [
        (lcm(r, element_order(t, q)), t)
        for t in range(1, q)
        if pow(t, s // 2, q) in neg_h
    ]
    admissible.sort()
    logger.debug(f"choose_t(p={p}, q={q}, r={r}, s={s}) -> {len(admissible)} values")
    return [(t, u) for u, t in admissible]
