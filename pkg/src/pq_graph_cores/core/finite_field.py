"""
GF(2^a) arithmetic on integer bit-vector encodings.

Elements are polynomials over GF(2) packed into ints; multiplication goes
through exp/log tables built from the least primitive element w.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from .algebra import AlgebraError

logger = logging.getLogger(__name__)

MAX_FIELD_DEGREE = 16

# Fixed reduction polynomials; other degrees use the least irreducible one.
FIXED_MODULI: Dict[int, int] = {
    2: 0b111,  # x^2 + x + 1
    3: 0b1011,  # x^3 + x + 1
    4: 0b10011,  # x^4 + x + 1
    8: 0b100011101,  # x^8 + x^4 + x^3 + x^2 + 1
}


def _poly_mod(value: int, modulus: int) -> int:
    deg = modulus.bit_length() - 1
    while value.bit_length() - 1 >= deg:
        value ^= modulus << (value.bit_length() - 1 - deg)
    return value


def _poly_mulmod(x: int, y: int, modulus: int) -> int:
    product = 0
    while y:
        if y & 1:
            product ^= x
        x <<= 1
        y >>= 1
    return _poly_mod(product, modulus)


def _is_irreducible(poly: int) -> bool:
    degree = poly.bit_length() - 1
    for divisor in range(2, 1 << (degree // 2 + 1)):
        if _poly_mod(poly, divisor) == 0:
            return False
    return True


def least_irreducible(a: int) -> int:
    for candidate in range((1 << a) | 1, 1 << (a + 1), 2):
        if _is_irreducible(candidate):
            return candidate
    raise AlgebraError(f"no irreducible polynomial of degree {a}")  # unreachable


@dataclass(frozen=True)
class FieldGF2a:
    """GF(2^a) with reduction polynomial `modulus` and primitive element `w`."""

    a: int
    modulus: int
    w: int
    exp: Tuple[int, ...]
    log_table: Tuple[int, ...]

    @property
    def size(self) -> int:
        return 1 << self.a

    @property
    def unit_order(self) -> int:
        return self.size - 1

    def elements(self) -> range:
        return range(self.size)

    def add(self, x: int, y: int) -> int:
        return x ^ y

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self.exp[(self.log_table[x] + self.log_table[y]) % self.unit_order]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2^a)")
        return self.exp[(-self.log_table[x]) % self.unit_order]

    def power(self, x: int, k: int) -> int:
        if x == 0:
            return 0 if k > 0 else 1
        return self.exp[(self.log_table[x] * k) % self.unit_order]

    def log(self, x: int) -> int:
        """Discrete logarithm to base w."""
        if x == 0:
            raise ValueError("log of 0 is undefined")
        return self.log_table[x]

    def w_power(self, k: int) -> int:
        return self.exp[k % self.unit_order]

    def frobenius(self, x: int, e: int = 1) -> int:
        """x -> x^(2^e)."""
        return self.power(x, 1 << e)

    def subfield(self, k: int) -> List[int]:
        """Elements of the subfield GF(2^k), ascending."""
        if k < 1 or self.a % k != 0:
            raise AlgebraError(f"GF(2^{k}) is not a subfield of GF(2^{self.a})")
        step = self.unit_order // ((1 << k) - 1)
        return sorted({0} | {self.w_power(step * j) for j in range((1 << k) - 1)})


@lru_cache(maxsize=None)
def make_field(a: int) -> FieldGF2a:
    if a < 1 or a > MAX_FIELD_DEGREE:
        raise AlgebraError(f"field degree {a} outside 1..{MAX_FIELD_DEGREE}")
    modulus = FIXED_MODULI.get(a) or least_irreducible(a)
    unit_order = (1 << a) - 1

    w = None
    for candidate in range(1, 1 << a):
        value, order = candidate, 1
        while value != 1:
            value = _poly_mulmod(value, candidate, modulus)
            order += 1
        if order == unit_order:
            w = candidate
            break
    if w is None:
        raise AlgebraError(f"no primitive element in GF(2^{a})")  # unreachable

    exp = [1] * unit_order
    log_table = [-1] * (1 << a)
    value = 1
    for k in range(unit_order):
        exp[k] = value
        log_table[value] = k
        value = _poly_mulmod(value, w, modulus)

    logger.debug(f"GF(2^{a}) built: modulus={modulus:#x}, w={w}")
    return FieldGF2a(a=a, modulus=modulus, w=w, exp=tuple(exp), log_table=tuple(log_table))
