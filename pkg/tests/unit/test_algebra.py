"""
Unit Tests for the Number-Theoretic Substrate
Part of Gate 1: Functional Completeness

Tests:
- Primality, factorisation and divisors
- Primitive roots and element orders
- Subgroups H(n, r) and their cosets
- Fermat numbers
- Admissible t-values of G(pq; r, s, u)
- GF(2^a) arithmetic
"""

import pytest

from pq_graph_cores.core.algebra import (
    AlgebraError,
    choose_t,
    divisors,
    element_order,
    fermat,
    fermat_index,
    is_fermat_prime,
    is_prime,
    prime_factors,
    primitive_root,
    subgroup,
)
from pq_graph_cores.core.finite_field import make_field


class TestPrimes:
    """Gate 1: Functional Completeness - Primes and Divisors"""

    @pytest.mark.parametrize("n", [2, 3, 5, 17, 97])
    def test_primes_recognised(self, n):
        """Small primes are prime"""
        assert is_prime(n)

    @pytest.mark.parametrize("n", [-3, 0, 1, 9, 15, 91])
    def test_non_primes_rejected(self, n):
        """Units, zero and composites are not prime"""
        assert not is_prime(n)

    def test_prime_factors_distinct_ascending(self):
        """Distinct prime factors come back in ascending order"""
        assert prime_factors(60) == [2, 3, 5]
        assert prime_factors(85) == [5, 17]

    def test_divisors(self):
        """All positive divisors, sorted"""
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert divisors(1) == [1]

    def test_divisors_of_zero_raise(self):
        """Divisors of non-positive integers are undefined"""
        with pytest.raises(AlgebraError):
            divisors(0)


class TestMultiplicativeGroup:
    """Gate 1: Functional Completeness - Z_n* Structure"""

    def test_primitive_roots(self):
        """Smallest generators of Z_p*"""
        assert primitive_root(2) == 1
        assert primitive_root(7) == 3
        assert primitive_root(13) == 2

    def test_primitive_root_needs_prime(self):
        """Composite moduli are rejected"""
        with pytest.raises(AlgebraError):
            primitive_root(9)

    def test_element_order(self):
        """Multiplicative orders"""
        assert element_order(2, 7) == 3
        assert element_order(4, 5) == 2
        assert element_order(1, 11) == 1

    def test_element_order_of_non_unit(self):
        """Non-units have no order"""
        with pytest.raises(AlgebraError):
            element_order(3, 9)

    def test_subgroup_elements_and_generator(self):
        """H(13, 4) = {1, 5, 8, 12}, generated by 5"""
        h = subgroup(13, 4)
        assert h.elements == (1, 5, 8, 12)
        assert h.generator == 5
        assert len(h) == 4
        assert 18 in h

    def test_subgroup_is_closed(self):
        """Products of members stay in H"""
        h = subgroup(17, 8)
        assert all(x * y % 17 in h for x in h for y in h)

    def test_coset_and_negation(self):
        """t*H and -H in Z_5*"""
        h = subgroup(5, 2)
        assert h.coset(2) == frozenset({2, 3})
        assert h.negated() == frozenset({1, 4})

    def test_subgroup_order_must_divide(self):
        """r must divide n - 1"""
        with pytest.raises(AlgebraError):
            subgroup(7, 4)


class TestFermat:
    """Gate 1: Functional Completeness - Fermat Numbers"""

    def test_fermat_numbers(self):
        """F_0..F_4"""
        assert [fermat(t) for t in range(5)] == [3, 5, 17, 257, 65537]

    def test_fermat_index(self):
        """Inverse of fermat() on Fermat numbers, None elsewhere"""
        assert fermat_index(3) == 0
        assert fermat_index(17) == 2
        assert fermat_index(7) is None

    def test_fermat_primes(self):
        """5 is a Fermat prime, 7 is not"""
        assert is_fermat_prime(5)
        assert not is_fermat_prime(7)

    def test_fermat_index_range(self):
        """Indices outside the table raise"""
        with pytest.raises(AlgebraError):
            fermat(-1)


class TestChooseT:
    """Gate 1: Functional Completeness - Admissible t Values"""

    def test_single_value(self):
        """p=3, q=5, r=1, s=2: only t = -1, with u = 2"""
        assert choose_t(3, 5, 1, 2) == [(4, 2)]

    def test_two_values_sorted(self):
        """p=3, q=5, r=2, s=2: t in {1, 4}, both with u = 2"""
        assert choose_t(3, 5, 2, 2) == [(1, 2), (4, 2)]

    def test_u_is_multiple_of_r(self):
        """u = lcm(r, o(t)) is a multiple of r dividing q - 1"""
        for t, u in choose_t(5, 13, 2, 4):
            assert u % 2 == 0
            assert 12 % u == 0
            assert pow(t, 2, 13) in subgroup(13, 2).negated()

    def test_odd_s_rejected(self):
        """s must be even"""
        with pytest.raises(AlgebraError):
            choose_t(3, 5, 1, 1)

    def test_equal_primes_rejected(self):
        """p and q must differ"""
        with pytest.raises(AlgebraError):
            choose_t(5, 5, 1, 2)


class TestFiniteField:
    """Gate 1: Functional Completeness - GF(2^a) Arithmetic"""

    def test_gf4_tables(self):
        """GF(4) with x^2 + x + 1 and w = x"""
        field = make_field(2)
        assert field.size == 4
        assert field.w == 2
        assert field.mul(2, 3) == 1
        assert field.inv(2) == 3

    @pytest.mark.parametrize("a", [2, 3, 4, 5])
    def test_inverses(self, a):
        """x * x^-1 = 1 for every unit"""
        field = make_field(a)
        assert all(field.mul(x, field.inv(x)) == 1 for x in range(1, field.size))

    @pytest.mark.parametrize("a", [2, 4, 5])
    def test_w_generates_units(self, a):
        """Powers of w run through every unit once"""
        field = make_field(a)
        powers = {field.w_power(k) for k in range(field.unit_order)}
        assert powers == set(range(1, field.size))
        assert field.log(field.w) == 1

    def test_frobenius_has_order_a(self):
        """x -> x^(2^a) is the identity"""
        field = make_field(4)
        assert all(field.frobenius(x, 4) == x for x in field.elements())

    def test_subfield(self):
        """GF(2) in GF(4), GF(4) in GF(16)"""
        assert make_field(2).subfield(1) == [0, 1]
        assert len(make_field(4).subfield(2)) == 4

    def test_invalid_degrees(self):
        """Degree 0 and non-subfields raise"""
        with pytest.raises(AlgebraError):
            make_field(0)
        with pytest.raises(AlgebraError):
            make_field(4).subfield(3)

    def test_zero_has_no_inverse(self):
        """0 is not invertible"""
        with pytest.raises(ZeroDivisionError):
            make_field(3).inv(0)
