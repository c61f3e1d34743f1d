"""Tests for exact cyclotomic scalars."""

import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedralrep.cyclotomic import (
    Cyclotomic,
    cyclotomic_polynomial,
    embed_cos,
    embed_sin,
    euler_phi,
    min_conductor,
    one,
    prime_factorization,
    rational,
    zero,
    zeta,
)


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


class TestCyclotomicPolynomial:
    def test_base_case(self):
        assert cyclotomic_polynomial(1) == (-1, 1)

    def test_small_standard_values(self):
        assert cyclotomic_polynomial(2) == (1, 1)
        assert cyclotomic_polynomial(4) == (1, 0, 1)

    def test_index_12(self):
        # Frozen from dividing x^12 - 1 by Phi_1 Phi_2 Phi_3 Phi_4 Phi_6
        # with exact polynomial long division.
        assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)

    @pytest.mark.parametrize("n", range(1, 31))
    def test_product_over_divisors_recovers_x_n_minus_1(self, n):
        prod = [1]
        for d in range(1, n + 1):
            if n % d == 0:
                prod = poly_mul(prod, list(cyclotomic_polynomial(d)))
        expected = [-1] + [0] * (n - 1) + [1]
        assert prod == expected

    @pytest.mark.parametrize("n", range(1, 31))
    def test_degree_is_totient(self, n):
        assert len(cyclotomic_polynomial(n)) - 1 == euler_phi(n)


class TestFieldOperations:
    def test_i_squared(self):
        i = zeta(4)
        assert i * i == -1

    def test_additive_identity(self):
        x = zeta(12, 5) + rational(12, Fraction(3, 7))
        assert x + zero(12) == x

    def test_zeta3_plus_zeta3_squared(self):
        z = zeta(3)
        assert z + z * z == -1

    def test_inverse_of_unit(self):
        assert one(8).inverse() == 1

    def test_inverse_of_i(self):
        i = zeta(4)
        assert i.inverse() == -i

    def test_inverse_of_one_plus_zeta3(self):
        z = zeta(3)
        x = 1 + z
        # (1 + zeta_3)(-zeta_3) = -zeta_3 - zeta_3^2 = 1 mod Phi_3
        assert x.inverse() == -z
        assert x * x.inverse() == 1

    def test_inverse_of_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            zero(12).inverse()

    def test_conductor_mismatch_raises(self):
        with pytest.raises(ValueError, match="conductor"):
            zeta(4) + zeta(8)

    def test_canonical_zero_after_subtraction(self):
        x = embed_cos(3, 7, 28) + zeta(28, 5)
        d = x - x
        assert d.is_zero
        assert all(c == 0 for c in d.coefficients)
        assert d == zero(28)

    def test_coefficient_length_is_totient(self):
        assert len(zeta(12).coefficients) == euler_phi(12)
        assert len(zeta(9, 2).coefficients) == euler_phi(9)

    def test_conjugate(self):
        z = zeta(12)
        assert z.conjugate() == zeta(12, 11)
        x = embed_cos(1, 12)
        assert x.conjugate() == x  # cosines are real


small_fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


def cyclotomic_elements(conductor):
    deg = euler_phi(conductor)
    return st.lists(small_fractions, min_size=deg, max_size=deg).map(
        lambda cs: Cyclotomic.from_polynomial(conductor, cs)
    )


@st.composite
def element_triples(draw):
    conductor = draw(st.sampled_from([3, 4, 5, 8, 12]))
    elems = cyclotomic_elements(conductor)
    return draw(elems), draw(elems), draw(elems)


class TestFieldAxioms:
    @given(element_triples())
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, triple):
        a, b, c = triple
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        assert (a - a).is_zero

    @given(element_triples())
    @settings(max_examples=60, deadline=None)
    def test_multiplicative_inverse(self, triple):
        a, _, _ = triple
        if a.is_zero:
            return
        assert a * a.inverse() == 1


class TestTrigEmbedding:
    def test_cos_zero(self):
        for m in (3, 4, 7, 12):
            assert embed_cos(0, m) == 1

    def test_sin_zero(self):
        assert embed_sin(0, 9) == 0

    def test_cos_one_third(self):
        assert embed_cos(1, 3) == Fraction(-1, 2)
        approx = embed_cos(1, 3).to_complex()
        assert abs(approx - (-0.5)) < 1e-12

    def test_quarter_turn(self):
        assert embed_cos(1, 4) == 0
        assert embed_sin(1, 4) == 1

    def test_sin_one_twelfth(self):
        assert embed_sin(1, 12) == Fraction(1, 2)

    def test_conductor_must_contain_lcm(self):
        with pytest.raises(ValueError, match="multiple"):
            embed_cos(1, 3, 4)
        with pytest.raises(ValueError, match="multiple"):
            embed_sin(2, 5, 12)

    def test_conductor_lift(self):
        # Same value represented in a conductor strictly above the minimum.
        assert embed_cos(1, 3, 24) == rational(24, Fraction(-1, 2))

    @pytest.mark.parametrize("m", range(3, 31))
    def test_pythagorean_identity_exact(self, m):
        conductor = min_conductor(m)
        for k in range(m):
            c = embed_cos(k, m, conductor)
            s = embed_sin(k, m, conductor)
            assert c * c + s * s == 1

    @pytest.mark.parametrize("m", range(3, 31))
    def test_numeric_agreement(self, m):
        for k in range(m):
            angle = 2 * math.pi * k / m
            assert abs(embed_cos(k, m).to_complex() - math.cos(angle)) < 1e-10
            assert abs(embed_sin(k, m).to_complex() - math.sin(angle)) < 1e-10


class TestConversionAndRendering:
    def test_to_complex_of_one(self):
        v = one(12).to_complex()
        assert v == 1 + 0j

    def test_to_complex_of_i(self):
        v = zeta(4).to_complex()
        assert abs(v - 1j) < 1e-12

    def test_to_complex_root_of_unity(self):
        v = zeta(7, 3).to_complex()
        assert abs(v - cmath.exp(2j * cmath.pi * 3 / 7)) < 1e-12

    def test_str_zero_and_rational(self):
        assert str(zero(4)) == "0"
        assert str(rational(4, Fraction(-3, 2))) == "-3/2"

    def test_str_polynomial(self):
        x = zeta(12) - rational(12, Fraction(1, 2))
        assert str(x) == "-1/2 + z"

    def test_factorization(self):
        assert prime_factorization(12) == ((2, 2), (3, 1))
        assert prime_factorization(97) == ((97, 1),)
