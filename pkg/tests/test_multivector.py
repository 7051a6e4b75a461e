from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cltwist.multivector import Algebra, Multivector

neg = Algebra(mu=-1)
pos = Algebra(mu=1)


def coeffs(draw_blades=st.integers(min_value=0, max_value=(1 << 10) - 1)):
    rationals = st.fractions(
        min_value=-8, max_value=8, max_denominator=6
    )
    return st.dictionaries(draw_blades, rationals, max_size=8)


def multivectors(algebra):
    return coeffs().map(lambda c: algebra.multivector(c))


class TestConstruction:
    def test_zero_coefficients_dropped(self):
        v = neg.multivector({3: 0, 5: 2})
        assert len(v) == 1
        assert v.coefficient(3) == 0
        assert v.coefficient(5) == 2

    def test_int_coefficients_become_fractions(self):
        v = neg.blade(1, 2)
        assert v.coefficient(1) == Fraction(2)
        assert isinstance(v.coefficient(1), Fraction)

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            neg.blade(1, 0.5)

    def test_rejects_bad_masks(self):
        with pytest.raises(ValueError):
            neg.blade(-1)
        with pytest.raises(ValueError):
            neg.blade(1 << 64)

    def test_mu_validation(self):
        with pytest.raises(ValueError):
            Algebra(mu=0)

    def test_immutable(self):
        v = neg.blade(3)
        with pytest.raises(AttributeError):
            v.extra = 1


class TestEquality:
    def test_structural(self):
        assert neg.parse("e_1 + e_2") == neg.parse("e_2 + e_1")
        assert neg.parse("2 e_1") != neg.parse("e_1")

    def test_algebras_distinguished(self):
        assert neg.blade(1) != pos.blade(1)
        assert neg != pos
        assert Algebra(-1) == Algebra(-1)

    def test_hashable(self):
        seen = {neg.parse("e_1 + e_2"), neg.parse("e_2 + e_1")}
        assert len(seen) == 1

    def test_mixed_algebra_arithmetic_rejected(self):
        with pytest.raises(ValueError):
            neg.blade(1) + pos.blade(1)
        with pytest.raises(ValueError):
            neg.blade(1) * pos.blade(1)


class TestArithmetic:
    def test_scalars_lift(self):
        assert neg.blade(1) + 1 == neg.parse("1 + e_1")
        assert 1 + neg.blade(1) == neg.parse("1 + e_1")
        assert neg.blade(1) - 1 == neg.parse("e_1 - 1")
        assert 2 - neg.scalar(1) == neg.scalar(1)

    def test_scalar_multiplication(self):
        v = neg.parse("e_1 + 2 e_2")
        assert 3 * v == neg.parse("3 e_1 + 6 e_2")
        assert v * Fraction(1, 2) == neg.parse("1/2 e_1 + e_2")
        assert v / 2 == neg.parse("1/2 e_1 + e_2")

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            neg.blade(1) / 0

    def test_generator_square(self):
        e1 = neg.blade(1)
        assert e1 * e1 == neg.scalar(-1)
        assert pos.blade(1) * pos.blade(1) == pos.scalar(1)

    def test_known_blade_product(self):
        # e1 e3 e4 times e2 e3 at both conventions
        a = "e_134 * e_23"
        assert pos.parse(a) == pos.parse("-e_124")
        assert neg.parse(a) == neg.parse("e_124")

    def test_power(self):
        v = neg.parse("1 + e_12")
        assert v ** 0 == neg.scalar(1)
        assert v ** 2 == v * v
        assert v ** 3 == v * v * v
        with pytest.raises(ValueError):
            v ** -1

    def test_anticommuting_generators(self):
        e1, e2 = neg.blade(1), neg.blade(2)
        assert e1 * e2 == -(e2 * e1)


class TestQuaternions:
    # mu = -1, two generators: 1, e1, e2, e12 behave as 1, i, j, k
    i = neg.blade(0b01)
    j = neg.blade(0b10)
    k = neg.blade(0b11)
    one = neg.scalar(1)

    def test_squares(self):
        assert self.i * self.i == -self.one
        assert self.j * self.j == -self.one
        assert self.k * self.k == -self.one

    def test_products(self):
        assert self.i * self.j == self.k
        assert self.j * self.i == -self.k
        assert self.j * self.k == self.i
        assert self.k * self.j == -self.i
        assert self.k * self.i == self.j
        assert self.i * self.k == -self.j

    def test_norm_of_unit_quaternion(self):
        q = (self.one + self.i + self.j + self.k) / 2
        conj = (self.one - self.i - self.j - self.k) / 2
        assert q * conj == self.one


class TestGrades:
    def test_grades_listing(self):
        v = neg.parse("1 + e_1 + e_12 + e_123")
        assert v.grades() == [0, 1, 2, 3]

    def test_grade_part(self):
        v = neg.parse("1 + e_1 + e_2 + e_12")
        assert v.grade_part(1) == neg.parse("e_1 + e_2")
        assert v.grade_part(5).is_zero()

    def test_terms_ascending_by_index(self):
        v = neg.parse("e_12 + e_3 + 1")
        assert [m for m, _ in v.terms()] == [0, 0b011, 0b100]


class TestFormatting:
    def test_zero(self):
        assert str(neg.zero()) == "0"
        assert neg.parse("0") == neg.zero()

    def test_scalars(self):
        assert str(neg.scalar(5)) == "5"
        assert str(neg.scalar(Fraction(-3, 4))) == "-3/4"

    def test_unit_coefficients_suppressed(self):
        assert str(neg.parse("e_12")) == "e_{12}"
        assert str(neg.parse("-e_12")) == "-e_{12}"

    def test_mixed(self):
        v = neg.parse("2 e_1 - 3/4 e_{23} + 5")
        assert str(v) == "5 + 2 e_{1} - 3/4 e_{23}"

    def test_i_style(self):
        v = neg.parse("i_2636")
        assert v.format("i") == "i_2636"
        assert v.format("e") == "e_{347ac}"


@settings(max_examples=60)
@given(v=multivectors(neg))
def test_format_parse_round_trip(v):
    assert neg.parse(v.format("e")) == v
    assert neg.parse(v.format("i")) == v


@settings(max_examples=40)
@given(a=multivectors(neg), b=multivectors(neg), c=multivectors(neg))
def test_ring_laws_negative_mu(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@settings(max_examples=40)
@given(a=multivectors(pos), b=multivectors(pos), c=multivectors(pos))
def test_ring_laws_positive_mu(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(a=multivectors(neg))
def test_additive_group(a):
    assert a + neg.zero() == a
    assert a - a == neg.zero()
    assert -(-a) == a


def test_repr_mentions_convention():
    assert "mu=-1" in repr(neg.blade(1))
    assert "mu=-1" in repr(neg)
