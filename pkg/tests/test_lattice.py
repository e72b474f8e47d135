"""
Tests for weights, bilinear forms and signed series.
"""
from fractions import Fraction

import pytest

from pybranch.exceptions import DimensionMismatchError, SchemaError, TruncationError
from pybranch.models.lattice import (
    GramForm,
    HeightOrder,
    SignedSeries,
    Weight,
    inner,
    series_mul_truncated,
    to_fraction,
)
from pybranch.utils.linalg import exact_inverse, exact_product, gram_matrix


class TestRationals:
    """Test exact rational coercion."""

    def test_accepts_exact_inputs(self):
        """Ints, fractions and p/q strings become Fractions."""
        assert to_fraction(3) == Fraction(3)
        assert to_fraction('-1/2') == Fraction(-1, 2)
        assert to_fraction(' 4 / 6 ') == Fraction(2, 3)
        assert to_fraction(Fraction(5, 7)) == Fraction(5, 7)

    @pytest.mark.parametrize('value', [0.5, '1.5', 'abc', True, None, '1/0'])
    def test_rejects_inexact_inputs(self, value):
        """Floats, decimals, booleans and garbage are schema errors."""
        with pytest.raises(SchemaError):
            to_fraction(value)


class TestWeight:
    """Test weight arithmetic."""

    def test_arithmetic(self):
        """Addition, subtraction, negation and scaling act on all coordinates."""
        a = Weight((1, '1/2'), 1, -2)
        b = Weight((0, '1/2'), 2, 1)
        assert a + b == Weight((1, 1), 3, -1)
        assert a - b == Weight((1, 0), -1, -3)
        assert -a == Weight((-1, '-1/2'), -1, 2)
        assert a.scale(2) == Weight((2, 1), 2, -4)

    def test_zero_and_delta(self):
        """δ has zero finite part and level, grade 1."""
        assert Weight.zero(2).is_zero()
        delta = Weight.delta(2)
        assert not delta.is_zero()
        assert (delta.finite, delta.level, delta.grade) == ((0, 0), 0, 1)

    def test_grade_helpers(self):
        """Grade can be shifted or replaced without touching the rest."""
        w = Weight((1, 2), 3, 4)
        assert w.shift_grade(-5) == Weight((1, 2), 3, -1)
        assert w.with_grade(0) == Weight((1, 2), 3, 0)
        assert w.finite_part() == Weight((1, 2))

    def test_dimension_mismatch(self):
        """Weights of different dimensions cannot be combined."""
        with pytest.raises(DimensionMismatchError):
            Weight((1,)) + Weight((1, 2))

    def test_hashable_and_equal(self):
        """Equal coordinates give equal, hash-identical weights."""
        assert hash(Weight((1, '2/4'))) == hash(Weight((1, Fraction(1, 2))))
        assert len({Weight((1,)), Weight(('1',))}) == 1

    def test_json_round_trip(self):
        """to_dict and from_dict use p/q strings."""
        w = Weight(('1/3', -2), 1, -4)
        data = w.to_dict()
        assert data == {'finite': ['1/3', '-2'], 'level': '1', 'grade': '-4'}
        assert Weight.from_dict(data) == w

    def test_from_dict_requires_finite(self):
        """A weight document without coordinates is a schema error."""
        with pytest.raises(SchemaError):
            Weight.from_dict({'level': 1})

    def test_str(self):
        """Rendering separates finite part, level and grade."""
        assert str(Weight((1, '-1/2'), 0, 3)) == '(1, -1/2; 0; 3)'


class TestInner:
    """Test the affine-extended pairing."""

    def test_affine_pairing(self):
        """(λ|μ) = λ̊ᵀGμ̊ + k_λ n_μ + n_λ k_μ."""
        form = GramForm.identity(2)
        a = Weight((1, 0), 2, 3)
        b = Weight((1, 1), 5, 7)
        assert inner(form, a, b) == 1 + 2 * 7 + 3 * 5

    def test_scaled_form(self):
        """Scalar forms multiply the finite part only."""
        form = GramForm.scalar(3, '1/3')
        a = Weight((-2, 1, 1))
        assert inner(form, a, a) == 2

    def test_pairing_dimension_checked(self):
        """Weights must match the form."""
        with pytest.raises(DimensionMismatchError):
            inner(GramForm.identity(2), Weight((1,)), Weight((1,)))

    def test_form_must_be_symmetric(self):
        """Non-symmetric matrices are rejected."""
        with pytest.raises(SchemaError):
            GramForm(((1, 2), (0, 1)))


class TestHeightOrder:
    """Test the grade-major order."""

    def test_grade_dominates(self):
        """A higher grade wins regardless of the finite part."""
        order = HeightOrder(((Fraction(1),),))
        assert order.key(Weight((-100,), 0, 1)) > order.key(Weight((100,), 0, 0))

    def test_functionals_break_ties(self):
        """Within a grade the functionals decide before the coordinates."""
        order = HeightOrder(((Fraction(0), Fraction(1)),))
        assert order.is_positive(Weight((-5, 1)))
        assert not order.is_positive(Weight((5, -1)))

    def test_translation_invariant(self):
        """Comparisons survive a common shift."""
        order = HeightOrder(((Fraction(1), Fraction(1)),))
        a, b, shift = Weight((1, 0)), Weight((0, 0)), Weight((7, -3), 0, 2)
        assert (order.key(a) > order.key(b)) == (order.key(a + shift) > order.key(b + shift))


class TestSignedSeries:
    """Test sparse signed series."""

    def test_zero_terms_dropped(self):
        """Vanishing coefficients are not stored."""
        series = SignedSeries({Weight((1,)): 0, Weight((2,)): 3})
        assert len(series) == 1
        assert series.coefficient(Weight((1,))) == 0

    def test_floor_drops_low_grades(self):
        """Terms below the floor are discarded."""
        series = SignedSeries({Weight((0,), 0, 0): 1, Weight((0,), 0, -3): 1}, floor=-2)
        assert list(series) == [Weight((0,), 0, 0)]
        assert series.floor == -2

    def test_addition_cancels(self):
        """a + (−a) is empty."""
        series = SignedSeries({Weight((1,)): 2, Weight((0,)): -1})
        assert not (series + -series)
        assert series - series == SignedSeries()

    def test_equality_ignores_floor(self):
        """Equality compares terms only."""
        terms = {Weight((0,)): 1}
        assert SignedSeries(terms) == SignedSeries(terms, floor=-4)

    def test_shifted(self):
        """Shifting multiplies by a monomial and moves the floor."""
        series = SignedSeries({Weight((1,), 0, 0): 1}, floor=-2)
        moved = series.shifted(Weight((1,), 0, -1))
        assert moved.coefficient(Weight((2,), 0, -1)) == 1
        assert moved.floor == -3

    def test_sorted_items_descending(self):
        """Terms come out highest first."""
        series = SignedSeries({Weight((0,), 0, -1): 1, Weight((0,), 0, 0): -1})
        assert [w.grade for w, _ in series.sorted_items()] == [0, -1]

    def test_truncated_product(self):
        """(1 − e^{−δ})(1 + e^{−δ}) keeps only the requested grades."""
        zero, delta = Weight((0,)), Weight.delta(1)
        a = SignedSeries({zero: 1, -delta: -1})
        b = SignedSeries({zero: 1, -delta: 1})
        full = series_mul_truncated(a, b, -2)
        assert full == SignedSeries({zero: 1, -delta.scale(2): -1})
        assert full.floor is None
        cut = series_mul_truncated(a, b, -1)
        assert cut == SignedSeries({zero: 1})
        assert cut.floor == -1

    def test_unsound_truncation_raises(self):
        """A product cannot be kept below what its truncated factor supports."""
        zero, delta = Weight((0,)), Weight.delta(1)
        truncated = SignedSeries({zero: 1}, floor=-1)
        other = SignedSeries({zero: 1, -delta: 1})
        assert series_mul_truncated(truncated, other, -1) == SignedSeries({zero: 1, -delta: 1})
        with pytest.raises(TruncationError):
            series_mul_truncated(truncated, other, -2)

    def test_list_round_trip(self):
        """to_list and from_list preserve terms."""
        series = SignedSeries({Weight((1, -1)): 2, Weight((0, 0), 1, -1): -1})
        assert SignedSeries.from_list(series.to_list()) == series

    def test_non_integer_coefficient_rejected(self):
        """Series coefficients must be integers."""
        with pytest.raises(SchemaError):
            SignedSeries({Weight((0,)): Fraction(1, 2)})

    @pytest.mark.parametrize('min_grade', [0, -1, -2])
    def test_truncated_product_associative_and_commutative(self, min_grade):
        """On a shared window the truncated product does not depend on order or grouping."""
        a = SignedSeries({
            Weight((0,), 0, 0): 1,
            Weight((1,), 0, -1): -1,
            Weight((-1,), 0, -2): 2,
            Weight((0,), 0, -3): 5,
        }, floor=-3)
        b = SignedSeries({Weight((1,), 0, 0): 1, Weight((0,), 0, -1): 1, Weight((2,), 0, -2): -1})
        c = SignedSeries({Weight((0,), 0, 0): 1, Weight((-1,), 0, -1): -1}, floor=-2)

        def mul(x, y):
            return series_mul_truncated(x, y, min_grade)

        assert mul(a, b) == mul(b, a)
        assert mul(b, c) == mul(c, b)
        left, right = mul(mul(a, b), c), mul(a, mul(b, c))
        assert left == right
        assert left.floor == right.floor == min_grade
        assert left
        assert all(w.grade >= min_grade for w in left)

    def test_g2_three_factor_product(self, g2):
        """The colliding monomial e^{−(α1+2α2)} cancels in the G2 product."""
        a1, a2 = g2.simple_roots
        zero = g2.zero()
        product = SignedSeries.one(g2.ambient_dim)
        for root in (a2, a1 + a2, a1 + a2.scale(2)):
            product = series_mul_truncated(product, SignedSeries({zero: 1, -root: -1}), 0)
        assert product == SignedSeries({
            zero: 1,
            -a2: -1,
            -(a1 + a2): -1,
            -(a1 + a2.scale(3)): 1,
            -(a1.scale(2) + a2.scale(3)): 1,
            -(a1.scale(2) + a2.scale(4)): -1,
        })


class TestExactLinalg:
    """Test the sympy-backed matrix helpers."""

    def test_inverse(self):
        """The A2 Cartan matrix inverts to thirds."""
        inverse = exact_inverse([[Fraction(2), Fraction(-1)], [Fraction(-1), Fraction(2)]])
        assert inverse == [[Fraction(2, 3), Fraction(1, 3)], [Fraction(1, 3), Fraction(2, 3)]]

    def test_singular_matrix(self):
        """Dependent rows cannot be inverted."""
        with pytest.raises(SchemaError):
            exact_inverse([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])

    def test_product_and_gram(self):
        """Products stay exact; Gram matrices use the form."""
        half = [[Fraction(1, 2), Fraction(0)], [Fraction(0), Fraction(1, 2)]]
        assert exact_product(half, half) == [[Fraction(1, 4), 0], [0, Fraction(1, 4)]]
        form = GramForm.scalar(2, '1/3')
        assert gram_matrix([(Fraction(1), Fraction(1))], form) == [[Fraction(2, 3)]]
