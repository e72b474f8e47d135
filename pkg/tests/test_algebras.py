"""
Tests for algebra construction, Weyl orbits, singular elements and denominators.
"""
from fractions import Fraction
from itertools import product

import pytest

from pybranch.algebras import (
    SHIPPED_ALGEBRAS,
    AlgebraKind,
    build_algebra,
    classical_weyl_orbit,
    dominant_conjugate,
    expand_denominator,
    singular_weights,
)
from pybranch.algebras.weyl import translations_within
from pybranch.exceptions import SchemaError, UnsupportedAlgebraError, WeightError
from pybranch.models.lattice import SignedSeries, Weight
from pybranch.models.results import SingularElement


def _root_terms(spec, series):
    return {tuple(int(c) for c in spec.root_coordinates(w)): s for w, s in series.items()}


class TestFiniteAlgebras:
    """Test finite root data."""

    @pytest.mark.parametrize('series,rank,positive,order', [
        ('A', 2, 3, 6),
        ('B', 2, 4, 8),
        ('C', 2, 4, 8),
        ('G', 2, 6, 12),
        ('D', 4, 12, 192),
    ])
    def test_root_counts_and_weyl_order(self, series, rank, positive, order):
        """Positive roots and |W̊| match the classification."""
        spec = build_algebra({'series': series, 'rank': rank})
        assert len(spec.classical_positive_roots) == positive
        assert spec.weyl_order == order

    def test_a2_data(self, a2):
        """A2 has ρ = α1 + α2 and the standard Cartan matrix."""
        assert a2.rho == Weight((1, 0, -1))
        assert a2.cartan_matrix() == [[2, -1], [-1, 2]]
        assert a2.from_fw([1, 1]) == a2.rho

    def test_g2_cartan_convention(self, g2):
        """Entries are 2(α_i|α_j)/(α_j|α_j) with α1 long."""
        assert g2.cartan_matrix() == [[2, -3], [-1, 2]]
        assert g2.norm(g2.simple_roots[0]) == 2
        assert g2.norm(g2.simple_roots[1]) == Fraction(2, 3)

    def test_g2_highest_root(self, g2):
        """θ = 2α1 + 3α2 = ω1 in the α1-long labelling."""
        theta = g2.highest_root
        assert g2.root_coordinates(theta) == (2, 3)
        assert g2.fw_coordinates(theta) == (1, 0)
        assert g2.from_fw([1, 0]) == theta

    def test_root_coordinates_outside_span(self, a2):
        """Vectors off the root span have no root coordinates."""
        assert a2.root_coordinates(Weight((1, 1, 1))) is None

    def test_dominance(self, a2):
        """fw coordinates decide dominance and integrality."""
        assert a2.is_dominant_integral(a2.from_fw([2, 0]))
        assert not a2.is_dominant_integral(a2.from_fw(['1/2', 0]))
        assert not a2.is_dominant(a2.from_fw([-1, 2]))

    def test_dominant_conjugate(self, a2):
        """Reflecting −θ lands on θ."""
        theta = a2.highest_root
        assert dominant_conjugate(a2, -theta) == theta

    def test_kind_normalizes_g2(self):
        """"G2" is accepted as a series name."""
        assert AlgebraKind.from_dict({'series': 'G2'}) == AlgebraKind('G', 2)

    @pytest.mark.parametrize('descriptor', [
        {'series': 'E', 'rank': 8},
        {'series': 'G', 'rank': 3},
        {'series': 'A', 'rank': 3, 'twist': 2},
        {'series': 'A', 'rank': 2, 'twist': 3},
        {'series': 'D', 'rank': 2},
    ])
    def test_unsupported(self, descriptor):
        """Unknown series, ranks and twists are rejected."""
        with pytest.raises(UnsupportedAlgebraError):
            build_algebra(descriptor)

    def test_malformed_descriptor(self):
        """A non-integer rank is a schema error."""
        with pytest.raises(SchemaError):
            build_algebra({'series': 'A', 'rank': '2'})


class TestAffineAlgebras:
    """Test affine root data."""

    def test_untwisted_a2(self, a2_affine):
        """α0 = δ − θ, ρ has level h^∨ = 3, ω0 has level 1."""
        assert a2_affine.label == 'A2^(1)'
        assert a2_affine.simple_roots[0] == Weight((-1, 0, 1), 0, 1)
        assert a2_affine.rho == Weight((1, 0, -1), 3, 0)
        assert a2_affine.fundamental_weights[0] == Weight((0, 0, 0), 1, 0)
        assert a2_affine.cartan_matrix() == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]

    def test_twisted_a2(self, a2_twisted):
        """A2^(2) has classical part B1, α0 = δ − 2e1 and ρ of level 3."""
        assert a2_twisted.label == 'A2^(2)'
        assert a2_twisted.classical_rank == 1
        assert a2_twisted.rho == Weight(('1/2',), 3, 0)
        assert a2_twisted.fundamental_weights == (Weight((0,), 2, 0), Weight(('1/2',), 1, 0))
        assert a2_twisted.cartan_matrix() == [[2, -4], [-1, 2]]
        beta0, beta = a2_twisted.simple_roots
        assert a2_twisted.norm(beta0) == 4
        assert a2_twisted.inner(beta0, beta) == -2

    def test_positive_roots_by_grade(self, a2_affine):
        """Grade-1 roots are the six real roots plus δ with multiplicity 2."""
        roots = a2_affine.positive_roots(1)
        assert len(roots) == 10
        assert sum(mult for _, mult in roots) == 11
        assert (a2_affine.delta, 2) in roots

    def test_twisted_multiplicities(self, a2_twisted):
        """±2e_i only occur at odd grades."""
        assert a2_twisted.multiplicity(Weight((2,), 0, 1)) == 1
        assert a2_twisted.multiplicity(Weight((2,), 0, 2)) == 0
        assert a2_twisted.multiplicity(Weight((-1,), 0, 2)) == 1
        assert a2_twisted.multiplicity(Weight((0,), 0, 3)) == 1

    def test_translations_within_zero_drop(self, a2_affine):
        """Only the trivial translation keeps a regular dominant weight at its grade."""
        found = list(translations_within(a2_affine, Weight((1, 0, -1)), Fraction(4), Fraction(0)))
        assert found == [(a2_affine.zero(), 0)]

    @pytest.mark.parametrize('kind', ['a2_affine', 'a2_twisted'])
    @pytest.mark.parametrize('vector,level,max_drop', [
        (('1/3', '-2/3'), 1, 7),
        (('5/2', '0'), 2, '9/2'),
        (('0', '0'), 3, 0),
    ])
    def test_translations_within_matches_box_search(self, request, kind, vector, level, max_drop):
        """The exact coordinate bounds find every translation a wide box search finds."""
        spec = request.getfixturevalue(kind)
        level, max_drop = Fraction(level), Fraction(max_drop)
        finite = tuple(Fraction(c) for c in vector)[:spec.ambient_dim]
        finite += (Fraction(0),) * (spec.ambient_dim - len(finite))
        v = Weight(finite)
        basis = spec.translation_basis
        expected = {}
        for coeffs in product(range(-12, 13), repeat=len(basis)):
            alpha = spec.zero()
            for c, b in zip(coeffs, basis):
                alpha = alpha + b.scale(c)
            pairing = spec.gram.finite_inner(v.finite, alpha.finite)
            drop = pairing + level * spec.gram.finite_inner(alpha.finite, alpha.finite) / 2
            if drop <= max_drop:
                expected[alpha] = drop
        found = dict(translations_within(spec, v, level, max_drop))
        assert found == expected
        assert expected


class TestSingularWeights:
    """Test Ψ^(μ) enumeration."""

    def test_a2_adjoint(self, a2):
        """Six alternating singular weights of the adjoint module."""
        element = singular_weights(a2, a2.from_fw([1, 1]))
        assert _root_terms(a2, element.series) == {
            (1, 1): 1, (-1, 1): -1, (-3, -1): 1, (-3, -3): -1, (-1, -3): 1, (1, -1): -1,
        }

    def test_g2_adjoint(self, g2):
        """Twelve singular weights of the 14-dimensional module with their signs."""
        element = singular_weights(g2, g2.from_fw([1, 0]))
        assert _root_terms(g2, element.series) == {
            (2, 3): 1, (0, 3): -1, (-1, 2): 1, (0, -4): 1,
            (-1, -6): -1, (-8, -12): -1, (-8, -13): 1, (-6, -13): -1,
            (-5, -12): 1, (-6, -6): 1, (-5, -4): -1, (2, 2): -1,
        }

    def test_orbit_of_rho(self, g2):
        """The signed orbit of ρ has |W̊| terms."""
        orbit = classical_weyl_orbit(g2, g2.rho)
        assert len(orbit) == 12
        assert sum(sign for _, sign in orbit.items()) == 0

    def test_affine_dot_antisymmetry(self, a2_affine):
        """s_i∘ maps Ψ^(ω0) to −Ψ^(ω0) on every weight whose image stays in the window."""
        element = singular_weights(a2_affine, a2_affine.fundamental_weights[0], 6)
        series = element.series
        checked = 0
        for weight, sign in series.items():
            for index in range(len(a2_affine.simple_roots)):
                image = a2_affine.dot_reflect(weight, index)
                if image.grade >= series.floor:
                    assert series.coefficient(image) == -sign
                    checked += 1
        assert checked > 0

    def test_cutoff_monotone(self, a2_affine):
        """A shallow window is the restriction of a deeper one."""
        omega0 = a2_affine.fundamental_weights[0]
        shallow = singular_weights(a2_affine, omega0, 3).series
        deep = singular_weights(a2_affine, omega0, 6).series
        assert deep.restrict(-3) == shallow

    def test_a2_denominator_cancels(self, a2):
        """Three factors expand to eight monomials, two of which cancel."""
        denominator = expand_denominator(a2)
        assert len(denominator) == 6
        assert denominator.coefficient(-a2.highest_root) == 0

    def test_singular_orbit_is_empty(self, a2):
        """Weights on a wall have an empty alternating orbit."""
        assert not classical_weyl_orbit(a2, a2.from_fw([1, 0]))
        assert not classical_weyl_orbit(a2, a2.zero())

    def test_non_dominant_rejected(self, a2):
        """Highest weights must be dominant integral."""
        with pytest.raises(WeightError):
            singular_weights(a2, a2.from_fw([-1, 0]))
        with pytest.raises(WeightError):
            singular_weights(a2, a2.from_fw(['1/2', 0]))

    def test_negative_cutoff_rejected(self, a2_affine):
        """Cutoffs are nonnegative."""
        with pytest.raises(WeightError):
            singular_weights(a2_affine, a2_affine.fundamental_weights[0], -1)

    def test_toral_algebra(self, a2):
        """The Cartan subalgebra has Ψ^(μ) = e^μ."""
        toral = a2.cartan_subalgebra()
        mu = Weight((1, 0, -1))
        assert singular_weights(toral, mu).series == SignedSeries({mu: 1})

    def test_affine_omega0_fixture(self, a2_affine, omega0_singular_fixture):
        """The 54 singular weights of L^{ω0} above grade −10, with ε negated in the listing."""
        data = omega0_singular_fixture
        mu = a2_affine.from_fw(data['highest_weight']['fw'])
        element = singular_weights(a2_affine, mu, data['grade_cutoff'])
        expected = {
            Weight(tuple(item['finite']), data['level'], item['grade']): -item['listed_sign']
            for item in data['weights']
        }
        assert len(expected) == 54
        assert dict(element.series.items()) == expected
        assert sorted({w.grade for w in expected}) == [-9, -6, -5, -3, -2, 0]

    def test_json_round_trip(self, a2_affine):
        """SingularElement documents re-ingest to the same element."""
        element = singular_weights(a2_affine, a2_affine.fundamental_weights[0], 3)
        again = SingularElement.from_dict(element.to_dict())
        assert again.series == element.series
        assert again.series.floor == element.series.floor == -3
        assert again.to_dict() == element.to_dict()


class TestDenominatorIdentity:
    """Ψ^(0) equals the product over positive roots."""

    @pytest.mark.parametrize('kind', [k for k in SHIPPED_ALGEBRAS if not k.is_affine], ids=str)
    def test_finite(self, kind):
        """Finite Weyl denominator identity."""
        spec = build_algebra(kind)
        assert singular_weights(spec, spec.zero()).series == expand_denominator(spec)

    @pytest.mark.parametrize('cutoff', range(7))
    @pytest.mark.parametrize('kind', [k for k in SHIPPED_ALGEBRAS if k.is_affine], ids=str)
    def test_affine(self, kind, cutoff):
        """Macdonald identity on every grade down to −cutoff."""
        spec = build_algebra(kind)
        psi = singular_weights(spec, spec.zero(), cutoff).series
        assert psi == expand_denominator(spec, cutoff)

    def test_negative_cutoff(self, a2):
        """Cutoffs are nonnegative."""
        with pytest.raises(WeightError):
            expand_denominator(a2, -1)
