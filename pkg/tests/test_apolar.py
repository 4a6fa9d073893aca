"""Spaces of partials, annihilators, apolarity, and local schemes."""

from __future__ import annotations

from fractions import Fraction

import pytest

from apolarity.apolar import (
    annihilator_generators,
    annihilator_stabilized,
    apolar_length,
    diff_space,
    is_apolar,
    local_scheme,
    representative_operator,
)
from apolarity.linalg import MonomialSpan
from apolarity.poly import (
    DUAL,
    PRIMAL,
    Polynomial,
    contract,
    dehomogenize,
    homogenize,
    monomials_up_to,
    parse,
)

from conftest import random_polynomial


class TestDiffSpace:
    def test_worked_basis_dimension(self):
        space = diff_space(parse("x1^2*x2 + x2^2", 2))
        assert space.dim == 6
        assert space.hilbert_values() == (1, 2, 2, 1)
        # the published basis spans the same space
        for text in ("x1^2*x2 + x2^2", "x1^2 + x2", "x1*x2", "x1", "x2", "1"):
            assert space.contains(parse(text, 2))

    def test_quartic_with_smaller_space(self):
        assert diff_space(parse("x1^4 + x1^2*x2 + x2^2", 2)).dim == 5

    def test_power_chain(self):
        space = diff_space(parse("x1^7", 1))
        assert space.dim == 8
        assert space.degrees == tuple(range(7, -1, -1))
        assert space.orders == tuple(range(0, 8))

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            diff_space(Polynomial.zero(2))

    def test_contraction_closed(self, rng):
        for _ in range(10):
            f = random_polynomial(rng, 3, 4)
            space = diff_space(f)
            for row in space.rows:
                for var in range(3):
                    image = contract(Polynomial.variable(3, var, DUAL), row)
                    if not image.is_zero():
                        assert space.contains(image)

    def test_rows_are_reduced_echelon(self, rng):
        for _ in range(10):
            f = random_polynomial(rng, 3, 4)
            rows = diff_space(f).rows
            pivots = []
            for index, row in enumerate(rows):
                lead, coeff = row.sorted_terms()[0]
                assert coeff == 1
                pivots.append(lead)
                # pivot monomials vanish in all other rows
                for j, other in enumerate(rows):
                    if j != index:
                        assert other.coefficient(lead) == 0
            assert len(set(pivots)) == len(pivots)

    def test_unit_and_f_in_span(self, rng):
        for _ in range(10):
            f = random_polynomial(rng, 2, 5)
            space = diff_space(f)
            assert space.contains(f)
            assert space.contains(Polynomial.constant(2, Fraction(1)))

    def test_order_definitional_property(self, rng):
        # a row has order >= j iff it lies in the span of contractions of f
        # by dual monomials of degree >= j
        for _ in range(6):
            f = random_polynomial(rng, 2, 5, max_terms=3)
            space = diff_space(f)
            top = int(f.degree())
            for j in range(top + 1):
                level = MonomialSpan()
                for alpha in monomials_up_to(2, top):
                    if sum(alpha) >= j:
                        image = contract(Polynomial.monomial(alpha, Fraction(1), DUAL), f)
                        if not image.is_zero():
                            level.insert(dict(image.terms))
                for row, order in zip(space.rows, space.orders):
                    assert (order >= j) == level.contains(dict(row.terms))


class TestApolarLength:
    def test_worked_values(self):
        assert apolar_length(parse("x1^2*x2 + x2^2", 2)) == 6
        assert apolar_length(parse("x1^6 + x1^3*x2", 2)) == 8
        assert apolar_length(Polynomial.constant(3, Fraction(1))) == 1
        assert apolar_length(Polynomial.zero(3)) == 0

    def test_homogenization_round_trip_preserves_length(self, rng):
        for _ in range(10):
            g = random_polynomial(rng, 2, 4)
            d = int(g.degree()) + rng.randint(0, 2)
            G = homogenize(g, d)
            back, _ = dehomogenize(G, Polynomial.variable(3, 0))
            assert apolar_length(back) == apolar_length(g)


class TestAnnihilator:
    def test_trivial_kernel_below_stabilization(self):
        assert annihilator_generators(parse("x1^2*x2 + x2^2", 2), 2) == []

    def test_cubic_kernel_contents(self):
        f = parse("x1^2*x2 + x2^2", 2)
        generators = annihilator_generators(f, 3)
        assert len(generators) == 4
        expected = [
            parse(text, 2, side=DUAL)
            for text in ("y1^3", "y1*y2^2", "y2^3", "y1^2*y2 - y2^2")
        ]
        assert set_of(generators) == set_of(expected)
        for psi in generators:
            assert contract(psi, f).is_zero()

    def test_matches_dense_kernel_oracle(self, rng):
        # compare kernel dimension with a rank count over the full
        # contraction matrix, monomial by monomial
        for _ in range(8):
            f = random_polynomial(rng, 2, 4)
            bound = int(f.degree()) + 1
            generators = annihilator_generators(f, bound)
            span = MonomialSpan()
            total = 0
            for alpha in monomials_up_to(2, bound):
                total += 1
                image = contract(Polynomial.monomial(alpha, Fraction(1), DUAL), f)
                if not image.is_zero():
                    span.insert(dict(image.terms))
            assert len(generators) == total - span.dim
            for psi in generators:
                assert contract(psi, f).is_zero()

    def test_sextic_has_quadric_annihilator_only(self):
        generators = annihilator_generators(parse("x1^6 + x1^3*x2", 2), 2)
        assert [str(g) for g in generators] == ["y2^2"]

    def test_stabilization_flag(self):
        f = parse("x1^6 + x1^3*x2", 2)
        assert not annihilator_stabilized(f, 2)
        assert annihilator_stabilized(f, 7)

    def test_ideal_containment_under_extra_contraction(self, rng):
        # if F is a partial of G, annihilators of G kill F as well
        for _ in range(10):
            G = random_polynomial(rng, 3, 4, homogeneous=True)
            F = contract(Polynomial.variable(3, 0, DUAL), G)
            if F.is_zero():
                continue
            for psi in annihilator_generators(G, int(G.degree())):
                assert contract(psi, F).is_zero()


def set_of(polys):
    return {tuple(sorted(p.terms.items())) for p in polys}


class TestRepresentativeOperator:
    def test_reaches_each_basis_row_at_its_order(self, rng):
        for _ in range(6):
            f = random_polynomial(rng, 2, 4, max_terms=3)
            space = diff_space(f)
            for row, order in zip(space.rows, space.orders):
                psi = representative_operator(f, row, min_order=order)
                assert psi is not None
                assert psi.order() >= order
                assert contract(psi, f) == row

    def test_unreachable_target(self):
        f = parse("x1^2", 1)
        target = parse("x1^2 + x1", 1)
        assert representative_operator(f, target, min_order=1) is None


class TestIsApolar:
    def test_variable_annihilates_power_of_other(self):
        F = parse("x0^3", 2, base=0)
        assert is_apolar([parse("y1", 2, side=DUAL, base=0)], F)
        assert not is_apolar([parse("y0", 2, side=DUAL, base=0)], F)

    def test_rejects_inhomogeneous_generator(self):
        with pytest.raises(ValueError):
            is_apolar([parse("y1 + y1^2", 2, side=DUAL)], parse("x0^3", 2, base=0))

    def test_homogenized_annihilator_is_apolar(self, rng):
        for _ in range(10):
            f = random_polynomial(rng, 2, 3)
            F = homogenize(f, int(f.degree()))
            generators = annihilator_generators(f, int(f.degree()) + 1)
            homogenized = [homogenize(g, int(g.degree())) for g in generators]
            assert is_apolar(homogenized, F)


class TestLocalScheme:
    def test_point(self):
        scheme = local_scheme(parse("x0^3", 1, base=0), Polynomial.variable(1, 0))
        assert scheme.length == 1 and scheme.hilbert == (1,)
        assert scheme.apolarity_checked

    def test_degree_two(self):
        scheme = local_scheme(parse("x0^2*x1", 2, base=0), Polynomial.variable(2, 0))
        assert scheme.length == 2 and scheme.hilbert == (1, 1)
        assert scheme.apolarity_checked and scheme.stabilized

    def test_cubic_surface_length_eight(self, rng):
        # a random cubic in 4 variables with generic signature has length 8
        from apolarity.witness import random_general_cubic

        found = 0
        for _ in range(5):
            f = random_general_cubic(rng)
            F = f.pad(4) + Polynomial(
                4, {(0, 2, 0, 1): Fraction(1), (1, 0, 0, 2): Fraction(1)}, PRIMAL
            )
            scheme = local_scheme(F, Polynomial.variable(4, 0))
            if scheme.hilbert == (1, 3, 3, 1):
                found += 1
                assert scheme.length == 8
            assert scheme.apolarity_checked
        assert found > 0

    def test_general_support_against_coordinate_support(self, rng):
        # lengths agree with a direct dehomogenization when l is a variable
        for _ in range(5):
            F = random_polynomial(rng, 3, 3, homogeneous=True)
            scheme = local_scheme(F, Polynomial.variable(3, 1))
            f, _ = dehomogenize(F, Polynomial.variable(3, 1))
            assert scheme.length == apolar_length(f)
            assert scheme.apolarity_checked

    def test_json_schema_keys(self):
        scheme = local_scheme(parse("x0^2*x1", 2, base=0), Polynomial.variable(2, 0))
        data = scheme.as_dict()
        assert set(data) >= {"length", "hilbert", "annihilator", "apolarity_checked"}
        assert data["length"] == 2 and data["hilbert"] == [1, 1]
        assert all(isinstance(s, str) for s in data["annihilator"])
