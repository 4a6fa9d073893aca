"""Polynomial core: parsing, contraction, tails, (de)homogenization."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from apolarity.poly import (
    DUAL,
    PRIMAL,
    NEG_INFINITY,
    ParseError,
    Polynomial,
    contract,
    dehomogenize,
    dp_substitute,
    dual_dehomogenize,
    homogeneous_component,
    homogenize,
    parse,
    poly_str,
    tail,
)
from apolarity.scalars import PrimeField

from conftest import dense_substitution_oracle, random_polynomial


class TestParse:
    def test_direct_transcription(self):
        f = parse("x1^2*x2 + x2^2", 2)
        assert f.terms == {(2, 1): 1, (0, 2): 1}

    def test_zero(self):
        assert parse("0", 3).is_zero()
        assert parse("0", 3).degree() == NEG_INFINITY

    def test_worked_sextic(self):
        f = parse("x1^6 + x1^3*x2", 2)
        assert f.terms == {(6, 0): 1, (3, 1): 1}

    def test_rational_coefficients_and_signs(self):
        f = parse("3/2*x1^2 - x2 + 5", 2)
        assert f.terms == {(2, 0): Fraction(3, 2), (0, 1): -1, (0, 0): 5}

    def test_repeated_factors_add_exponents(self):
        assert parse("x1*x1*x2", 2) == parse("x1^2*x2", 2)

    def test_zero_base_indexing(self):
        f = parse("x0^3 + x0*x1^2", 2, base=0)
        assert f.terms == {(3, 0): 1, (1, 2): 1}

    def test_round_trip_with_printer(self, rng):
        for _ in range(50):
            f = random_polynomial(rng, rng.randint(1, 4), rng.randint(1, 5))
            assert parse(poly_str(f), f.nvars) == f

    def test_dual_round_trip(self):
        psi = parse("-y2 + y1^3", 2, side=DUAL)
        assert parse(poly_str(psi), 2, side=DUAL) == psi

    def test_syntax_error_has_position(self):
        with pytest.raises(ParseError) as info:
            parse("x1 + * x2", 2)
        assert "position" in str(info.value)

    def test_variable_out_of_range(self):
        with pytest.raises(ParseError):
            parse("x3", 2)
        with pytest.raises(ParseError):
            parse("x0", 2)  # base 1: x0 not allowed

    def test_division_by_zero_literal(self):
        with pytest.raises(ParseError):
            parse("1/0*x1", 2)

    def test_wrong_side_letter(self):
        with pytest.raises(ParseError):
            parse("y1", 2, side=PRIMAL)


class TestContract:
    def test_quadric_partial(self):
        f = parse("x1^2*x2 + x2^2", 2)
        assert contract(parse("y2", 2, side=DUAL), f) == parse("x1^2 + x2", 2)

    def test_identity_operator(self, rng):
        for _ in range(10):
            f = random_polynomial(rng, 3, 4)
            one = Polynomial.constant(3, Fraction(1), DUAL)
            assert contract(one, f) == f

    def test_order_one_operator_extracts_hidden_variable(self):
        f = parse("x1^6 + x1^3*x2", 2)
        psi = parse("-y2 + y1^3", 2, side=DUAL)
        assert contract(psi, f) == parse("x2", 2)

    def test_no_multinomial_coefficients(self):
        # y1(x1^2) = x1 with coefficient 1 in the divided-power convention
        assert contract(parse("y1", 1, side=DUAL), parse("x1^2", 1)) == parse("x1", 1)

    def test_module_action(self, rng):
        for _ in range(20):
            f = random_polynomial(rng, 3, 5)
            a = random_polynomial(rng, 3, 2, side=DUAL)
            b = random_polynomial(rng, 3, 2, side=DUAL)
            assert contract(a * b, f) == contract(a, contract(b, f))

    def test_bilinearity(self, rng):
        for _ in range(10):
            f = random_polynomial(rng, 2, 4)
            g = random_polynomial(rng, 2, 4)
            a = random_polynomial(rng, 2, 2, side=DUAL)
            b = random_polynomial(rng, 2, 2, side=DUAL)
            assert contract(a + b, f + g) == (
                contract(a, f) + contract(a, g) + contract(b, f) + contract(b, g)
            )

    def test_degree_drop(self, rng):
        for _ in range(20):
            f = random_polynomial(rng, 3, 5)
            psi = random_polynomial(rng, 3, 3, side=DUAL)
            image = contract(psi, f)
            if not image.is_zero():
                assert image.degree() <= f.degree() - psi.order()

    def test_side_and_arity_errors(self):
        f = parse("x1", 1)
        with pytest.raises(ValueError):
            contract(f, f)
        with pytest.raises(ValueError):
            contract(parse("y1", 2, side=DUAL), f)


class TestTail:
    def test_component_selection(self):
        f = parse("x1^6 + x1^3*x2 + x1", 2)
        assert tail(f, 4) == parse("x1^3*x2 + x1", 2)

    def test_full_tail_is_identity(self, rng):
        f = random_polynomial(rng, 3, 5)
        assert tail(f, int(f.degree())) == f

    def test_homogeneous_input_truncates_to_zero(self):
        assert tail(parse("x1^3 + x2^3 + x3^3", 3), 2).is_zero()

    def test_homogeneous_component(self):
        f = parse("x1^3 + x1*x2 + 1", 2)
        assert homogeneous_component(f, 2) == parse("x1*x2", 2)
        assert homogeneous_component(f, 5).is_zero()


class TestHomogenize:
    def test_inverse_of_dehomogenize_example(self):
        g = parse("1 + x1^2", 1)
        G = homogenize(g, 3)
        assert G == parse("x0^3 + x0*x1^2", 2, base=0)

    def test_zero(self):
        assert homogenize(Polynomial.zero(3), 5).is_zero()

    def test_exact_degree(self, rng):
        g = random_polynomial(rng, 2, 4)
        G = homogenize(g, int(g.degree()))
        assert G.is_homogeneous() and G.degree() == g.degree()
        # leading component keeps zero exponent on the new variable
        top = homogeneous_component(g, int(g.degree()))
        for exponents, coeff in top.terms.items():
            assert G.terms[(0,) + exponents] == coeff

    def test_below_degree_rejected(self):
        with pytest.raises(ValueError):
            homogenize(parse("x1^3", 1), 2)

    def test_round_trip(self, rng):
        for _ in range(20):
            g = random_polynomial(rng, 3, 4)
            d = int(g.degree()) + rng.randint(0, 2)
            G = homogenize(g, d)
            x0 = Polynomial.variable(4, 0)
            back, _ = dehomogenize(G, x0)
            assert back == g


class TestDehomogenize:
    def test_coordinate_substitution(self):
        F = parse("x0^3 + x0*x1^2", 2, base=0)
        f, _ = dehomogenize(F, Polynomial.variable(2, 0))
        assert f == parse("1 + x1^2", 1)

    def test_monomial(self):
        F = parse("x0^2*x1", 2, base=0)
        f, _ = dehomogenize(F, Polynomial.variable(2, 0))
        assert f == parse("x1", 1)

    def test_general_linear_form_against_dense_oracle(self, rng):
        for _ in range(15):
            n = rng.randint(2, 4)
            F = random_polynomial(rng, n, 3, homogeneous=True)
            coeffs = [Fraction(rng.randint(-2, 2)) for _ in range(n)]
            if all(c == 0 for c in coeffs):
                coeffs[0] = Fraction(1)
            l = Polynomial(
                n,
                {
                    tuple(1 if j == i else 0 for j in range(n)): c
                    for i, c in enumerate(coeffs)
                    if c != 0
                },
                PRIMAL,
            )
            f, record = dehomogenize(F, l)
            oracle = dense_substitution_oracle(F, record.old_to_new)
            dropped = {}
            for exponents, coeff in oracle.terms.items():
                dropped[exponents[1:]] = dropped.get(exponents[1:], 0) + coeff
            assert f == Polynomial(n - 1, dropped, PRIMAL)

    def test_injectivity_round_trip(self, rng):
        # degree-d forms inject onto polynomials of degree <= d
        for _ in range(10):
            n = rng.randint(2, 3)
            F = random_polynomial(rng, n, 3, homogeneous=True)
            l = parse("x0 + x1", n, base=0)
            f, record = dehomogenize(F, l)
            assert f.degree() <= F.degree()
            rebuilt = record.unapply(homogenize(f, int(F.degree())))
            assert rebuilt == F

    def test_divisible_case_loses_top_degree(self):
        # x0 + x1 divides x0^3 + x1^3, so the cubic part of the image vanishes
        F = parse("x0^3 + x1^3", 2, base=0)
        f, _ = dehomogenize(F, parse("x0 + x1", 2, base=0))
        assert f == parse("1 - x1 + x1^2", 1)

    def test_generic_case_keeps_top_degree(self):
        F = parse("x0^3 + x0*x1^2", 2, base=0)
        f, _ = dehomogenize(F, parse("x0 + x1", 2, base=0))
        assert f.degree() == 3

    def test_errors(self):
        F = parse("x0^2", 1, base=0)
        with pytest.raises(ValueError):
            dehomogenize(F, Polynomial.zero(1))
        with pytest.raises(ValueError):
            dehomogenize(F, parse("x0^2", 1, base=0))
        with pytest.raises(ValueError):
            dehomogenize(parse("x0^2 + x0", 1, base=0), Polynomial.variable(1, 0))


class TestTailLemma:
    def test_tail_equality(self, rng):
        # degree-(deg F - deg Psi) tails of the two contraction routes agree
        for _ in range(40):
            n = rng.randint(2, 4)
            F = random_polynomial(rng, n, rng.randint(1, 4), homogeneous=True)
            Psi = random_polynomial(
                rng, n, rng.randint(0, int(F.degree())), side=DUAL, homogeneous=True
            )
            f = _pi(F)
            psi = dual_dehomogenize(Psi)
            cutoff = int(F.degree() - Psi.degree())
            if cutoff < 0:
                continue
            lhs = tail(_pi(contract(Psi, F)), cutoff)
            rhs = tail(contract(psi, f), cutoff)
            assert lhs == rhs

    def test_divisible_case_is_exact(self, rng):
        # when x0^(deg Psi) divides F the two routes agree on the nose
        for _ in range(20):
            n = rng.randint(2, 3)
            g = random_polynomial(rng, n - 1, 3)
            b = rng.randint(0, 2)
            F = homogenize(g, int(g.degree()) + b)
            Psi = random_polynomial(rng, n, b, side=DUAL, homogeneous=True) if b else None
            if Psi is None:
                continue
            assert _pi(contract(Psi, F)) == contract(dual_dehomogenize(Psi), _pi(F))

    def test_local_zero_lifts_to_global_zero(self, rng):
        from apolarity.apolar import annihilator_generators

        for _ in range(10):
            f = random_polynomial(rng, 2, 4)
            for psi in annihilator_generators(f, int(f.degree()) + 1):
                for extra in (0, 1):
                    Psi = homogenize(psi, int(psi.degree()) + extra)
                    F = homogenize(f, int(f.degree()) + extra)
                    assert contract(Psi, F).is_zero()


def _pi(F: Polynomial) -> Polynomial:
    terms = {}
    for exponents, coeff in F.terms.items():
        key = exponents[1:]
        terms[key] = terms.get(key, 0) + coeff
    return Polynomial(F.nvars - 1, terms, PRIMAL)


class TestPrimeField:
    def test_contraction_matches_rationals_on_integer_input(self):
        gf = PrimeField(7)
        f = parse("x1^2*x2 + x2^2", 2, field=gf)
        image = contract(parse("y2", 2, side=DUAL, field=gf), f)
        assert image == parse("x1^2 + x2", 2, field=gf)

    def test_char_2_and_3_rejected(self):
        for p in (2, 3, 4, 9):
            with pytest.raises(ValueError):
                PrimeField(p)

    def test_float_inputs_rejected(self):
        from apolarity.scalars import RATIONALS

        with pytest.raises(TypeError):
            RATIONALS(0.5)
        with pytest.raises(TypeError):
            PrimeField(5)(0.5)

    def test_arithmetic(self):
        gf = PrimeField(5)
        a = gf(7)
        assert a == 2
        assert a + 4 == 1
        assert a * 3 == 1
        assert (a / gf(3)) * gf(3) == a
        assert a ** 3 == 3
        assert a ** -1 * a == 1

    def test_dehomogenize_round_trip_over_prime_field(self):
        gf = PrimeField(7)
        F = parse("x0^3 + 2*x0*x1^2 + x1^3", 2, base=0, field=gf)
        l = parse("x0 + 3*x1", 2, base=0, field=gf)
        f, record = dehomogenize(F, l)
        assert record.unapply(homogenize(f, 3)) == F


class TestDpSubstitute:
    def test_against_dense_oracle(self, rng):
        for _ in range(15):
            n = rng.randint(1, 3)
            m = rng.randint(1, 3)
            f = random_polynomial(rng, n, 4)
            images = [
                [Fraction(rng.randint(-2, 2)) for _ in range(m)] for _ in range(n)
            ]
            assert dp_substitute(f, images) == dense_substitution_oracle(f, images)

    def test_identity(self, rng):
        f = random_polynomial(rng, 3, 4)
        identity = [[Fraction(1 if i == j else 0) for j in range(3)] for i in range(3)]
        assert dp_substitute(f, identity) == f
