"""Shared helpers: seeded random polynomial generators and dense oracles."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from apolarity.poly import DUAL, PRIMAL, Polynomial


def random_coefficient(rng: random.Random) -> Fraction:
    value = Fraction(rng.randint(-4, 4))
    if rng.random() < 0.25:
        value += Fraction(rng.randint(-3, 3), rng.choice([2, 3]))
    return value


def random_polynomial(
    rng: random.Random,
    nvars: int,
    max_degree: int,
    max_terms: int = 5,
    side: str = PRIMAL,
    homogeneous: bool = False,
    min_order: int = 0,
) -> Polynomial:
    """Sparse random polynomial; never zero."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            if homogeneous:
                degree = max_degree
            else:
                degree = rng.randint(min_order, max_degree)
            exponents = [0] * nvars
            for _ in range(degree):
                exponents[rng.randrange(nvars)] += 1
            value = random_coefficient(rng)
            if value != 0:
                key = tuple(exponents)
                terms[key] = terms.get(key, Fraction(0)) + value
        poly = Polynomial(nvars, terms, side)
        if not poly.is_zero() and poly.order() >= min_order:
            return poly


def random_dual_operator(rng: random.Random, nvars: int, max_degree: int) -> Polynomial:
    """Random dual polynomial of order >= 2 (for hidden-variable extensions)."""
    return random_polynomial(
        rng, nvars, max_degree, max_terms=3, side=DUAL, min_order=2
    )


@pytest.fixture
def rng():
    return random.Random(20240817)


def dense_substitution_oracle(f: Polynomial, images) -> Polynomial:
    """Independent check of dp_substitute via the ordinary-polynomial model.

    Over the rationals, the divided-power basis element x^[b] corresponds
    to x^b / b!; transport f, substitute densely with sympy, and transport
    back.  Valid in characteristic zero only.
    """
    import sympy

    n_old = f.nvars
    n_new = len(images[0]) if images else 0
    zs = sympy.symbols(f"z0:{max(n_new, 1)}")
    linear = [sum(sympy.Rational(c) * zs[j] for j, c in enumerate(row)) for row in images]
    expr = sympy.Integer(0)
    for exponents, coeff in f.terms.items():
        factorial = 1
        monomial = sympy.Integer(1)
        for i, e in enumerate(exponents):
            factorial *= sympy.factorial(e)
            monomial *= linear[i] ** e
        expr += sympy.Rational(coeff) * monomial / factorial
    expr = sympy.expand(expr)
    poly = sympy.Poly(expr, *zs[:n_new]) if n_new else None
    terms = {}
    if poly is None:
        if expr != 0:
            terms[()] = Fraction(int(sympy.numer(expr)), int(sympy.denom(expr)))
    else:
        for monomial, coeff in poly.terms():
            factorial = 1
            for e in monomial:
                factorial *= sympy.factorial(e)
            value = sympy.Rational(coeff) * factorial
            terms[tuple(monomial)] = Fraction(int(sympy.numer(value)), int(sympy.denom(value)))
    return Polynomial(n_new, terms, PRIMAL)
