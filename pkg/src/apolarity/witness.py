"""Constructive witnesses: hidden-variable extensions and the cusp scheme.

`exotic_extend` builds, from f in k variables and operators phi_1..phi_m of
order >= 2, the polynomial

    sum over (i_1..i_m >= 0) of x_{k+1}^{i_1} ... x_{k+m}^{i_m}
        * (phi_1^{i_1} ... phi_m^{i_m})(f),

which acquires the new variables without changing the Hilbert function or
the space of linear partials.

`cusp_witness` exhibits, for a cubic surface in normal form, a local apolar
scheme of length at most 7 at the cusp support, strictly below the length 8
of every natural apolar scheme of a general cubic.  Starting from a cubic
f(x0, x1, x2) with nonzero x2^3 coefficient, it forms

    F = f + x1^2*x3 + x0*x3^2,      g = x1^4 + F(x0 = 1),

so that G, the degree-4 homogenization of g, satisfies y0(G) = F.  The
scheme of g is then apolar to F and its length dim Diff(g) is certified
to be at most 7; equality holds for general f by a case analysis that is
not re-verified here, so reports state "<= 7 verified".
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .apolar import (
    annihilator_generators,
    apolar_length,
    diff_space,
    is_apolar,
)
from .hilbert import hilbert_function
from .linalg import MonomialSpan
from .poly import (
    DUAL,
    PRIMAL,
    Polynomial,
    contract,
    dehomogenize,
    homogenize,
    poly_str,
)

LENGTH_NOTE = "length <= 7 verified constructively; equality holds for general cubics"


def _linear_span_rows(f: Polynomial):
    """Echelon rows of the degree <= 1 partials of f, constants included."""
    space = diff_space(f)
    span = MonomialSpan()
    for row, degree in zip(space.rows, space.degrees):
        if degree <= 1:
            span.insert(dict(row.terms))
    return span


def _spans_all_linear(f: Polynomial) -> bool:
    """Whether Diff(f)_1 contains 1 and every variable of the ring."""
    span = _linear_span_rows(f)
    if not span.contains({(0,) * f.nvars: Fraction(1)}):
        return False
    for i in range(f.nvars):
        exponents = [0] * f.nvars
        exponents[i] = 1
        if not span.contains({tuple(exponents): Fraction(1)}):
            return False
    return True


def exotic_extend(f: Polynomial, phis) -> Polynomial:
    """Extend f by one hidden variable per operator of order >= 2.

    Requires Diff(f)_1 = <1, x_1..x_k>; each phi must be a dual polynomial
    in the same k variables with no term of degree < 2.  The sum is finite
    because each application of phi lowers degree by at least 2.
    """
    if f.is_zero():
        raise ValueError("f must be nonzero")
    phis = list(phis)
    k = f.nvars
    for phi in phis:
        if phi.side != DUAL:
            raise ValueError("operators must be dual polynomials")
        if phi.nvars != k:
            raise ValueError("operators must live in the same variables as f")
        if phi.is_zero() or phi.order() < 2:
            raise ValueError(f"operator {poly_str(phi, base=1)} has order < 2")
    if not _spans_all_linear(f):
        raise ValueError("Diff(f)_1 must span 1 and all variables of f")
    m = len(phis)
    if m == 0:
        return f
    d = int(f.degree())
    nvars = k + m
    total: dict = {}
    bound = d // 2
    for powers in product(range(bound + 1), repeat=m):
        operator = Polynomial.constant(k, Fraction(1), DUAL)
        for phi, e in zip(phis, powers):
            operator = operator * phi.power(e)
        image = contract(operator, f)
        if image.is_zero():
            continue
        suffix = tuple(powers)
        for exponents, coeff in image.terms.items():
            key = exponents + suffix
            total[key] = total.get(key, 0) + coeff
    return Polynomial(nvars, total, PRIMAL)


@dataclass(frozen=True)
class WitnessReport:
    """Cusp construction outcome for one input cubic."""

    cubic: Polynomial
    form: Polynomial       # F = f + x1^2*x3 + x0*x3^2
    quartic: Polynomial    # G, homogenization of g = x1^4 + F(x0=1)
    length_f: int
    length_g: int
    local_hilbert_g: tuple
    apolar_ok: bool
    general_signature: bool  # H of F(x0=1) equals (1, 3, 3, 1)
    note: str = LENGTH_NOTE

    def as_dict(self) -> dict:
        return {
            "f": poly_str(self.cubic, base=0),
            "F": poly_str(self.form, base=0),
            "G": poly_str(self.quartic, base=0),
            "length_F_scheme": self.length_f,
            "length_G_scheme": self.length_g,
            "local_hilbert_G": list(self.local_hilbert_g),
            "apolar_ok": self.apolar_ok,
            "general_signature": self.general_signature,
            "note": self.note,
        }


def cusp_witness(f: Polynomial) -> WitnessReport:
    """Length <= 7 apolar witness for a cubic surface in cusp normal form.

    f must be a homogeneous cubic in three variables x0, x1, x2 with
    nonzero x2^3 coefficient.
    """
    if f.side != PRIMAL or f.nvars != 3:
        raise ValueError("f must be a primal cubic in the three variables x0, x1, x2")
    if f.is_zero() or not f.is_homogeneous() or f.degree() != 3:
        raise ValueError("f must be homogeneous of degree 3")
    if f.coefficient((0, 0, 3)) == 0:
        raise ValueError("the coefficient of x2^3 must be nonzero")
    one = Fraction(1)
    F = f.pad(4) + Polynomial(4, {(0, 2, 0, 1): one, (1, 0, 0, 2): one}, PRIMAL)
    x0 = Polynomial.variable(4, 0)
    f_l, _ = dehomogenize(F, x0)
    length_f = apolar_length(f_l)
    signature = hilbert_function(f_l).values == (1, 3, 3, 1) if not f_l.is_zero() else False
    g = f_l + Polynomial(3, {(4, 0, 0): one}, PRIMAL)
    G = homogenize(g, 4)
    if contract(Polynomial.variable(4, 0, DUAL), G) != F:
        raise AssertionError("homogenized witness does not contract back to F")
    space_g = diff_space(g)
    generators = annihilator_generators(g, 4)
    homogenized = [homogenize(psi, int(psi.degree())) for psi in generators]
    apolar_ok = is_apolar(homogenized, F)
    return WitnessReport(
        cubic=f,
        form=F,
        quartic=G,
        length_f=length_f,
        length_g=space_g.dim,
        local_hilbert_g=space_g.hilbert_values(),
        apolar_ok=apolar_ok,
        general_signature=signature,
    )


def random_general_cubic(rng: random.Random) -> Polynomial:
    """Random rational cubic in x0, x1, x2 with nonzero x2^3 coefficient."""
    from .poly import monomials_of_degree

    while True:
        terms = {}
        for exponents in monomials_of_degree(3, 3):
            value = Fraction(rng.randint(-4, 4))
            if rng.random() < 0.3:
                value += Fraction(rng.randint(-2, 2), 2)
            if value != 0:
                terms[exponents] = value
        if terms.get((0, 0, 3), 0) == 0:
            terms[(0, 0, 3)] = Fraction(rng.choice([1, 2, 3, -1, -2]))
        cubic = Polynomial(3, terms, PRIMAL)
        if not cubic.is_zero():
            return cubic


def random_linear_form(rng: random.Random, nvars: int) -> Polynomial:
    """Random nonzero rational linear form."""
    while True:
        terms = {}
        for i in range(nvars):
            value = Fraction(rng.randint(-3, 3))
            if value != 0:
                exponents = [0] * nvars
                exponents[i] = 1
                terms[tuple(exponents)] = value
        if terms:
            return Polynomial(nvars, terms, PRIMAL)
