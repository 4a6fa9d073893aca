"""Sparse exact polynomials in the divided-power convention, with contraction.

Two sides share one representation:

* primal polynomials live in the divided-power ring on variables x1..xn
  (or x0..xn for homogeneous forms); a term maps an exponent vector to a
  coefficient, and the exponent vector denotes the divided-power basis
  monomial.  Multiplying two primal monomials therefore picks up binomial
  factors: x^[a] * x^[b] = prod C(a_i+b_i, a_i) * x^[a+b].
* dual (operator) polynomials live in the ordinary polynomial ring on
  y1..yn and act on the primal side by contraction, a pure exponent shift:
  y^a applied to x^[b] is x^[b-a] when b >= a componentwise and 0 otherwise.
  No multinomial coefficients appear, which keeps every computation valid
  in any supported characteristic.

The zero polynomial has degree -inf (a sentinel, not a coefficient); the
order of a dual polynomial is its least term degree (+inf for zero).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, Mapping, Sequence

from .scalars import RATIONALS

PRIMAL = "primal"
DUAL = "dual"

NEG_INFINITY = float("-inf")
POS_INFINITY = float("inf")

Exponents = tuple  # tuple[int, ...], one entry per variable


def grlex_key(exponents: Exponents):
    """Sort key for graded lexicographic monomial order."""
    return (sum(exponents), exponents)


def monomials_of_degree(nvars: int, degree: int) -> Iterator[Exponents]:
    """Yield all exponent vectors of the given total degree."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    for head in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - head):
            yield (head,) + rest


def monomials_up_to(nvars: int, degree: int) -> Iterator[Exponents]:
    """Yield all exponent vectors of total degree <= degree, grlex ascending."""
    for d in range(degree + 1):
        yield from sorted(monomials_of_degree(nvars, d))


class Polynomial:
    """Immutable sparse polynomial; `terms` maps exponent vectors to scalars."""

    __slots__ = ("nvars", "terms", "side")

    def __init__(self, nvars: int, terms: Mapping[Exponents, object], side: str = PRIMAL):
        if side not in (PRIMAL, DUAL):
            raise ValueError(f"unknown side {side!r}")
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean = {}
        for exponents, coeff in terms.items():
            if len(exponents) != nvars:
                raise ValueError(
                    f"exponent vector {exponents} has length {len(exponents)}, expected {nvars}"
                )
            if any(e < 0 for e in exponents):
                raise ValueError(f"negative exponent in {exponents}")
            if coeff == 0:
                continue
            clean[tuple(exponents)] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "side", side)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, side: str = PRIMAL) -> "Polynomial":
        return cls(nvars, {}, side)

    @classmethod
    def constant(cls, nvars: int, value, side: str = PRIMAL) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: value}, side)

    @classmethod
    def variable(cls, nvars: int, index: int, side: str = PRIMAL) -> "Polynomial":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        exponents = [0] * nvars
        exponents[index] = 1
        return cls(nvars, {tuple(exponents): Fraction(1)}, side)

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff=Fraction(1), side: str = PRIMAL) -> "Polynomial":
        return cls(len(exponents), {tuple(exponents): coeff}, side)

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Max term degree; -inf for the zero polynomial."""
        if not self.terms:
            return NEG_INFINITY
        return max(sum(e) for e in self.terms)

    def order(self):
        """Min term degree; +inf for the zero polynomial."""
        if not self.terms:
            return POS_INFINITY
        return min(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def coefficient(self, exponents: Sequence[int]):
        return self.terms.get(tuple(exponents), 0)

    def sorted_terms(self):
        """Terms in descending graded lexicographic order (canonical)."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    # -- arithmetic ----------------------------------------------------

    def _check_compatible(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        if self.side != other.side:
            raise ValueError(f"side mismatch: {self.side} vs {other.side}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        terms = dict(self.terms)
        for exponents, coeff in other.terms.items():
            terms[exponents] = terms.get(exponents, 0) + coeff
        return Polynomial(self.nvars, terms, self.side)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        terms = dict(self.terms)
        for exponents, coeff in other.terms.items():
            terms[exponents] = terms.get(exponents, 0) - coeff
        return Polynomial(self.nvars, terms, self.side)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()}, self.side)

    def scale(self, scalar) -> "Polynomial":
        if scalar == 0:
            return Polynomial.zero(self.nvars, self.side)
        return Polynomial(self.nvars, {e: c * scalar for e, c in self.terms.items()}, self.side)

    def __rmul__(self, scalar) -> "Polynomial":
        return self.scale(scalar)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        """Ring product: ordinary on the dual side, divided-power on the primal."""
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check_compatible(other)
        terms: dict = {}
        primal = self.side == PRIMAL
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exponents = tuple(a + b for a, b in zip(ea, eb))
                coeff = ca * cb
                if primal:
                    factor = 1
                    for a, b in zip(ea, eb):
                        if a and b:
                            factor *= comb(a + b, a)
                    if factor != 1:
                        coeff = coeff * factor
                terms[exponents] = terms.get(exponents, 0) + coeff
        return Polynomial(self.nvars, terms, self.side)

    def power(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.nvars, Fraction(1), self.side)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.nvars, self.side) == (other.nvars, other.side) and self.terms == other.terms

    __hash__ = None

    # -- reshaping -----------------------------------------------------

    def pad(self, nvars: int) -> "Polynomial":
        """Embed into a ring with more (trailing) variables."""
        if nvars < self.nvars:
            raise ValueError("pad cannot drop variables")
        extra = (0,) * (nvars - self.nvars)
        return Polynomial(nvars, {e + extra: c for e, c in self.terms.items()}, self.side)

    def restrict(self, nvars: int) -> "Polynomial":
        """Drop trailing variables, which must not occur in any term."""
        if nvars > self.nvars:
            raise ValueError("restrict cannot add variables")
        for exponents in self.terms:
            if any(exponents[nvars:]):
                raise ValueError("polynomial involves a dropped variable")
        return Polynomial(nvars, {e[:nvars]: c for e, c in self.terms.items()}, self.side)

    def __str__(self) -> str:
        return poly_str(self)

    def __repr__(self) -> str:
        return f"Polynomial({self.side}, {poly_str(self)})"


# -- contraction -------------------------------------------------------


def contract(psi: Polynomial, f: Polynomial) -> Polynomial:
    """Apply the dual operator psi to f by exponent shifting.

    Bilinear extension of y^a(x^[b]) = x^[b-a] if b >= a componentwise,
    else 0.  Coefficients multiply unchanged (divided-power convention).
    """
    if psi.side != DUAL:
        raise ValueError("contract expects a dual polynomial as the operator")
    if f.side != PRIMAL:
        raise ValueError("contract expects a primal polynomial as the argument")
    if psi.nvars != f.nvars:
        raise ValueError(f"variable count mismatch: {psi.nvars} vs {f.nvars}")
    terms: dict = {}
    for alpha, c in psi.terms.items():
        for beta, e in f.terms.items():
            shifted = _shift(beta, alpha)
            if shifted is None:
                continue
            terms[shifted] = terms.get(shifted, 0) + c * e
    return Polynomial(f.nvars, terms, PRIMAL)


def _shift(beta: Exponents, alpha: Exponents):
    out = []
    for b, a in zip(beta, alpha):
        if b < a:
            return None
        out.append(b - a)
    return tuple(out)


# -- tails and homogeneous components -----------------------------------


def homogeneous_component(f: Polynomial, i: int) -> Polynomial:
    """The degree-i homogeneous summand of f."""
    return Polynomial(f.nvars, {e: c for e, c in f.terms.items() if sum(e) == i}, f.side)


def tail(f: Polynomial, d: int) -> Polynomial:
    """Sum of the homogeneous components of f of degree <= d."""
    if d < 0:
        raise ValueError("tail degree must be nonnegative")
    return Polynomial(f.nvars, {e: c for e, c in f.terms.items() if sum(e) <= d}, f.side)


# -- homogenization ------------------------------------------------------


def homogenize(g: Polynomial, d: int) -> Polynomial:
    """Homogenize to total degree d with a new first variable.

    Every term m of g gains first-variable exponent d - deg(m); the
    coefficient is unchanged, so dehomogenizing at the new variable is the
    exact inverse.  Works on either side (new variable x0 or y0).
    """
    if not g.is_zero() and d < g.degree():
        raise ValueError(f"target degree {d} is below deg(g) = {g.degree()}")
    terms = {(d - sum(e),) + e: c for e, c in g.terms.items()}
    return Polynomial(g.nvars + 1, terms, g.side)


def dual_dehomogenize(psi: Polynomial) -> Polynomial:
    """Substitute the first dual variable = 1 (ordinary-ring substitution)."""
    if psi.side != DUAL:
        raise ValueError("expected a dual polynomial")
    if psi.nvars == 0:
        raise ValueError("no variable to specialize")
    terms: dict = {}
    for exponents, coeff in psi.terms.items():
        rest = exponents[1:]
        terms[rest] = terms.get(rest, 0) + coeff
    return Polynomial(psi.nvars - 1, terms, DUAL)


def _drop_first(f: Polynomial) -> Polynomial:
    """Set the first primal variable to 1 by dropping its exponent."""
    terms: dict = {}
    for exponents, coeff in f.terms.items():
        rest = exponents[1:]
        terms[rest] = terms.get(rest, 0) + coeff
    return Polynomial(f.nvars - 1, terms, f.side)


# -- linear substitutions (divided-power automorphisms) ------------------


def _linear_dp_power(coeffs: Sequence, nvars: int, k: int) -> dict:
    """Divided-power k-th power of the linear form sum(coeffs[i] * x_i).

    Expands without multinomial coefficients: the result is the sum over
    all exponent vectors g of total degree k supported on the nonzero
    coefficients, with coefficient prod(coeffs[i] ** g[i]).
    """
    support = [i for i, c in enumerate(coeffs) if c != 0]
    out: dict = {}
    if k == 0:
        out[(0,) * nvars] = Fraction(1)
        return out
    if not support:
        return out
    for split in itertools.combinations(range(k + len(support) - 1), len(support) - 1):
        # stars-and-bars composition of k over the support
        parts = []
        prev = -1
        for s in split:
            parts.append(s - prev - 1)
            prev = s
        parts.append(k + len(support) - 2 - prev)
        exponents = [0] * nvars
        coeff = Fraction(1)
        for idx, e in zip(support, parts):
            exponents[idx] = e
            if e:
                coeff = coeff * (coeffs[idx] ** e)
        out[tuple(exponents)] = out.get(tuple(exponents), 0) + coeff
    return out


def _dp_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            exponents = tuple(x + y for x, y in zip(ea, eb))
            factor = 1
            for x, y in zip(ea, eb):
                if x and y:
                    factor *= comb(x + y, x)
            coeff = ca * cb if factor == 1 else ca * cb * factor
            out[exponents] = out.get(exponents, 0) + coeff
    return {e: c for e, c in out.items() if c != 0}


def dp_substitute(f: Polynomial, images: Sequence[Sequence]) -> Polynomial:
    """Apply the divided-power ring map sending x_i to the linear form images[i].

    `images[i]` is a coefficient row over the target variables.  A divided
    monomial x^[b] maps to the divided-power product of the images' divided
    powers, which is the unique extension of the linear map to a map of
    divided-power rings.
    """
    if f.side != PRIMAL:
        raise ValueError("dp_substitute acts on primal polynomials")
    if len(images) != f.nvars:
        raise ValueError("one image per variable required")
    new_nvars = len(images[0]) if images else 0
    total: dict = {}
    for exponents, coeff in f.terms.items():
        term = {(0,) * new_nvars: Fraction(1)}
        for i, e in enumerate(exponents):
            if e:
                term = _dp_mul(term, _linear_dp_power(images[i], new_nvars, e))
        for key, c in term.items():
            total[key] = total.get(key, 0) + coeff * c
    return Polynomial(new_nvars, total, PRIMAL)


@dataclass(frozen=True)
class ChangeOfBasis:
    """Audit record of an invertible linear change of variables.

    `old_to_new[i]` expresses old variable i as a linear form in the new
    variables (these are the substitution images); `new_to_old[k]` is the
    inverse map.  `dropped` counts trailing new variables removed because
    they do not occur in the transformed polynomial.
    """

    old_to_new: tuple
    new_to_old: tuple
    dropped: int = 0

    def apply(self, f: Polynomial) -> Polynomial:
        return dp_substitute(f, self.old_to_new)

    def unapply(self, f: Polynomial) -> Polynomial:
        return dp_substitute(f, self.new_to_old)


def _invert_matrix(rows: Sequence[Sequence]) -> list:
    """Invert a small square matrix over the coefficient field."""
    n = len(rows)
    aug = [list(r) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
           for i, r in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col]
        aug[col] = [x / inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def dehomogenize(F: Polynomial, l: Polynomial):
    """Dehomogenize the form F at the linear form l.

    Completes l to a basis deterministically (pivot = lowest-index variable
    of l, remaining unit vectors in index order), rewrites F in the new
    coordinates, and sets the l-coordinate to 1.  Returns the result in one
    fewer variable together with the change-of-basis record.  Restricted to
    forms of degree d the map is injective onto polynomials of degree <= d.
    """
    if F.side != PRIMAL or l.side != PRIMAL:
        raise ValueError("dehomogenize expects primal polynomials")
    if F.nvars != l.nvars:
        raise ValueError("variable count mismatch")
    if not F.is_homogeneous():
        raise ValueError("F must be homogeneous")
    if l.is_zero():
        raise ValueError("l must be nonzero")
    if l.degree() != 1:
        raise ValueError("l must be linear")
    n = F.nvars
    coeffs = [Fraction(0)] * n
    for exponents, coeff in l.terms.items():
        coeffs[exponents.index(1)] = coeff
    pivot = next(i for i in range(n) if coeffs[i] != 0)

    rest = [i for i in range(n) if i != pivot]
    if all(c == 0 for i, c in enumerate(coeffs) if i != pivot) and coeffs[pivot] == 1 and pivot == 0:
        transformed = F  # l is already the first coordinate
        new_to_old = tuple(
            tuple(Fraction(1) if j == k else Fraction(0) for j in range(n)) for k in range(n)
        )
        old_to_new = new_to_old
    else:
        # new coordinates: z_0 = l, z_k = x_{rest[k-1]}
        new_to_old = [list(coeffs)] + [
            [Fraction(1) if j == i else Fraction(0) for j in range(n)] for i in rest
        ]
        old_to_new = _invert_matrix(new_to_old)
        # rows of old_to_new express old variables in the z's already
        transformed = dp_substitute(F, old_to_new)
        new_to_old = tuple(tuple(r) for r in new_to_old)
        old_to_new = tuple(tuple(r) for r in old_to_new)
    record = ChangeOfBasis(old_to_new=old_to_new, new_to_old=new_to_old)
    return _drop_first(transformed), record


# -- parsing and printing -------------------------------------------------


class ParseError(ValueError):
    """Syntax error in polynomial text, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_SIDE_LETTER = {PRIMAL: "x", DUAL: "y"}


def parse(text: str, nvars: int, side: str = PRIMAL, base: int = 1, field=RATIONALS) -> Polynomial:
    """Parse `coeff ('*' factor)*` terms joined by '+'/'-' into a Polynomial.

    Variables are written x<k> (primal) or y<k> (dual) with indices starting
    at `base`; exponent syntax is x1^3.  Exponent vectors denote divided-power
    basis monomials, so repeated factors add exponents without coefficients.
    """
    letter = _SIDE_LETTER[side]
    pos = 0
    size = len(text)

    def skip_ws(p: int) -> int:
        while p < size and text[p].isspace():
            p += 1
        return p

    def read_int(p: int):
        start = p
        while p < size and text[p].isdigit():
            p += 1
        if p == start:
            raise ParseError("expected an integer", start)
        return int(text[start:p]), p

    terms: dict = {}
    pos = skip_ws(pos)
    if pos == size:
        raise ParseError("empty input", pos)
    sign = 1
    if text[pos] in "+-":
        sign = -1 if text[pos] == "-" else 1
        pos = skip_ws(pos + 1)
    while True:
        coeff = None
        exponents = [0] * nvars
        saw_factor = False
        while True:
            pos = skip_ws(pos)
            if pos < size and text[pos].isdigit():
                if coeff is not None or saw_factor:
                    raise ParseError("unexpected number", pos)
                num, pos = read_int(pos)
                den = 1
                if pos < size and text[pos] == "/":
                    den, pos = read_int(pos + 1)
                    if den == 0:
                        raise ParseError("division by zero in coefficient", pos)
                coeff = field(Fraction(num, den))
            elif pos < size and text[pos].isalpha():
                if text[pos] != letter:
                    raise ParseError(f"expected variable letter {letter!r}", pos)
                index, pos = read_int(pos + 1)
                index -= base
                if not 0 <= index < nvars:
                    raise ParseError(f"variable index out of range (nvars={nvars})", pos)
                exponent = 1
                if pos < size and text[pos] == "^":
                    exponent, pos = read_int(pos + 1)
                exponents[index] += exponent
                saw_factor = True
            else:
                raise ParseError("expected a coefficient or a variable", pos)
            pos = skip_ws(pos)
            if pos < size and text[pos] == "*":
                pos += 1
                continue
            break
        if coeff is None:
            coeff = field(1)
        key = tuple(exponents)
        terms[key] = terms.get(key, field.zero) + (coeff if sign > 0 else -coeff)
        pos = skip_ws(pos)
        if pos == size:
            break
        if text[pos] not in "+-":
            raise ParseError("expected '+' or '-'", pos)
        sign = -1 if text[pos] == "-" else 1
        pos = skip_ws(pos + 1)
        if pos == size:
            raise ParseError("dangling sign", pos)
    return Polynomial(nvars, terms, side)


def _monomial_str(exponents: Exponents, letter: str, base: int) -> str:
    parts = []
    for i, e in enumerate(exponents):
        if e == 0:
            continue
        parts.append(f"{letter}{i + base}" + (f"^{e}" if e > 1 else ""))
    return "*".join(parts)


def poly_str(f: Polynomial, base: int = 1) -> str:
    """Canonical rendering: descending grlex terms; round-trips with parse."""
    if f.is_zero():
        return "0"
    letter = _SIDE_LETTER[f.side]
    pieces = []
    for exponents, coeff in f.sorted_terms():
        mono = _monomial_str(exponents, letter, base)
        negative = isinstance(coeff, Fraction) and coeff < 0
        body = -coeff if negative else coeff
        if mono and body == 1:
            text = mono
        elif mono:
            text = f"{body}*{mono}"
        else:
            text = str(body)
        if not pieces:
            pieces.append(("-" if negative else "") + text)
        else:
            pieces.append(("- " if negative else "+ ") + text)
    return " ".join(pieces)
