"""Spaces of partials, annihilator ideals, apolarity checks, local schemes.

Diff(f) is the closure of {f} under contraction by the dual variables.  It
carries two filtrations:

* degree: Diff(f)_i = partials of degree <= i, read off the row-echelon
  basis because pivots are grlex-greatest monomials;
* order: O_j = span of contractions of f by dual monomials of degree >= j,
  built level by level from j = deg f down to 0.

The intersection dimensions M(i, j) = dim(Diff(f)_i  ∩ O_j) are recorded
while the order filtration is built (at the moment level j completes, the
rows with pivot degree <= i span exactly the intersection) and feed the
symmetric decomposition of the Hilbert function.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .linalg import MonomialSpan, WitnessSpan
from .poly import (
    DUAL,
    PRIMAL,
    ChangeOfBasis,
    Polynomial,
    contract,
    dehomogenize,
    grlex_key,
    homogenize,
    monomials_up_to,
    poly_str,
)


def _contract_terms(terms: dict, var: int) -> dict:
    """Contraction of a term dict by the single dual variable y_{var}."""
    out = {}
    for exponents, coeff in terms.items():
        if exponents[var]:
            shifted = exponents[:var] + (exponents[var] - 1,) + exponents[var + 1 :]
            out[shifted] = coeff
    return out


def _monomial_contract(terms: dict, alpha: tuple) -> dict:
    out = {}
    for beta, coeff in terms.items():
        if all(b >= a for b, a in zip(beta, alpha)):
            out[tuple(b - a for b, a in zip(beta, alpha))] = coeff
    return out


class FilteredSpace:
    """Row-reduced basis of Diff(f) with its degree and order filtrations."""

    def __init__(self, f: Polynomial):
        if f.side != PRIMAL:
            raise ValueError("diff_space expects a primal polynomial")
        if f.is_zero():
            raise ValueError("diff_space of the zero polynomial is undefined")
        self.polynomial = f
        self.nvars = f.nvars
        self.socle_degree = f.degree()
        self._span = MonomialSpan()
        self._closure()
        order = sorted(range(self._span.dim),
                       key=lambda i: grlex_key(self._span.pivots[i]), reverse=True)
        self._rows = [self._span.rows[i] for i in order]
        self._pivots = [self._span.pivots[i] for i in order]
        self.degrees = tuple(sum(p) for p in self._pivots)
        self.dim = len(self._rows)
        self._levels = None  # built on demand: order filtration data
        self._orders = None

    # -- phase 1: contraction closure ----------------------------------

    def _closure(self):
        span = self._span
        queue = [dict(self.polynomial.terms)]
        span.insert(queue[0])
        head = 0
        while head < len(queue):
            current = queue[head]
            head += 1
            for var in range(self.nvars):
                image = _contract_terms(current, var)
                if not image:
                    continue
                index = span.insert(image)
                if index is not None:
                    queue.append(dict(span.rows[index]))

    # -- public views ----------------------------------------------------

    @property
    def monomials(self) -> tuple:
        """All monomials spanning the basis rows, grlex descending."""
        seen = set()
        for row in self._rows:
            seen.update(row)
        return tuple(sorted(seen, key=grlex_key, reverse=True))

    @property
    def rows(self) -> tuple:
        """Basis partials as polynomials, pivot-descending (RREF order)."""
        return tuple(Polynomial(self.nvars, row, PRIMAL) for row in self._rows)

    def matrix(self):
        """Coefficient rows aligned with `monomials` (one row per partial)."""
        cols = {m: i for i, m in enumerate(self.monomials)}
        out = []
        for row in self._rows:
            vec = [0] * len(cols)
            for m, c in row.items():
                vec[cols[m]] = c
            out.append(vec)
        return out

    def contains(self, g: Polynomial) -> bool:
        if g.nvars != self.nvars or g.side != PRIMAL:
            return False
        return self._span.contains(dict(g.terms))

    def degree_dimension(self, i: int) -> int:
        """dim Diff(f)_i, the partials of degree at most i."""
        return sum(1 for d in self.degrees if d <= i)

    def hilbert_values(self) -> tuple:
        values = [0] * (self.socle_degree + 1)
        for d in self.degrees:
            values[d] += 1
        return tuple(values)

    # -- phase 2: order filtration ----------------------------------------

    def _ensure_levels(self):
        if self._levels is not None:
            return
        f_terms = dict(self.polynomial.terms)
        divisors = set()
        for beta in f_terms:
            for alpha in itertools.product(*(range(b + 1) for b in beta)):
                divisors.add(alpha)
        by_level: dict[int, list] = {}
        for alpha in divisors:
            by_level.setdefault(sum(alpha), []).append(alpha)
        span = MonomialSpan()
        levels = {}
        top = self.socle_degree
        for j in range(top, -1, -1):
            for alpha in sorted(by_level.get(j, ()), reverse=True):
                image = _monomial_contract(f_terms, alpha)
                if image:
                    span.insert(image)
            levels[j] = {
                "rows": span.snapshot(),
                "lead_degrees": sorted(sum(p) for p in span.pivots),
            }
        if span.dim != self.dim:
            raise AssertionError("order filtration does not exhaust Diff(f)")
        self._levels = levels

    def order_dimension(self, j: int) -> int:
        """dim O_j, the partials of order at least j."""
        if j <= 0:
            return self.dim
        if j > self.socle_degree:
            return 0
        self._ensure_levels()
        return len(self._levels[j]["lead_degrees"])

    def m_table(self, i: int, j: int) -> int:
        """dim (Diff(f)_i  ∩ O_j) for the degree/order double filtration."""
        if i < 0:
            return 0
        if j > self.socle_degree:
            return 0
        j = max(j, 0)
        self._ensure_levels()
        degrees = self._levels[j]["lead_degrees"]
        return sum(1 for d in degrees if d <= i)

    def order_level_rows(self, j: int) -> list:
        """Echelon basis rows of O_j (term dicts, copies)."""
        self._ensure_levels()
        if j > self.socle_degree:
            return []
        return [dict(r) for r in self._levels[max(j, 0)]["rows"]]

    def linear_partials(self, j: int) -> list:
        """Variable-coefficient rows spanning degree-1 partials of order >= j.

        The constant row is excluded; full reduction guarantees degree-1
        rows carry no constant term.
        """
        out = []
        for row in self.order_level_rows(j):
            pivot = max(row, key=grlex_key)
            if sum(pivot) == 1:
                vec = [0] * self.nvars
                for m, c in row.items():
                    vec[m.index(1)] = c
                out.append(vec)
        return out

    @property
    def orders(self) -> tuple:
        """Order of each basis row: the largest j with the row inside O_j."""
        if self._orders is None:
            self._ensure_levels()
            spans = {}
            for j in range(self.socle_degree, -1, -1):
                span = MonomialSpan()
                for row in self._levels[j]["rows"]:
                    span.insert(dict(row))
                spans[j] = span
            orders = []
            for row in self._rows:
                order = 0
                for j in range(self.socle_degree, 0, -1):
                    if spans[j].contains(row):
                        order = j
                        break
                orders.append(order)
            self._orders = tuple(orders)
        return self._orders


def diff_space(f: Polynomial) -> FilteredSpace:
    """The space of all partials of f, with its filtrations."""
    return FilteredSpace(f)


def apolar_length(f: Polynomial) -> int:
    """dim_K Diff(f); 0 for the zero polynomial."""
    if f.is_zero():
        return 0
    return FilteredSpace(f).dim


def _unit_like(f: Polynomial):
    """Multiplicative unit matching the coefficient field of f."""
    coeff = next(iter(f.terms.values()))
    return coeff / coeff


def annihilator_generators(f: Polynomial, max_degree: int) -> list:
    """Basis of the dual polynomials of degree <= max_degree that kill f.

    Returns the kernel of the contraction map from the span of dual
    monomials of degree <= max_degree to Diff(f), row-reduced: each basis
    element has a distinct leading dual monomial with coefficient 1.
    """
    if f.is_zero():
        raise ValueError("annihilator of the zero polynomial is the whole ring")
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    span = WitnessSpan()
    kernel = []
    f_terms = dict(f.terms)
    one = _unit_like(f)
    for alpha in monomials_up_to(f.nvars, max_degree):
        image = _monomial_contract(f_terms, alpha)
        if not image:
            kernel.append({alpha: one})
            continue
        _, relation = span.insert(image, alpha)
        if relation is not None:
            kernel.append(relation)
    return [Polynomial(f.nvars, vec, DUAL) for vec in kernel]


def annihilator_stabilized(f: Polynomial, max_degree: int, generators=None) -> bool:
    """Whether the kernel up to max_degree already cuts out Diff(f).

    True when the count of dual monomials of degree <= max_degree minus the
    kernel dimension equals dim Diff(f); beyond that degree every dual
    monomial contracts f to 0 and the kernel gains nothing new.
    """
    if generators is None:
        generators = annihilator_generators(f, max_degree)
    total = sum(1 for _ in monomials_up_to(f.nvars, max_degree))
    return total - len(generators) == apolar_length(f)


def representative_operator(f: Polynomial, target: Polynomial, min_order: int = 0):
    """A dual polynomial psi with psi(f) = target and order >= min_order.

    Searches the span of contractions of f by dual monomials of degree
    >= min_order; returns None when the target is not reachable there.
    """
    span = WitnessSpan()
    f_terms = dict(f.terms)
    top = f.degree()
    if top == float("-inf"):
        raise ValueError("f must be nonzero")
    for alpha in monomials_up_to(f.nvars, int(top)):
        if sum(alpha) < min_order:
            continue
        image = _monomial_contract(f_terms, alpha)
        if image:
            span.insert(image, alpha)
    combo = span.solve(dict(target.terms))
    if combo is None:
        return None
    return Polynomial(f.nvars, combo, DUAL)


def is_apolar(generators, F: Polynomial) -> bool:
    """Whether every generator, and its ideal multiples up to deg F, kills F.

    Generators must be homogeneous dual polynomials.  Ideal membership
    above deg F is automatic, so multiplying by dual monomials of degree up
    to deg F - deg g suffices.
    """
    if F.side != PRIMAL:
        raise ValueError("is_apolar expects a primal form")
    if F.is_zero():
        return True
    d = int(F.degree())
    for g in generators:
        if g.side != DUAL:
            raise ValueError("generators must be dual polynomials")
        if not g.is_homogeneous():
            raise ValueError(f"generator {poly_str(g)} is not homogeneous")
        if g.nvars != F.nvars:
            raise ValueError("variable count mismatch")
        if g.is_zero():
            continue
        if not contract(g, F).is_zero():
            return False
        budget = d - int(g.degree())
        for m in monomials_up_to(F.nvars, max(budget, 0)):
            if sum(m) == 0:
                continue
            product = Polynomial.monomial(m, _unit_like(g), DUAL) * g
            if not contract(product, F).is_zero():
                return False
    return True


@dataclass(frozen=True)
class ApolarScheme:
    """Local apolar scheme at a chosen linear support form."""

    defining: Polynomial
    length: int
    hilbert: tuple
    support: Polynomial
    annihilator: tuple
    apolarity_checked: bool
    stabilized: bool
    change: ChangeOfBasis = field(repr=False, default=None)

    def as_dict(self, base: int = 1) -> dict:
        return {
            "length": self.length,
            "hilbert": list(self.hilbert),
            "annihilator": [poly_str(g, base=base) for g in self.annihilator],
            "apolarity_checked": self.apolarity_checked,
            "stabilized": self.stabilized,
        }


def local_scheme(F: Polynomial, l: Polynomial) -> ApolarScheme:
    """Natural apolar scheme of the form F supported at [l].

    Dehomogenizes F at l, computes length, Hilbert function, and the
    annihilator up to degree deg F + 1, and verifies that the homogenized
    annihilator elements are apolar to the (coordinate-changed) form.
    """
    if F.is_zero():
        raise ValueError("F must be nonzero")
    f, change = dehomogenize(F, l)
    if f.is_zero():
        raise ValueError("dehomogenization vanished; F is not homogeneous of its degree")
    space = FilteredSpace(f)
    max_degree = int(F.degree()) + 1
    generators = annihilator_generators(f, max_degree)
    # apolarity is checked against F rewritten in the coordinates where l
    # is the first variable; the scheme data itself is coordinate-free
    transformed = change.apply(F)
    homogenized = [homogenize(g, int(g.degree())) for g in generators if not g.is_zero()]
    checked = is_apolar(homogenized, transformed)
    return ApolarScheme(
        defining=f,
        length=space.dim,
        hilbert=space.hilbert_values(),
        support=l,
        annihilator=tuple(generators),
        apolarity_checked=checked,
        stabilized=annihilator_stabilized(f, max_degree, generators),
        change=change,
    )
