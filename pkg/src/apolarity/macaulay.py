"""Binomial expansions, the Macaulay growth bound, and O-sequence tests."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class BinomialExpansion:
    """Greedy i-binomial expansion: value = sum C(m_k, k), m_i > ... > m_j >= j >= 1."""

    i: int
    terms: tuple  # pairs (m_k, k), k descending from i

    def value(self) -> int:
        return sum(comb(m, k) for m, k in self.terms)


def binomial_expansion(value: int, i: int) -> BinomialExpansion:
    """The unique greedy i-binomial expansion of a nonnegative integer."""
    if value < 0:
        raise ValueError("value must be nonnegative")
    if i < 1:
        raise ValueError("i must be positive")
    terms = []
    remaining = value
    k = i
    while remaining > 0 and k >= 1:
        m = k
        while comb(m + 1, k) <= remaining:
            m += 1
        terms.append((m, k))
        remaining -= comb(m, k)
        k -= 1
    if remaining != 0:
        raise AssertionError("greedy expansion failed to terminate")
    return BinomialExpansion(i=i, terms=tuple(terms))


def macaulay_bound(value: int, i: int) -> int:
    """Largest admissible next value after `value` in degree i.

    Shifts every term of the i-binomial expansion: sum C(m_k + 1, k + 1).
    """
    expansion = binomial_expansion(value, i)
    return sum(comb(m + 1, k + 1) for m, k in expansion.terms)


def is_o_sequence(values, strictly_positive: bool = False) -> bool:
    """Whether a sequence satisfies H(0) = 1 and the Macaulay growth condition.

    Growth from a zero value forces zero, so internal zeros followed by
    nonzero values are rejected in either mode.  With `strictly_positive`,
    zero values are rejected outright (the socle-degree Hilbert-function
    mode); without it, zero tails are allowed (partial-sum mode).
    """
    values = list(values)
    if not values:
        return False
    if values[0] != 1:
        return False
    if any(v < 0 for v in values):
        return False
    if strictly_positive and any(v == 0 for v in values):
        return False
    seen_zero = False
    for i in range(1, len(values)):
        if values[i] == 0:
            seen_zero = True
            continue
        if seen_zero:
            return False
        if i >= 2 and values[i] > macaulay_bound(values[i - 1], i - 1):
            return False
    return True
