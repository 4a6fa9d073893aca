"""Exhaustive generation of admissible Hilbert functions with decompositions.

A candidate for length l in n variables is a strictly positive Hilbert
function H with H(0) = H(d) = 1, H(1) <= n, sum l, satisfying Macaulay
growth, together with a symmetric decomposition whose every partial sum
Delta_{<= alpha} is again an O-sequence (zero tails allowed there).  Socle
degrees below 3 are excluded: such algebras cannot carry a cubic tail and
play no role in the dimension comparison.

The nonsmoothable filter encodes two known classification facts as
predicates: every local Gorenstein algebra of length <= 13 is smoothable,
and so is every one with Hilbert function (1,a,b,c,...) when b <= 5 and
c <= 2; at length exactly 14 the nonsmoothable ones all have Hilbert
function (1,6,6,1).
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .hilbert import HilbertFunction, SymmetricDecomposition
from .macaulay import is_o_sequence, macaulay_bound


@dataclass(frozen=True)
class DecompositionCandidate:
    """An admissible (H, Delta) pair at socle degree d."""

    hilbert: HilbertFunction
    decomposition: SymmetricDecomposition

    @property
    def d(self) -> int:
        return self.decomposition.d

    def sort_key(self):
        return (self.d, tuple(self.hilbert), self.decomposition.rows)

    def as_dict(self) -> dict:
        return {
            "H": list(self.hilbert),
            "deltas": [list(row) for row in self.decomposition.trimmed_rows()],
            "d": self.d,
        }


def nonsmoothable_filter(values) -> bool:
    """Whether H could belong to a nonsmoothable local Gorenstein algebra."""
    values = tuple(values)
    length = sum(values)
    if length < 14:
        return False
    b = values[2] if len(values) > 2 else 0
    c = values[3] if len(values) > 3 else 0
    if b <= 5 and c <= 2:
        return False
    if length == 14 and values != (1, 6, 6, 1):
        return False
    return True


def _hilbert_candidates(length: int, n: int, d: int):
    """Strictly positive Macaulay-admissible H of the given socle degree."""
    interior = length - 2
    slots = d - 1
    if slots == 0:
        if interior == 0:
            yield (1, 1)
        return
    if interior < slots:
        return

    def fill(prefix, remaining, index):
        if index == slots:
            if remaining == 0:
                yield tuple(prefix)
            return
        low = 1
        high = remaining - (slots - index - 1)
        if index == 0:
            high = min(high, n)
        else:
            high = min(high, macaulay_bound(prefix[-1], index))
        for v in range(low, high + 1):
            prefix.append(v)
            yield from fill(prefix, remaining - v, index + 1)
            prefix.pop()

    for middle in fill([], interior, 0):
        h = (1,) + middle + (1,)
        if is_o_sequence(h, strictly_positive=True):
            yield h


def _symmetric_rows(d: int, a: int, ceiling):
    """All symmetric candidate rows Delta_a bounded entrywise by `ceiling`."""
    width = d - a
    free = width // 2  # indices 1..free determine the row
    if free == 0:
        yield (0,) * (d + 1)
        return
    ranges = []
    for i in range(1, free + 1):
        mirror = width - i
        ranges.append(range(min(ceiling[i], ceiling[mirror]) + 1))
    for values in itertools.product(*ranges):
        row = [0] * (d + 1)
        for i, v in enumerate(values, start=1):
            row[i] = v
            row[width - i] = v
        yield tuple(row)


def _decompositions_for(h: tuple):
    """All valid symmetric decompositions of a fixed Hilbert function."""
    d = len(h) - 1
    results = []

    def descend(a: int, remainder: tuple, chosen: list):
        if a == 0:
            row0 = remainder
            if row0[0] != 1 or row0[d] != 1:
                return
            if any(row0[i] != row0[d - i] for i in range(d + 1)):
                return
            rows = [row0] + list(reversed(chosen))
            results.append(SymmetricDecomposition(d=d, rows=tuple(rows)))
            return
        for row in _symmetric_rows(d, a, remainder):
            new_remainder = tuple(r - v for r, v in zip(remainder, row))
            if any(v < 0 for v in new_remainder):
                continue
            if not is_o_sequence(new_remainder):
                continue
            chosen.append(row)
            descend(a - 1, new_remainder, chosen)
            chosen.pop()

    if d <= 1:
        # degenerate socle degrees: the single row equals H
        results.append(SymmetricDecomposition(d=d, rows=(h,)))
        return results
    descend(d - 2, h, [])
    return results


def admissible_decompositions(
    length: int,
    n: int,
    nonsmoothable_only: bool = False,
    threads: int = 1,
) -> list:
    """All admissible (H, Delta) candidates of the given length.

    Complete and duplicate-free over socle degrees 3 <= d <= length - 1,
    sorted by socle degree, then H lexicographically, then the row matrix
    lexicographically.
    """
    if length < 1 or n < 1:
        raise ValueError("length and n must be positive")
    hs = []
    for d in range(3, length):
        for h in _hilbert_candidates(length, n, d):
            if nonsmoothable_only and not nonsmoothable_filter(h):
                continue
            hs.append(h)

    def expand(h):
        return [
            DecompositionCandidate(HilbertFunction(h), dec)
            for dec in _decompositions_for(h)
        ]

    if threads > 1 and len(hs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            groups = list(pool.map(expand, hs))
    else:
        groups = [expand(h) for h in hs]
    candidates = [c for group in groups for c in group]
    candidates.sort(key=DecompositionCandidate.sort_key)
    return candidates
