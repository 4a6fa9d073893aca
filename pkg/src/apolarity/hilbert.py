"""Hilbert functions of apolar algebras and their symmetric decompositions.

The Hilbert function is read off the degree filtration of Diff(f):
H(i) = dim Diff(f)_i - dim Diff(f)_{i-1}, indexed by partial degree.

The symmetric decomposition splits H into rows Delta_a, a = 0..d-2, where
Delta_a(i) counts partials of degree i and order d-a-i modulo the adjacent
filtration steps.  With M(i, j) = dim(Diff(f)_i ∩ O_j) the exact value is

    Delta_a(i) = [M(i, j) - M(i, j+1)] - [M(i-1, j) - M(i-1, j+1)],
    j = d - a - i,

the rank form of the successive quotients C_a / C_{a+1} of the Loewy/
m-adic double filtration.  Dropping the second bracket (the naive quotient
of partials of degree <= i by lower-degree and lower-level ones) would
overcount: a partial of low degree and low order would be charged to every
larger i as well.  Each row is symmetric about (d - a) / 2, and the rows
sum to H.
"""

from __future__ import annotations

from dataclasses import dataclass

from .apolar import FilteredSpace, diff_space
from .poly import ChangeOfBasis, Polynomial, dp_substitute
from fractions import Fraction


@dataclass(frozen=True)
class HilbertFunction:
    """Values (H(0), ..., H(d)) of the Hilbert function; d = socle degree."""

    values: tuple

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise ValueError("empty Hilbert function")
        if values[0] != 1:
            raise ValueError("H(0) must be 1")
        if values[-1] != 1:
            raise ValueError("H(d) must be 1")
        if any(v < 1 for v in values):
            raise ValueError("H must be positive through the socle degree")

    @property
    def socle_degree(self) -> int:
        return len(self.values) - 1

    @property
    def length(self) -> int:
        return sum(self.values)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.values):
            return self.values[i]
        return 0

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"


def hilbert_function(f: Polynomial) -> HilbertFunction:
    """Hilbert function of the apolar algebra of f, by partial degree."""
    if f.is_zero():
        raise ValueError("Hilbert function of the zero polynomial is undefined")
    return HilbertFunction(diff_space(f).hilbert_values())


@dataclass(frozen=True)
class SymmetricDecomposition:
    """Rows Delta_a, a = 0..max(d-2, 0), each of length d+1, summing to H."""

    d: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        expected = max(self.d - 1, 1)
        if len(rows) != expected:
            raise ValueError(f"expected {expected} rows for socle degree {self.d}")
        for a, row in enumerate(rows):
            if len(row) != self.d + 1:
                raise ValueError("each row must have d+1 entries")
            if any(v < 0 for v in row):
                raise ValueError("negative entry in a decomposition row")
            for i in range(self.d + 1):
                mirrored = self.d - a - i
                other = row[mirrored] if 0 <= mirrored <= self.d else 0
                if i > self.d - a:
                    if row[i] != 0:
                        raise ValueError(f"row {a} has support beyond index {self.d - a}")
                elif row[i] != other:
                    raise ValueError(f"row {a} is not symmetric about {(self.d - a) / 2}")
            if a >= 1 and row[0] != 0:
                raise ValueError("rows a >= 1 must vanish at index 0")
        if rows[0][0] != 1 or rows[0][self.d] != 1:
            raise ValueError("row 0 must start and end with 1")

    def row(self, a: int) -> tuple:
        if 0 <= a < len(self.rows):
            return self.rows[a]
        return (0,) * (self.d + 1)

    def entry(self, a: int, i: int) -> int:
        if 0 <= a < len(self.rows) and 0 <= i <= self.d:
            return self.rows[a][i]
        return 0

    def hilbert(self) -> HilbertFunction:
        return HilbertFunction(tuple(sum(col) for col in zip(*self.rows)))

    def trimmed_rows(self) -> list:
        """Rows cut to their support range 0..d-a."""
        return [row[: self.d - a + 1] for a, row in enumerate(self.rows)]

    def nonzero_rows(self) -> list:
        """(a, trimmed row) for the rows that are not identically zero."""
        return [(a, row) for a, row in enumerate(self.trimmed_rows()) if any(row)]

    def arrow_str(self) -> str:
        """Compact `H -> row, row` rendering, nonzero rows only."""
        h = ",".join(str(v) for v in self.hilbert())
        rows = ",".join("(" + ",".join(str(v) for v in row) + ")"
                        for _, row in self.nonzero_rows())
        return f"({h}) -> {rows}"


def _delta_value(space: FilteredSpace, a: int, i: int) -> int:
    d = space.socle_degree
    j = d - a - i
    upper = space.m_table(i, j) - space.m_table(i, j + 1)
    lower = space.m_table(i - 1, j) - space.m_table(i - 1, j + 1)
    return upper - lower


def symmetric_decomposition(f: Polynomial) -> SymmetricDecomposition:
    """Symmetric decomposition of the Hilbert function of the algebra of f."""
    if f.is_zero():
        raise ValueError("decomposition of the zero polynomial is undefined")
    space = diff_space(f)
    d = space.socle_degree
    rows = []
    for a in range(max(d - 1, 1)):
        rows.append(tuple(_delta_value(space, a, i) for i in range(d + 1)))
    decomposition = SymmetricDecomposition(d=d, rows=tuple(rows))
    if tuple(decomposition.hilbert()) != space.hilbert_values():
        raise AssertionError("decomposition rows do not sum to the Hilbert function")
    return decomposition


def embedding_dims(decomposition: SymmetricDecomposition) -> tuple:
    """Partial sums n_i = sum_{a <= i} Delta_a(1), i = 0..d-2."""
    out = []
    total = 0
    for a in range(max(decomposition.d - 1, 1)):
        total += decomposition.entry(a, 1)
        out.append(total)
    return tuple(out)


def adapt_coordinates(f: Polynomial):
    """Change coordinates so the order flag on linear partials is standard.

    After the substitution, the degree-1 partials of order >= d-1-a span
    exactly the first n_a variables, for every a.  Trailing variables that
    no longer occur are removed and counted on the returned ChangeOfBasis.
    Variables outside the linear-partial span can still occur: they enter
    through hidden-variable summands and no linear change eliminates them.
    """
    if f.is_zero():
        raise ValueError("cannot adapt the zero polynomial")
    space = diff_space(f)
    d = space.socle_degree
    n = f.nvars
    chosen: list = []

    def reduce_row(vec):
        out = list(vec)
        for row in chosen:
            pivot = next(i for i, c in enumerate(row) if c != 0)
            if out[pivot] != 0:
                factor = out[pivot]
                out = [x - factor * y for x, y in zip(out, row)]
        return out

    for a in range(max(d - 1, 1)):
        for vec in space.linear_partials(d - 1 - a):
            rem = reduce_row(vec)
            if any(c != 0 for c in rem):
                pivot = next(i for i, c in enumerate(rem) if c != 0)
                inv = rem[pivot]
                chosen.append([c / inv for c in rem])
    used_pivots = {next(i for i, c in enumerate(row) if c != 0) for row in chosen}
    for i in range(n):
        if i not in used_pivots and len(chosen) < n:
            unit = [Fraction(0)] * n
            unit[i] = Fraction(1)
            rem = reduce_row(unit)
            if any(c != 0 for c in rem):
                pivot = next(k for k, c in enumerate(rem) if c != 0)
                inv = rem[pivot]
                chosen.append([c / inv for c in rem])
    if len(chosen) != n:
        raise AssertionError("could not complete the linear-partial flag to a basis")
    new_to_old = [list(row) for row in chosen]
    old_to_new = _invert(new_to_old)
    adapted = dp_substitute(f, old_to_new)
    kept = 0
    for exponents in adapted.terms:
        for index in range(n - 1, kept - 1, -1):
            if exponents[index]:
                kept = index + 1
                break
    dropped = n - kept
    if dropped:
        adapted = adapted.restrict(kept)
    change = ChangeOfBasis(
        old_to_new=tuple(tuple(r) for r in old_to_new),
        new_to_old=tuple(tuple(r) for r in new_to_old),
        dropped=dropped,
    )
    return adapted, change


def _invert(rows):
    from .poly import _invert_matrix

    return _invert_matrix(rows)
