"""Permutations, Schubert polynomials, Rothe diagrams, and the theta
statistic that carries their projection data.

Schubert polynomials follow the divided-difference recursion: the
longest permutation gets prod_i t_i^(p-i), and an ascent at position i
(one-line entries increasing there) is resolved by swapping the two
positions and applying the i-th divided difference.  Rows and columns
of diagrams are 1-indexed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import ValidationError
from .poly import IntPolynomial
from .polymatroid import RankFunction, Support, msupp_from_rank, validate_rank_function


@dataclass(frozen=True)
class Permutation:
    """Permutation of [p] in one-line notation (1-indexed values)."""

    p: int
    one_line: tuple[int, ...]

    def __init__(self, one_line: Iterable[int]):
        entries = tuple(int(x) for x in one_line)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValidationError(f"{entries} is not a permutation of 1..{len(entries)}")
        object.__setattr__(self, "p", len(entries))
        object.__setattr__(self, "one_line", entries)

    @classmethod
    def identity(cls, p: int) -> "Permutation":
        return cls(range(1, p + 1))

    @classmethod
    def longest(cls, p: int) -> "Permutation":
        return cls(range(p, 0, -1))

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.p:
            raise ValidationError(f"position {i} out of range 1..{self.p}")
        return self.one_line[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.p
        for i, v in enumerate(self.one_line, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def swap_positions(self, i: int) -> "Permutation":
        """Exchange the entries at positions i and i+1."""
        if not 1 <= i < self.p:
            raise ValidationError(f"position {i} out of range 1..{self.p - 1}")
        entries = list(self.one_line)
        entries[i - 1], entries[i] = entries[i], entries[i - 1]
        return Permutation(entries)

    def ascents(self) -> list[int]:
        """Positions i with entry(i) < entry(i+1)."""
        return [
            i for i in range(1, self.p) if self.one_line[i - 1] < self.one_line[i]
        ]

    def to_json_dict(self) -> dict:
        return {"p": self.p, "one_line": list(self.one_line)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Permutation":
        if not isinstance(data, dict) or "one_line" not in data:
            raise ValidationError("permutation JSON needs 'one_line'")
        perm = cls(data["one_line"])
        if "p" in data and int(data["p"]) != perm.p:
            raise ValidationError("permutation JSON 'p' disagrees with 'one_line'")
        return perm


def length(pi: Permutation) -> int:
    """Number of inversions."""
    entries = pi.one_line
    return sum(
        1
        for i in range(pi.p)
        for j in range(i + 1, pi.p)
        if entries[i] > entries[j]
    )


@lru_cache(maxsize=None)
def _schubert_cached(one_line: tuple[int, ...]) -> IntPolynomial:
    p = len(one_line)
    pi = Permutation(one_line)
    ascents = pi.ascents()
    if not ascents:
        # longest permutation: prod_i t_i^(p-i)
        return IntPolynomial.monomial(p, tuple(p - i for i in range(1, p + 1)))
    i = ascents[0]
    higher = _schubert_cached(pi.swap_positions(i).one_line)
    return higher.divided_difference(i)


def schubert_polynomial(pi: Permutation) -> IntPolynomial:
    """Schubert polynomial in p variables, by the ascent recursion.

    The result is independent of which ascent is resolved first; the
    implementation always takes the smallest for determinism.
    """
    return _schubert_cached(pi.one_line)


@dataclass(frozen=True)
class Diagram:
    """Subset of the p x p grid; cells are (row, col), 1-indexed."""

    p: int
    cells: frozenset[tuple[int, int]]

    def __init__(self, p: int, cells: Iterable[tuple[int, int]]):
        cell_set = frozenset((int(r), int(c)) for r, c in cells)
        for r, c in cell_set:
            if not (1 <= r <= p and 1 <= c <= p):
                raise ValidationError(f"cell ({r},{c}) outside the {p}x{p} grid")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "cells", cell_set)

    def to_json_dict(self) -> dict:
        return {"p": self.p, "cells": [list(c) for c in sorted(self.cells)]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Diagram":
        if not isinstance(data, dict) or "p" not in data or "cells" not in data:
            raise ValidationError("diagram JSON needs 'p' and 'cells'")
        return cls(int(data["p"]), [tuple(c) for c in data["cells"]])


def rothe_diagram(pi: Permutation) -> Diagram:
    """Cells (i, j) with pi(i) > j and pi^{-1}(j) > i."""
    inv = pi.inverse()
    cells = [
        (i, j)
        for i in range(1, pi.p + 1)
        for j in range(1, pi.p + 1)
        if pi(i) > j and inv(j) > i
    ]
    return Diagram(pi.p, cells)


def theta(d: Diagram, subset: Iterable[int]) -> int:
    """Column-word statistic: matched "()" pairs plus stars, summed over columns.

    Reading column c top to bottom: a row r contributes "(" if the cell
    is absent and r is in the subset, ")" if the cell is present and r
    is outside, and a star if the cell is present and r is inside.
    """
    members = set()
    for r in subset:
        if not 1 <= r <= d.p:
            raise ValidationError(f"row {r} outside 1..{d.p}")
        members.add(r)
    total = 0
    for c in range(1, d.p + 1):
        open_count = 0
        matched = 0
        stars = 0
        for r in range(1, d.p + 1):
            in_diagram = (r, c) in d.cells
            in_subset = r in members
            if in_diagram and in_subset:
                stars += 1
            elif in_diagram:
                if open_count > 0:
                    open_count -= 1
                    matched += 1
            elif in_subset:
                open_count += 1
        total += matched + stars
    return total


def theta_rank_function(d: Diagram) -> RankFunction:
    """Table of theta over all subsets of [p]."""
    p = d.p
    values = [
        theta(d, [j + 1 for j in range(p) if mask >> j & 1]) for mask in range(1 << p)
    ]
    return RankFunction(p, values)


def schubert_support_polytope(pi: Permutation) -> Support:
    """Multidegree support of the matrix Schubert variety, in n-coordinates.

    The support is cut out by sum_{j in J} ((p-1) - n_j) <= theta(J)
    with equality on the full set; substituting m = (p-1)*1 - n turns
    theta into the rank function of the exponent polytope, so the
    n-points come from the complementary rank function

        r'(J) = (p-1)|J| - theta([p]) + theta([p] \\ J).

    Use Support.complement(p-1) for the exponent-coordinate view.
    """
    p = pi.p
    rho = theta_rank_function(rothe_diagram(pi))
    full = rho.full_mask
    values = [
        (p - 1) * bin(mask).count("1") - rho.values[full] + rho.values[full ^ mask]
        for mask in range(1 << p)
    ]
    comp = RankFunction(p, values)
    report = validate_rank_function(comp)
    if not report.valid:
        raise AssertionError(
            "complementary theta rank of a Rothe diagram must be submodular; "
            f"violation: {report.violations[0]}"
        )
    return msupp_from_rank(comp)


def projection_codim(pi: Permutation, subset: Iterable[int]) -> int:
    """theta([p]) - theta([p] \\ subset): codimension of the projection
    of the matrix Schubert variety onto the rows in the subset."""
    rho = theta_rank_function(rothe_diagram(pi))
    mask = 0
    for j in subset:
        if not 1 <= j <= pi.p:
            raise ValidationError(f"element {j} outside ground set 1..{pi.p}")
        mask |= 1 << (j - 1)
    full = rho.full_mask
    return rho.values[full] - rho.values[full ^ mask]
