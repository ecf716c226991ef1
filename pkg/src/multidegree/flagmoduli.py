"""Closed-form multidegree supports for complete flag varieties and for
the iterated Keel-Tevelev embedding of the moduli of stable rational
curves.

The flag support comes from the rank function S(J) counting the
dimension of the partial flag variety selected by J; that route is the
ground truth here.  The shorter printed inequality system is also
implemented verbatim, as a comparator only: a literal reading of it
disagrees with the rank route already at p = 2, and the comparator
report surfaces rather than hides that.
"""

from __future__ import annotations

from math import comb
from typing import Sequence

from .errors import ValidationError
from .polymatroid import RankFunction, Support, msupp_from_rank


def flag_rank_function(p: int) -> RankFunction:
    """r(J) = sum over i<j of d_i d_j for the gap sizes d of J in [p],
    the dimension of the partial flag variety of the subspace sizes J."""
    if p < 1:
        raise ValidationError("p must be at least 1")
    values = []
    for mask in range(1 << p):
        chosen = [j + 1 for j in range(p) if mask >> j & 1]
        cuts = [0] + chosen + [p + 1]
        gaps = [cuts[k + 1] - cuts[k] for k in range(len(cuts) - 1)]
        values.append(
            sum(
                gaps[i] * gaps[j]
                for i in range(len(gaps))
                for j in range(i + 1, len(gaps))
            )
        )
    return RankFunction(p, values)


def flag_msupp(p: int) -> Support:
    """Multidegree support of the Pluecker-embedded complete flag variety."""
    return msupp_from_rank(flag_rank_function(p))


def flag_simple_inequalities(p: int, n: Sequence[int]) -> bool:
    """Literal evaluation of the printed inequality system:

        1 <= n_k <= sum_{j=1..k}(p-j) - sum_{i<k} n_i   for all k,
        |n| = binom(p+1, 2).

    Kept verbatim for cross-checking against flag_msupp; no corrected
    index convention is guessed.
    """
    if p < 1:
        raise ValidationError("p must be at least 1")
    vec = [int(x) for x in n]
    if len(vec) != p:
        raise ValidationError(f"expected a vector of length {p}")
    if sum(vec) != comb(p + 1, 2):
        return False
    for k in range(1, p + 1):
        upper = sum(p - j for j in range(1, k + 1)) - sum(vec[: k - 1])
        if not 1 <= vec[k - 1] <= upper:
            return False
    return True


def flag_comparator_report(p: int) -> dict:
    """Pointwise comparison of the rank-route support with the literal
    inequality system, over all compositions of binom(p+1, 2)."""
    support = flag_msupp(p)
    members = set(support.points)
    weight = comb(p + 1, 2)
    only_rank = []
    only_literal = []
    literal_count = 0
    for point in _compositions(weight, p):
        in_rank = point in members
        in_literal = flag_simple_inequalities(p, point)
        literal_count += in_literal
        if in_rank and not in_literal:
            only_rank.append(point)
        elif in_literal and not in_rank:
            only_literal.append(point)
    return {
        "p": p,
        "count_rank_route": len(members),
        "count_literal_route": literal_count,
        "agree": not only_rank and not only_literal,
        "only_rank_route": [list(pt) for pt in only_rank],
        "only_literal_route": [list(pt) for pt in only_literal],
    }


def _compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


def m0n_rank_function(p: int) -> RankFunction:
    """r(J) = max(J), the projection dimensions of the iterated
    Keel-Tevelev embedding of the (p+3)-pointed rational curves."""
    if p < 1:
        raise ValidationError("p must be at least 1")
    values = []
    for mask in range(1 << p):
        chosen = [j + 1 for j in range(p) if mask >> j & 1]
        values.append(max(chosen) if chosen else 0)
    return RankFunction(p, values)


def m0n_msupp(p: int) -> Support:
    """Multidegree support of the moduli embedding; its size is the
    p-th Catalan number."""
    return msupp_from_rank(m0n_rank_function(p))
