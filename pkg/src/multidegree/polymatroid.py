"""Rank functions, discrete polymatroids, and M-convex sets.

A rank function on the ground set [p] = {1, ..., p} is stored densely:
``values[mask]`` is the rank of the subset encoded by the bitmask
``mask`` (bit j-1 set means element j is in the subset).  The dense
table caps p at 20; every example in this problem domain is far below
that.

The central operation is the enumeration of the lattice points

    { n in N^p :  sum_{j in J} n_j <= r(J) for all proper J,
                  sum_j n_j = r([p]) }

for a valid rank function r.  These are the points whose multidegree is
positive, and they form the lattice points of a base polymatroid
polytope (equivalently, an M-convex set).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import UnsupportedSizeError, ValidationError
from .linalg import is_prime, rank_mod_p, rank_rational

MAX_GROUND_SET = 20


def _mask_to_set(mask: int) -> tuple[int, ...]:
    """Bitmask -> sorted tuple of 1-indexed elements."""
    return tuple(j + 1 for j in range(mask.bit_length()) if mask >> j & 1)


def _set_to_mask(subset: Iterable[int], p: int) -> int:
    mask = 0
    for j in subset:
        if not 1 <= j <= p:
            raise ValidationError(f"element {j} outside ground set 1..{p}")
        mask |= 1 << (j - 1)
    return mask


@dataclass(frozen=True)
class Support:
    """Finite set of natural-number vectors of constant coordinate sum."""

    p: int
    points: tuple[tuple[int, ...], ...]

    def __init__(self, p: int, points: Iterable[Iterable[int]]):
        pts = sorted({tuple(int(x) for x in pt) for pt in points})
        for pt in pts:
            if len(pt) != p:
                raise ValidationError(f"point {pt} has length {len(pt)}, expected {p}")
            if any(x < 0 for x in pt):
                raise ValidationError(f"negative coordinate in point {pt}")
        weights = {sum(pt) for pt in pts}
        if len(weights) > 1:
            raise ValidationError(f"points have mixed coordinate sums {sorted(weights)}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "points", tuple(pts))

    @property
    def weight(self) -> int | None:
        """Common coordinate sum, or None for the empty support."""
        return sum(self.points[0]) if self.points else None

    def __contains__(self, point: Iterable[int]) -> bool:
        return tuple(point) in set(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def complement(self, bound: int) -> "Support":
        """Map every point n to bound*(1,...,1) - n."""
        return Support(self.p, [tuple(bound - x for x in pt) for pt in self.points])

    def to_json_dict(self) -> dict:
        return {"p": self.p, "points": [list(pt) for pt in self.points]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Support":
        if not isinstance(data, dict) or "p" not in data or "points" not in data:
            raise ValidationError("support JSON needs 'p' and 'points'")
        return cls(int(data["p"]), [tuple(pt) for pt in data["points"]])


@dataclass(frozen=True)
class RankFunction:
    """Integer set function on all subsets of [p], indexed by bitmask.

    Construction only checks the table shape; use validate() to test the
    normalization, monotonicity, and submodularity axioms, which keeps
    deliberately corrupted tables representable for diagnosis.
    """

    p: int
    values: tuple[int, ...]

    def __init__(self, p: int, values: Sequence[int]):
        if p < 1:
            raise ValidationError("ground set must have at least one element")
        if p > MAX_GROUND_SET:
            raise UnsupportedSizeError(
                f"ground set size {p} exceeds the supported maximum {MAX_GROUND_SET}"
            )
        if len(values) != 1 << p:
            raise ValidationError(
                f"rank table has {len(values)} entries, expected {1 << p}"
            )
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "values", tuple(int(v) for v in values))

    def of_mask(self, mask: int) -> int:
        return self.values[mask]

    def of_set(self, subset: Iterable[int]) -> int:
        return self.values[_set_to_mask(subset, self.p)]

    @property
    def full_mask(self) -> int:
        return (1 << self.p) - 1

    def validate(self) -> "RankReport":
        return validate_rank_function(self)

    def to_json_dict(self) -> dict:
        return {"p": self.p, "values": list(self.values)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "RankFunction":
        if not isinstance(data, dict) or "p" not in data or "values" not in data:
            raise ValidationError("rank function JSON needs 'p' and 'values'")
        return cls(int(data["p"]), [int(v) for v in data["values"]])


@dataclass(frozen=True)
class RankViolation:
    """One failed axiom with the witnessing subset pair."""

    axiom: str  # "normalization" | "monotonicity" | "submodularity"
    subsets: tuple[tuple[int, ...], ...]
    detail: str

    def to_json_dict(self) -> dict:
        return {
            "axiom": self.axiom,
            "subsets": [list(s) for s in self.subsets],
            "detail": self.detail,
        }


@dataclass(frozen=True)
class RankReport:
    valid: bool
    violations: tuple[RankViolation, ...]

    def to_json_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [v.to_json_dict() for v in self.violations],
        }


def validate_rank_function(r: RankFunction) -> RankReport:
    """Check normalization, monotonicity, and submodularity.

    Submodularity is checked through the local characterization
    r(T+i) + r(T+j) >= r(T+i+j) + r(T), which is equivalent to the
    subset-pair form; a reported witness pair (T+i, T+j) genuinely
    violates the pair inequality.
    """
    violations: list[RankViolation] = []
    if r.values[0] != 0:
        violations.append(
            RankViolation(
                "normalization", ((),), f"rank of the empty set is {r.values[0]}, not 0"
            )
        )
    full = r.full_mask
    for mask in range(full + 1):
        for j in range(r.p):
            bit = 1 << j
            if mask & bit:
                continue
            if r.values[mask] > r.values[mask | bit]:
                violations.append(
                    RankViolation(
                        "monotonicity",
                        (_mask_to_set(mask), _mask_to_set(mask | bit)),
                        f"rank drops from {r.values[mask]} to {r.values[mask | bit]}",
                    )
                )
    for mask in range(full + 1):
        for i in range(r.p):
            if mask >> i & 1:
                continue
            for j in range(i + 1, r.p):
                if mask >> j & 1:
                    continue
                a, b = mask | 1 << i, mask | 1 << j
                lhs = r.values[a] + r.values[b]
                rhs = r.values[a | b] + r.values[mask]
                if lhs < rhs:
                    violations.append(
                        RankViolation(
                            "submodularity",
                            (_mask_to_set(a), _mask_to_set(b)),
                            f"r(T1) + r(T2) = {lhs} < {rhs} = r(T1 u T2) + r(T1 n T2)",
                        )
                    )
    return RankReport(valid=not violations, violations=tuple(violations))


def msupp_from_rank(r: RankFunction) -> Support:
    """All n in N^p with n(J) <= r(J) for proper subsets J and |n| = r([p]).

    Enumeration runs in lexicographic order over compositions of r([p])
    bounded coordinatewise by the singleton ranks, pruning on prefix
    subsets, with a final exhaustive check of every subset inequality.
    """
    report = validate_rank_function(r)
    if not report.valid:
        first = report.violations[0]
        raise ValidationError(f"invalid rank function: {first.axiom} at {first.subsets}")
    p = r.p
    values = r.values
    total = values[r.full_mask]
    caps = [values[1 << j] for j in range(p)]
    suffix_caps = [0] * (p + 1)
    for j in range(p - 1, -1, -1):
        suffix_caps[j] = suffix_caps[j + 1] + caps[j]

    points: list[tuple[int, ...]] = []
    # subset_sum[mask] holds the coordinate sum over the prefix subset
    # `mask`; entries for masks with highest bit j are refreshed whenever
    # a value is tried at depth j, so reads always see current data
    subset_sum = [0] * (1 << p)

    def extend(prefix: list[int], acc: int) -> None:
        j = len(prefix)
        if j == p:
            points.append(tuple(prefix))
            return
        remaining = total - acc
        hi = min(caps[j], remaining)
        lo = max(0, remaining - suffix_caps[j + 1])
        bit = 1 << j
        for v in range(lo, hi + 1):
            ok = True
            for s in range(bit):
                m = bit | s
                total_m = subset_sum[s] + v
                subset_sum[m] = total_m
                if total_m > values[m]:
                    ok = False
                    break
            if ok:
                prefix.append(v)
                extend(prefix, acc + v)
                prefix.pop()

    extend([], 0)
    return Support(p, points)


@dataclass(frozen=True)
class MConvexReport:
    mconvex: bool
    # witness = (x, y, i) such that x_i > y_i but no valid exchange exists
    witness: tuple[tuple[int, ...], tuple[int, ...], int] | None

    def to_json_dict(self) -> dict:
        if self.witness is None:
            return {"mconvex": self.mconvex, "witness": None}
        x, y, i = self.witness
        return {"mconvex": self.mconvex, "witness": {"x": list(x), "y": list(y), "i": i}}


def is_mconvex(s: Support) -> MConvexReport:
    """Test the exchange axiom: for x, y in s and x_i > y_i there is j
    with x_j < y_j and x - e_i + e_j in s."""
    if not s.points:
        raise ValidationError("M-convexity is undefined for an empty support")
    members = set(s.points)
    for x in s.points:
        for y in s.points:
            if x == y:
                continue
            for i in range(s.p):
                if x[i] <= y[i]:
                    continue
                found = False
                for j in range(s.p):
                    if x[j] >= y[j]:
                        continue
                    candidate = list(x)
                    candidate[i] -= 1
                    candidate[j] += 1
                    if tuple(candidate) in members:
                        found = True
                        break
                if not found:
                    return MConvexReport(False, (x, y, i + 1))
    return MConvexReport(True, None)


def rank_from_support(s: Support) -> RankFunction:
    """r(J) = max over points of the coordinate sum on J."""
    if not s.points:
        raise ValidationError("cannot extract a rank function from an empty support")
    values = []
    for mask in range(1 << s.p):
        idx = [j for j in range(s.p) if mask >> j & 1]
        values.append(max(sum(pt[j] for j in idx) for pt in s.points))
    return RankFunction(s.p, values)


def msupp_union(supports: Sequence[Support]) -> Support:
    """Set union of supports sharing p and weight (reducible-scheme case)."""
    if not supports:
        raise ValidationError("union of zero supports")
    p = supports[0].p
    weights = {s.weight for s in supports if s.weight is not None}
    if any(s.p != p for s in supports):
        raise ValidationError("supports have mismatched ground sets")
    if len(weights) > 1:
        raise ValidationError(f"supports have mismatched weights {sorted(weights)}")
    points: set[tuple[int, ...]] = set()
    for s in supports:
        points.update(s.points)
    return Support(p, points)


@dataclass(frozen=True)
class SubspaceFamily:
    """Spanning sets for subspaces V_1, ..., V_p of k^ambient_dim.

    The field k is the rationals ("Q") or a prime field ("Fp:<prime>").
    Empty generator lists give the zero subspace.
    """

    ambient_dim: int
    field: str
    generators: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __init__(
        self,
        ambient_dim: int,
        generators: Sequence[Sequence[Sequence[Fraction | int | str]]],
        field: str = "Q",
    ):
        if ambient_dim < 0:
            raise ValidationError("ambient dimension must be nonnegative")
        prime = _parse_field(field)
        parsed = []
        for idx, gens in enumerate(generators):
            vecs = []
            for vec in gens:
                entries = tuple(Fraction(x) for x in vec)
                if len(entries) != ambient_dim:
                    raise ValidationError(
                        f"subspace {idx + 1} has a vector of length "
                        f"{len(entries)}, expected {ambient_dim}"
                    )
                if prime is not None and any(e.denominator != 1 for e in entries):
                    raise ValidationError(
                        f"field {field} requires integer vector entries"
                    )
                vecs.append(entries)
            parsed.append(tuple(vecs))
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "generators", tuple(parsed))

    @property
    def p(self) -> int:
        return len(self.generators)

    def to_json_dict(self) -> dict:
        return {
            "ambient": self.ambient_dim,
            "field": self.field,
            "subspaces": [
                [[str(x) for x in vec] for vec in gens] for gens in self.generators
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SubspaceFamily":
        if not isinstance(data, dict) or "ambient" not in data or "subspaces" not in data:
            raise ValidationError("subspace family JSON needs 'ambient' and 'subspaces'")
        return cls(
            int(data["ambient"]), data["subspaces"], field=data.get("field", "Q")
        )


def _parse_field(field: str) -> int | None:
    """Return the prime for 'Fp:<prime>', or None for 'Q'."""
    if field == "Q":
        return None
    if field.startswith("Fp:"):
        try:
            prime = int(field[3:])
        except ValueError as exc:
            raise ValidationError(f"malformed field tag {field!r}") from exc
        if not is_prime(prime):
            raise ValidationError(f"{prime} is not prime")
        return prime
    raise ValidationError(f"unknown field tag {field!r}; use 'Q' or 'Fp:<prime>'")


def linear_rank(fam: SubspaceFamily) -> RankFunction:
    """Rank function r(J) = dim of the sum of the subspaces V_j, j in J.

    Ranks come from exact Gaussian elimination, over Q or over the
    tagged prime field.
    """
    p = fam.p
    if p < 1:
        raise ValidationError("subspace family must be nonempty")
    if p > MAX_GROUND_SET:
        raise UnsupportedSizeError(
            f"family size {p} exceeds the supported maximum {MAX_GROUND_SET}"
        )
    prime = _parse_field(fam.field)
    values = []
    for mask in range(1 << p):
        rows: list[tuple[Fraction, ...]] = []
        for j in range(p):
            if mask >> j & 1:
                rows.extend(fam.generators[j])
        if not rows:
            values.append(0)
        elif prime is None:
            values.append(rank_rational(rows))
        else:
            values.append(rank_mod_p([[int(x) for x in row] for row in rows], prime))
    return RankFunction(p, values)
