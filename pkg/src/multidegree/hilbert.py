"""Multigraded K-polynomials of monomial ideals and Stanley-Reisner data.

The K-polynomial of S/I is the numerator of the multigraded Hilbert
series over the full Koszul denominator prod_vars (1 - t^deg(x)).  For
a monomial ideal it satisfies the short-exact-sequence recursion

    K(S/(J + (m))) = K(S/J) - t^deg(m) * K(S/(J : m)),

with K(S/0) = 1 and a product base case for pairwise-coprime pure
powers.  The degree-filtered substitution t -> 1 - t of the
K-polynomial yields the multidegree polynomial when the ideal has no
irrelevant torsion; that hypothesis is asserted by the caller, not
verified here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import BudgetExceededError, UnsupportedSizeError, ValidationError
from .poly import IntPolynomial
from .polymatroid import Support

MAX_DIMENSION_VARS = 20
DEFAULT_ENUMERATION_BUDGET = 2_000_000
DEFAULT_RECURSION_BUDGET = 200_000


@dataclass(frozen=True)
class Grading:
    """Map from each variable to its degree vector in N^p."""

    nvars: int
    p: int
    degree_of: tuple[tuple[int, ...], ...]

    def __init__(self, nvars: int, p: int, degree_of: Sequence[Sequence[int]]):
        if len(degree_of) != nvars:
            raise ValidationError(
                f"grading lists {len(degree_of)} degrees for {nvars} variables"
            )
        degrees = tuple(tuple(int(x) for x in d) for d in degree_of)
        for v, d in enumerate(degrees):
            if len(d) != p:
                raise ValidationError(f"degree of variable {v + 1} has length {len(d)}")
            if any(x < 0 for x in d):
                raise ValidationError(f"negative degree entry for variable {v + 1}")
            if all(x == 0 for x in d):
                raise ValidationError(f"variable {v + 1} has zero degree vector")
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "degree_of", degrees)

    @classmethod
    def standard(cls, p: int) -> "Grading":
        """One variable per factor: deg(x_i) = e_i."""
        return cls(p, p, [[1 if j == i else 0 for j in range(p)] for i in range(p)])

    def degree_of_monomial(self, exponent: Sequence[int]) -> tuple[int, ...]:
        deg = [0] * self.p
        for e, d in zip(exponent, self.degree_of):
            for k in range(self.p):
                deg[k] += e * d[k]
        return tuple(deg)


def _divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators' exponent vectors."""

    grading: Grading
    generators: tuple[tuple[int, ...], ...]

    def __init__(self, grading: Grading, generators: Iterable[Iterable[int]]):
        gens = sorted({tuple(int(x) for x in g) for g in generators})
        for g in gens:
            if len(g) != grading.nvars:
                raise ValidationError(
                    f"generator {g} has length {len(g)}, expected {grading.nvars}"
                )
            if any(x < 0 for x in g):
                raise ValidationError(f"negative exponent in generator {g}")
            if all(x == 0 for x in g):
                raise ValidationError("the unit monomial cannot be a generator")
        for a, b in combinations(gens, 2):
            if _divides(a, b) or _divides(b, a):
                raise ValidationError(
                    f"generator list is not minimal: {a} and {b} are comparable"
                )
        object.__setattr__(self, "grading", grading)
        object.__setattr__(self, "generators", tuple(gens))

    def contains_monomial(self, exponent: Sequence[int]) -> bool:
        return any(_divides(g, exponent) for g in self.generators)

    def to_json_dict(self) -> dict:
        return {
            "nvars": self.grading.nvars,
            "p": self.grading.p,
            "degrees": [list(d) for d in self.grading.degree_of],
            "generators": [list(g) for g in self.generators],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "MonomialIdeal":
        needed = {"nvars", "p", "degrees", "generators"}
        if not isinstance(data, dict) or not needed <= set(data):
            raise ValidationError(f"monomial ideal JSON needs {sorted(needed)}")
        grading = Grading(int(data["nvars"]), int(data["p"]), data["degrees"])
        return cls(grading, [tuple(g) for g in data["generators"]])


def _minimalize(gens: Iterable[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    unique = sorted(set(gens))
    kept: list[tuple[int, ...]] = []
    for g in unique:
        if not any(_divides(h, g) for h in kept if h != g):
            kept = [h for h in kept if not _divides(g, h)]
            kept.append(g)
    return tuple(sorted(kept))


def _colon(gens: Sequence[tuple[int, ...]], m: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Generators of (gens) : m, re-minimalized."""
    quotients = [tuple(max(g_v - m_v, 0) for g_v, m_v in zip(g, m)) for g in gens]
    nontrivial = [q for q in quotients if any(q)]
    if len(nontrivial) < len(quotients):
        # some generator divides m, so the colon ideal is the unit ideal
        return ((0,) * len(m) * 0,)  # sentinel never used; handled by caller
    return _minimalize(nontrivial)


def kpolynomial(ideal: MonomialIdeal, recursion_budget: int = DEFAULT_RECURSION_BUDGET) -> IntPolynomial:
    """K-polynomial of S/I in the p grading variables.

    Pivot choice: the last generator among those of maximal total
    degree.  The result is independent of that choice; the recursion
    node budget guards against oversized inputs.
    """
    grading = ideal.grading
    nodes = 0

    def is_pure_power(g: tuple[int, ...]) -> bool:
        return sum(1 for x in g if x > 0) == 1

    def recurse(gens: tuple[tuple[int, ...], ...]) -> IntPolynomial:
        nonlocal nodes
        nodes += 1
        if nodes > recursion_budget:
            raise BudgetExceededError(
                f"K-polynomial recursion exceeded {recursion_budget} nodes"
            )
        if not gens:
            return IntPolynomial.one(grading.p)
        if all(is_pure_power(g) for g in gens):
            # pairwise-coprime pure powers form a regular sequence
            result = IntPolynomial.one(grading.p)
            for g in gens:
                deg = grading.degree_of_monomial(g)
                result = result * (
                    IntPolynomial.one(grading.p)
                    - IntPolynomial.monomial(grading.p, deg)
                )
            return result
        max_total = max(sum(g) for g in gens)
        pivot_idx = max(i for i, g in enumerate(gens) if sum(g) == max_total)
        m = gens[pivot_idx]
        rest = gens[:pivot_idx] + gens[pivot_idx + 1 :]
        quotients = [tuple(max(g_v - m_v, 0) for g_v, m_v in zip(g, m)) for g in rest]
        if any(not any(q) for q in quotients):
            raise AssertionError("minimality violated inside recursion")
        colon = _minimalize(quotients)
        deg_m = grading.degree_of_monomial(m)
        t_deg = IntPolynomial.monomial(grading.p, deg_m)
        return recurse(rest) - t_deg * recurse(colon)

    return recurse(ideal.generators)


def hilbert_function_oracle(
    ideal: MonomialIdeal,
    nu: Sequence[int],
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> int:
    """Count monomials of multidegree nu outside the ideal, exhaustively.

    This is the brute-force cross-check for the K-polynomial pipeline
    and deliberately shares no code with it.
    """
    grading = ideal.grading
    target = tuple(int(x) for x in nu)
    if len(target) != grading.p:
        raise ValidationError(f"degree vector {target} has length {len(target)}")
    if any(x < 0 for x in target):
        raise ValidationError("degree vector must be nonnegative")
    steps = 0
    count = 0
    exponent = [0] * grading.nvars

    def walk(v: int, remaining: tuple[int, ...]) -> None:
        nonlocal steps, count
        steps += 1
        if steps > budget:
            raise BudgetExceededError(f"enumeration exceeded {budget} steps")
        if v == grading.nvars:
            if all(x == 0 for x in remaining) and not ideal.contains_monomial(exponent):
                count += 1
            return
        deg = grading.degree_of[v]
        e = 0
        current = remaining
        while True:
            exponent[v] = e
            walk(v + 1, current)
            nxt = tuple(x - d for x, d in zip(current, deg))
            if any(x < 0 for x in nxt):
                break
            current = nxt
            e += 1
        exponent[v] = 0

    walk(0, target)
    return count


def hilbert_series_coefficients_upto(
    ideal: MonomialIdeal, bound: Sequence[int]
) -> dict[tuple[int, ...], int]:
    """Coefficients of K(S/I) / prod_vars(1 - t^deg) for all nu <= bound.

    The series is expanded exactly inside the coordinate box; exponents
    outside the box cannot influence those inside, so the truncation is
    safe.
    """
    grading = ideal.grading
    box = tuple(int(x) for x in bound)
    if len(box) != grading.p or any(x < 0 for x in box):
        raise ValidationError(f"bad truncation box {box}")

    def truncated_mul(
        a: dict[tuple[int, ...], int], b: dict[tuple[int, ...], int]
    ) -> dict[tuple[int, ...], int]:
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                if any(k > m for k, m in zip(key, box)):
                    continue
                out[key] = out.get(key, 0) + c1 * c2
        return {e: c for e, c in out.items() if c != 0}

    series: dict[tuple[int, ...], int] = {(0,) * grading.p: 1}
    for deg in grading.degree_of:
        factor: dict[tuple[int, ...], int] = {}
        k = 0
        while True:
            exp = tuple(k * d for d in deg)
            if any(x > m for x, m in zip(exp, box)):
                break
            factor[exp] = 1
            k += 1
        series = truncated_mul(series, factor)
    kpoly = {
        exp: coef
        for exp, coef in kpolynomial(ideal).terms.items()
        if all(x <= m for x, m in zip(exp, box))
    }
    return truncated_mul(series, kpoly)


def _min_hitting_set_size(supports: Sequence[frozenset[int]]) -> int:
    """Smallest set of variables meeting every generator support."""
    universe = sorted(set().union(*supports)) if supports else []
    for k in range(len(universe) + 1):
        for combo in combinations(universe, k):
            chosen = set(combo)
            if all(chosen & s for s in supports):
                return k
    return len(universe)


def quotient_krull_dimension(ideal: MonomialIdeal) -> int:
    """Krull dimension of S/I: nvars minus a minimum variable cover of
    the generators (exact set cover, capped at 20 variables)."""
    if ideal.grading.nvars > MAX_DIMENSION_VARS:
        raise UnsupportedSizeError(
            f"dimension computation refuses inputs with more than "
            f"{MAX_DIMENSION_VARS} variables (got {ideal.grading.nvars})"
        )
    supports = [
        frozenset(v for v, e in enumerate(g) if e > 0) for g in ideal.generators
    ]
    return ideal.grading.nvars - _min_hitting_set_size(supports)


def multidegree_polynomial(ideal: MonomialIdeal) -> IntPolynomial:
    """Degree-filtered K-polynomial: the terms of K(S/I; 1-t) of total
    degree dim(S) - dim(S/I).

    Equals the multidegree polynomial of MultiProj(S/I) whenever the
    quotient has no irrelevant torsion, which the caller asserts.
    """
    codim = ideal.grading.nvars - quotient_krull_dimension(ideal)
    return kpolynomial(ideal).substitute_one_minus().truncate_total_degree(codim)


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex on vertices 1..nverts, given by facets."""

    nverts: int
    facets: tuple[tuple[int, ...], ...]

    def __init__(self, nverts: int, facets: Iterable[Iterable[int]]):
        cleaned = sorted({tuple(sorted(set(int(v) for v in f))) for f in facets})
        for f in cleaned:
            if not f:
                raise ValidationError("empty facet")
            if any(not 1 <= v <= nverts for v in f):
                raise ValidationError(f"facet {f} has a vertex outside 1..{nverts}")
        for a, b in combinations(cleaned, 2):
            if set(a) <= set(b) or set(b) <= set(a):
                raise ValidationError(f"facets {a} and {b} are nested")
        object.__setattr__(self, "nverts", nverts)
        object.__setattr__(self, "facets", tuple(cleaned))

    def is_face(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return any(s <= set(f) for f in self.facets)

    def max_facet_size(self) -> int:
        return max(len(f) for f in self.facets)

    def edges(self) -> list[tuple[int, int]]:
        found = set()
        for f in self.facets:
            found.update(combinations(f, 2))
        return sorted(found)

    def f_vector(self) -> tuple[int, ...]:
        """(f_0, f_1, ...): number of faces of each positive dimension."""
        counts: dict[int, set[tuple[int, ...]]] = {}
        for f in self.facets:
            for size in range(1, len(f) + 1):
                for face in combinations(f, size):
                    counts.setdefault(size, set()).add(face)
        return tuple(len(counts[s]) for s in sorted(counts))

    def minimal_nonfaces(self) -> list[tuple[int, ...]]:
        out = []
        for size in range(1, self.max_facet_size() + 2):
            for candidate in combinations(range(1, self.nverts + 1), size):
                if self.is_face(candidate):
                    continue
                if all(
                    self.is_face(candidate[:k] + candidate[k + 1 :])
                    for k in range(size)
                ):
                    out.append(candidate)
        return out

    def to_json_dict(self) -> dict:
        return {"nverts": self.nverts, "facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "SimplicialComplex":
        if not isinstance(data, dict) or "nverts" not in data or "facets" not in data:
            raise ValidationError("simplicial complex JSON needs 'nverts' and 'facets'")
        return cls(int(data["nverts"]), [tuple(f) for f in data["facets"]])


def stanley_reisner_ideal(
    complex_: SimplicialComplex, vars_per_vertex: int = 1
) -> MonomialIdeal:
    """Squarefree ideal of the minimal non-faces.

    With the default of one variable per vertex, variable i has degree
    e_i in N^nverts.  With vars_per_vertex = 2 every vertex contributes
    a pair of variables of the same degree (one projective line per
    vertex) and the generators use the first variable of each pair.
    """
    if vars_per_vertex < 1:
        raise ValidationError("vars_per_vertex must be at least 1")
    n = complex_.nverts
    degrees = []
    for _ in range(vars_per_vertex):
        for i in range(n):
            degrees.append([1 if j == i else 0 for j in range(n)])
    grading = Grading(n * vars_per_vertex, n, degrees)
    generators = []
    for nonface in complex_.minimal_nonfaces():
        exp = [0] * (n * vars_per_vertex)
        for v in nonface:
            exp[v - 1] = 1
        generators.append(tuple(exp))
    return MonomialIdeal(grading, generators)


def facet_support(complex_: SimplicialComplex) -> Support:
    """{0,1} incidence vectors of the facets of maximal size."""
    top = complex_.max_facet_size()
    points = []
    for f in complex_.facets:
        if len(f) == top:
            points.append(tuple(1 if v in f else 0 for v in range(1, complex_.nverts + 1)))
    return Support(complex_.nverts, points)


# -- shipped fixtures --------------------------------------------------------


def hollow_triangle() -> SimplicialComplex:
    """Three vertices, three edges, no 2-face."""
    return SimplicialComplex(3, [(1, 2), (1, 3), (2, 3)])


def octahedron_boundary() -> SimplicialComplex:
    """Boundary of the octahedron; antipodal pairs (1,4), (2,5), (3,6)."""
    facets = []
    for a in (1, 4):
        for b in (2, 5):
            for c in (3, 6):
                facets.append((a, b, c))
    return SimplicialComplex(6, facets)


def icosahedron_boundary() -> SimplicialComplex:
    """Boundary of the icosahedron: vertex 1 on top, upper pentagon 2-6,
    lower pentagon 7-11, vertex 12 at the bottom."""
    upper = [2, 3, 4, 5, 6]
    lower = [7, 8, 9, 10, 11]
    facets = []
    for k in range(5):
        u, u_next = upper[k], upper[(k + 1) % 5]
        l, l_next = lower[k], lower[(k + 1) % 5]
        facets.append((1, u, u_next))
        facets.append((u, u_next, l))
        facets.append((u_next, l, l_next))
        facets.append((12, l, l_next))
    return SimplicialComplex(12, facets)
