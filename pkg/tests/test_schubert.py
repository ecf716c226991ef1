"""Schubert polynomials, Rothe diagrams, theta, and the support polytope.

The pipe-dream expansion in pipe_dreams.py is the independent oracle;
the classical S_3 table and a handful of textbook values are frozen as
additional anchors.
"""

import random
from itertools import permutations

import pytest

from multidegree import (
    Diagram,
    IntPolynomial,
    Permutation,
    ValidationError,
    is_mconvex,
    length,
    projection_codim,
    rothe_diagram,
    schubert_polynomial,
    schubert_support_polytope,
    theta,
    theta_rank_function,
)
from pipe_dreams import schubert_via_pipe_dreams

FIGURE_DIAGRAM = rothe_diagram(Permutation((4, 2, 5, 3, 1)))


def all_recursion_routes(pi):
    """Schubert polynomial via every ascent-choice chain (well-definedness)."""
    ascents = pi.ascents()
    if not ascents:
        return {IntPolynomial.monomial(pi.p, tuple(pi.p - i for i in range(1, pi.p + 1)))}
    results = set()
    for i in ascents:
        for higher in all_recursion_routes(pi.swap_positions(i)):
            results.add(higher.divided_difference(i))
    return results


class TestPermutation:
    def test_bijectivity_enforced(self):
        with pytest.raises(ValidationError):
            Permutation((1, 1, 3))

    def test_length_identity(self):
        assert length(Permutation.identity(4)) == 0

    def test_length_longest(self):
        for p in range(1, 7):
            assert length(Permutation.longest(p)) == p * (p - 1) // 2

    def test_length_42531(self):
        assert length(Permutation((4, 2, 5, 3, 1))) == 7

    def test_json_round_trip(self):
        pi = Permutation((2, 4, 1, 3))
        assert Permutation.from_json_dict(pi.to_json_dict()) == pi


class TestSchubertPolynomial:
    # classical table for S_3
    S3_TABLE = {
        (3, 2, 1): {(2, 1, 0): 1},
        (2, 3, 1): {(1, 1, 0): 1},
        (3, 1, 2): {(2, 0, 0): 1},
        (2, 1, 3): {(1, 0, 0): 1},
        (1, 3, 2): {(1, 0, 0): 1, (0, 1, 0): 1},
        (1, 2, 3): {(0, 0, 0): 1},
    }

    def test_s3_table(self):
        for one_line, terms in self.S3_TABLE.items():
            assert schubert_polynomial(Permutation(one_line)) == IntPolynomial(3, terms)

    def test_longest_is_staircase_monomial(self):
        for p in range(1, 6):
            expected = IntPolynomial.monomial(p, tuple(p - i for i in range(1, p + 1)))
            assert schubert_polynomial(Permutation.longest(p)) == expected

    def test_identity_is_one(self):
        for p in range(1, 6):
            assert schubert_polynomial(Permutation.identity(p)) == IntPolynomial.one(p)

    def test_textbook_values(self):
        assert schubert_polynomial(Permutation((2, 1, 4, 3))) == IntPolynomial(
            4, {(2, 0, 0, 0): 1, (1, 1, 0, 0): 1, (1, 0, 1, 0): 1}
        )
        assert schubert_polynomial(Permutation((1, 4, 3, 2))) == IntPolynomial(
            4,
            {
                (2, 1, 0, 0): 1,
                (2, 0, 1, 0): 1,
                (1, 2, 0, 0): 1,
                (1, 1, 1, 0): 1,
                (0, 2, 1, 0): 1,
            },
        )

    def test_well_defined_for_all_chains_up_to_p4(self):
        for p in (2, 3, 4):
            for one_line in permutations(range(1, p + 1)):
                pi = Permutation(one_line)
                routes = all_recursion_routes(pi)
                assert len(routes) == 1
                assert routes.pop() == schubert_polynomial(pi)

    def test_coefficients_positive_up_to_p5(self):
        for p in (2, 3, 4, 5):
            for one_line in permutations(range(1, p + 1)):
                f = schubert_polynomial(Permutation(one_line))
                assert not f.negative_exponents()
                assert all(c > 0 for _e, c in f)

    def test_matches_pipe_dream_oracle_on_s4(self):
        for one_line in permutations(range(1, 5)):
            pi = Permutation(one_line)
            assert schubert_polynomial(pi) == schubert_via_pipe_dreams(pi)

    def test_degree_equals_length(self):
        rng = random.Random(5)
        for _ in range(20):
            one_line = list(range(1, 6))
            rng.shuffle(one_line)
            pi = Permutation(one_line)
            f = schubert_polynomial(pi)
            assert f.total_degree() == length(pi)
            assert all(sum(e) == length(pi) for e, _c in f)


class TestRotheDiagram:
    def test_identity_empty(self):
        assert rothe_diagram(Permutation.identity(4)).cells == frozenset()

    def test_42531_figure(self):
        expected = {(1, 1), (1, 2), (1, 3), (2, 1), (3, 1), (3, 3), (4, 1)}
        assert FIGURE_DIAGRAM.cells == frozenset(expected)

    def test_2143(self):
        assert rothe_diagram(Permutation((2, 1, 4, 3))).cells == frozenset(
            {(1, 1), (3, 3)}
        )

    def test_cell_count_is_length(self):
        for one_line in permutations(range(1, 6)):
            pi = Permutation(one_line)
            assert len(rothe_diagram(pi).cells) == length(pi)

    def test_json_round_trip(self):
        assert Diagram.from_json_dict(FIGURE_DIAGRAM.to_json_dict()) == FIGURE_DIAGRAM


class TestTheta:
    def test_figure_anchor(self):
        assert theta(FIGURE_DIAGRAM, [2, 3]) == 3

    def test_empty_subset(self):
        assert theta(FIGURE_DIAGRAM, []) == 0
        assert theta(rothe_diagram(Permutation((3, 1, 2))), []) == 0

    def test_full_subset_counts_boxes(self):
        for p in range(2, 7):
            for one_line in permutations(range(1, p + 1)):
                pi = Permutation(one_line)
                d = rothe_diagram(pi)
                assert theta(d, range(1, p + 1)) == length(pi)

    def test_non_rothe_diagram(self):
        # one closable pair in column 1: row 1 opens, row 2 closes
        d = Diagram(2, [(2, 1)])
        assert theta(d, [1]) == 1
        assert theta(d, [2]) == 1  # star at (2,1)
        assert theta(d, [1, 2]) == 1


class TestSupportPolytope:
    def test_identity_single_point(self):
        for p in (2, 3, 4):
            sp = schubert_support_polytope(Permutation.identity(p))
            assert sp.points == ((p - 1,) * p,)

    def test_longest_s3(self):
        sp = schubert_support_polytope(Permutation.longest(3))
        assert sp.points == ((0, 1, 2),)

    def test_matches_polynomial_support_42531(self):
        pi = Permutation((4, 2, 5, 3, 1))
        from_poly = schubert_polynomial(pi).support().complement(pi.p - 1)
        assert schubert_support_polytope(pi) == from_poly
        # the count comes from the build: both routes agree on it
        assert len(from_poly) == len(schubert_support_polytope(pi))

    def test_theorem_holds_on_all_of_s4(self):
        for one_line in permutations(range(1, 5)):
            pi = Permutation(one_line)
            support = schubert_polynomial(pi).support().complement(pi.p - 1)
            assert support == schubert_support_polytope(pi)
            assert is_mconvex(support).mconvex

    def test_theorem_holds_on_sampled_s5(self):
        rng = random.Random(17)
        seen = set()
        while len(seen) < 12:
            one_line = tuple(rng.sample(range(1, 6), 5))
            seen.add(one_line)
        for one_line in sorted(seen):
            pi = Permutation(one_line)
            support = schubert_polynomial(pi).support().complement(pi.p - 1)
            assert support == schubert_support_polytope(pi)
            assert is_mconvex(support).mconvex


class TestProjectionCodim:
    def test_full_subset_is_length(self):
        for one_line in permutations(range(1, 5)):
            pi = Permutation(one_line)
            assert projection_codim(pi, range(1, 5)) == length(pi)

    def test_empty_subset(self):
        assert projection_codim(Permutation((4, 2, 5, 3, 1)), []) == 0

    def test_identity(self):
        pi = Permutation.identity(4)
        for mask in range(16):
            subset = [j + 1 for j in range(4) if mask >> j & 1]
            assert projection_codim(pi, subset) == 0

    def test_monotone_in_subset(self):
        pi = Permutation((4, 2, 5, 3, 1))
        rho = theta_rank_function(rothe_diagram(pi))
        assert rho.values[rho.full_mask] == length(pi)
        for mask in range(1 << 5):
            subset = [j + 1 for j in range(5) if mask >> j & 1]
            c = projection_codim(pi, subset)
            assert 0 <= c <= length(pi)
