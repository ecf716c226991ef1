"""Flag-variety and rational-curves supports, with the literal
inequality comparator and the Catalan cardinality law."""

from math import comb

import pytest

from multidegree import (
    ValidationError,
    flag_comparator_report,
    flag_msupp,
    flag_rank_function,
    flag_simple_inequalities,
    is_mconvex,
    m0n_msupp,
    m0n_rank_function,
    msupp_from_rank,
    validate_rank_function,
)


def catalan_numbers(count):
    """C_1, ..., C_count by the convolution recurrence."""
    values = [1]  # C_0
    for _ in range(count):
        values.append(sum(values[i] * values[-1 - i] for i in range(len(values))))
    return values[1:]


def prefix_enumeration(p):
    """Literal prefix-inequality set: sum of the first k entries <= k for
    k < p, total equal to p."""
    points = []

    def extend(prefix, acc):
        k = len(prefix)
        if k == p:
            if acc == p:
                points.append(tuple(prefix))
            return
        for v in range(p - acc + 1):
            if k + 1 < p and acc + v > k + 1:
                continue
            if k + 1 == p and acc + v != p:
                continue
            extend(prefix + [v], acc + v)

    extend([], 0)
    return tuple(sorted(points))


class TestFlagRank:
    def test_p2_values(self):
        r = flag_rank_function(2)
        assert r.of_set([1]) == 2
        assert r.of_set([2]) == 2
        assert r.of_set([1, 2]) == 3
        assert r.of_set([]) == 0

    def test_full_set_is_flag_dimension(self):
        for p in range(1, 7):
            r = flag_rank_function(p)
            assert r.of_set(range(1, p + 1)) == comb(p + 1, 2)

    def test_valid_up_to_p8(self):
        for p in range(1, 9):
            assert validate_rank_function(flag_rank_function(p)).valid


class TestFlagSupport:
    def test_p1(self):
        assert flag_msupp(1).points == ((1,),)

    def test_p2(self):
        assert flag_msupp(2).points == ((1, 2), (2, 1))

    def test_p3_matches_direct_enumeration(self):
        support = flag_msupp(3)
        r = flag_rank_function(3)
        assert support == msupp_from_rank(r)
        assert support.weight == 6
        assert is_mconvex(support).mconvex

    def test_p_must_be_positive(self):
        with pytest.raises(ValidationError):
            flag_msupp(0)


class TestComparator:
    def test_literal_system_p2_rejects_everything(self):
        # literal reading: k=2 forces n_2 <= 1 + 0 - n_1 <= 0, impossible
        assert not flag_simple_inequalities(2, (1, 2))
        assert not flag_simple_inequalities(2, (2, 1))

    def test_literal_system_p1(self):
        # k=1 bound: 1 <= n_1 <= p - 1 = 0, so even (1) is rejected
        assert not flag_simple_inequalities(1, (1,))

    def test_wrong_weight_rejected(self):
        assert not flag_simple_inequalities(3, (1, 2, 2))

    def test_report_structure_and_discrepancy(self):
        for p in range(1, 7):
            report = flag_comparator_report(p)
            assert set(report) >= {
                "p",
                "agree",
                "only_rank_route",
                "only_literal_route",
                "count_rank_route",
                "count_literal_route",
            }
            assert report["count_rank_route"] == len(flag_msupp(p))
        # the discrepancy at p=2 is a recorded fact, not an assertion failure
        report2 = flag_comparator_report(2)
        assert not report2["agree"]
        assert report2["only_rank_route"] == [[1, 2], [2, 1]]
        assert report2["only_literal_route"] == []


class TestModuliSupport:
    def test_rank_is_max(self):
        r = m0n_rank_function(3)
        assert r.values == (0, 1, 2, 2, 3, 3, 3, 3)
        assert validate_rank_function(r).valid

    def test_p3_points(self):
        assert m0n_msupp(3).points == (
            (0, 0, 3),
            (0, 1, 2),
            (0, 2, 1),
            (1, 0, 2),
            (1, 1, 1),
        )

    def test_p1(self):
        assert m0n_msupp(1).points == ((1,),)

    def test_matches_prefix_enumeration_up_to_p8(self):
        for p in range(1, 9):
            assert m0n_msupp(p).points == prefix_enumeration(p)

    def test_catalan_cardinalities(self):
        expected = catalan_numbers(8)
        for p in range(1, 9):
            assert len(m0n_msupp(p)) == expected[p - 1]

    def test_mconvex(self):
        for p in range(1, 7):
            assert is_mconvex(m0n_msupp(p)).mconvex
