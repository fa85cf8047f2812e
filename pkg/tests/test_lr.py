import pytest
from fractions import Fraction as F

from weylbox.lr import (LRQuery, hive_polytope, lr_coefficient,
                        lr_positive, lr_stretch, _skew_lr_count)
from weylbox.partitions import Partition, partitions_of
from weylbox.polytope import count_integer_points
from weylbox.symfunc import product_expand

P = Partition


def q(a, b, lam):
    return LRQuery(P(a), P(b), P(lam))


class TestHivePolytope:
    def test_single_point(self):
        assert count_integer_points(hive_polytope(q((1,), (1,), (2,)))) == 1

    def test_size_mismatch(self):
        with pytest.raises(ValueError, match="size mismatch"):
            hive_polytope(q((1,), (1,), (3,)))

    def test_two_points(self):
        assert count_integer_points(
            hive_polytope(q((2, 1), (2, 1), (3, 2, 1)))) == 2

    def test_dilation_structure(self):
        base = hive_polytope(q((2, 1), (2, 1), (3, 2, 1)))
        scaled = hive_polytope(q((2, 1), (2, 1), (3, 2, 1)).scale(3))
        assert scaled.A == base.A
        assert scaled.b == base.dilate(3).b

    def test_empty_query(self):
        assert count_integer_points(hive_polytope(q((), (), ()))) == 1

    def test_side_cap(self):
        from weylbox.config import BudgetError
        with pytest.raises(BudgetError, match="cap"):
            hive_polytope(q((2, 1), (2, 1), (3, 2, 1)), side_cap=2)

    def test_explicit_side(self):
        P4 = hive_polytope(q((1,), (1,), (2,)), side=4)
        assert count_integer_points(P4) == 1


class TestCoefficient:
    def test_examples(self):
        assert lr_coefficient(q((1,), (1,), (1, 1))) == 1
        assert lr_coefficient(q((2, 1), (2, 1), (3, 2, 1))) == 2

    def test_not_contained(self):
        assert lr_coefficient(q((2, 2), (1,), (3, 1, 1))) == 0
        assert lr_coefficient(q((1, 1, 1), (1,), (4,))) == 0

    def test_size_mismatch_is_zero(self):
        assert lr_coefficient(q((1,), (1,), (3,))) == 0

    def test_empty_alpha(self):
        assert lr_coefficient(q((), (2, 1), (2, 1))) == 1
        assert lr_coefficient(q((), (2, 1), (3,))) == 0

    @pytest.mark.parametrize("size", [2, 3])
    def test_matches_schur_product(self, size):
        parts = [p for s in range(size + 1) for p in partitions_of(s, max_length=3)]
        for a in parts:
            for b in parts:
                prod = product_expand(a, b)
                for lam in partitions_of(a.size + b.size, max_length=3):
                    assert lr_coefficient(LRQuery(a, b, lam)) == \
                        prod.get(lam, 0), (a, b, lam)


class TestPositive:
    def test_examples(self):
        assert lr_positive(q((2, 1), (2, 1), (3, 2, 1)))
        assert not lr_positive(q((2,), (2,), (2, 1, 1)))
        assert lr_positive(q((1,), (1,), (2,)))

    def test_size_mismatch(self):
        assert not lr_positive(q((1,), (1,), (3,)))

    def test_no_enumeration_needed(self):
        # large coefficients stay cheap because only feasibility is decided
        assert lr_positive(q((8, 4), (8, 4), (12, 8, 4)))


class TestStretch:
    def test_headline(self):
        series = lr_stretch(q((2, 1), (2, 1), (3, 2, 1)), 5)
        assert series.values == (2, 3, 4, 5, 6)
        assert series.fit.period == 1
        assert [series.fit.eval(k) for k in range(1, 6)] == [2, 3, 4, 5, 6]

    def test_constant(self):
        series = lr_stretch(q((1,), (1,), (2,)), 4)
        assert series.values == (1, 1, 1, 1)
        assert series.fit.degree == 0

    def test_zero_series(self):
        series = lr_stretch(q((2,), (2,), (2, 1, 1)), 4)
        assert series.values == (0, 0, 0, 0)
        assert series.fit.eval(9) == 0

    def test_k_too_small(self):
        with pytest.raises(ValueError, match="K >= 4"):
            lr_stretch(q((1,), (1,), (2,)), 3)

    def test_quadratic(self):
        series = lr_stretch(q((3, 2, 1), (3, 2, 1), (4, 4, 3, 1)), 7)
        assert series.values == (3, 6, 10, 15, 21, 28, 36)
        assert series.fit.degree == 2


class TestSkewRule:
    def test_independent_of_hive(self):
        # row-insertion-free check of a classical value
        assert _skew_lr_count(P((2,)), P((2,)), P((3, 1))) == 1
        assert _skew_lr_count(P((2,)), P((2,)), P((2, 2))) == 1
        assert _skew_lr_count(P((2,)), P((2,)), P((4,))) == 1
        assert _skew_lr_count(P((2,)), P((2,)), P((2, 1, 1))) == 0

    def test_oracle_mismatch_never_silent(self):
        # same query through both routes; equality enforced inside
        value = lr_coefficient(q((3, 1), (2, 2), (4, 3, 1)))
        assert value == _skew_lr_count(P((3, 1)), P((2, 2)), P((4, 3, 1)))
        assert value == count_integer_points(
            hive_polytope(q((3, 1), (2, 2), (4, 3, 1))))
