import pytest
from hypothesis import given, settings, strategies as st

from weylbox.config import BudgetError
from weylbox.partitions import Partition, dim_weyl, partitions_of
from weylbox.symfunc import (NonHomogeneousError, SymPoly, plethysm_expand,
                             product_expand, schur, schur_expand)

P = Partition

small_partition = st.integers(0, 4).flatmap(
    lambda n: st.sampled_from(list(partitions_of(n)) or [P()]))


class TestSchur:
    def test_elementary(self):
        assert dict(schur(P((1, 1)), 2).terms) == {P((1, 1)): 1}

    def test_sym2(self):
        assert dict(schur(P((2,)), 2).terms) == {P((2,)): 1, P((1, 1)): 1}

    def test_too_long_column(self):
        assert schur(P((1, 1, 1)), 2).is_zero()

    def test_empty(self):
        assert dict(schur(P(), 3).terms) == {P(): 1}


class TestSchurExpand:
    def test_monomial(self):
        assert schur_expand(SymPoly(2, {P((1, 1)): 1})) == {P((1, 1)): 1}

    def test_resolves_to_schur(self):
        f = SymPoly(2, {P((2,)): 1, P((1, 1)): 1})
        assert schur_expand(f) == {P((2,)): 1}

    def test_zero(self):
        assert schur_expand(SymPoly(3, {})) == {}

    def test_nonhomogeneous_rejected(self):
        f = SymPoly(3, {P((2,)): 1, P((1,)): 1})
        with pytest.raises(NonHomogeneousError):
            schur_expand(f)

    @given(small_partition, st.integers(1, 4))
    @settings(max_examples=40, deadline=None)
    def test_roundtrip(self, lam, N):
        if len(lam) > N:
            assert schur(lam, N).is_zero()
        else:
            assert schur_expand(schur(lam, N)) == {lam: 1}


class TestProduct:
    def test_s1_squared(self):
        assert product_expand(P((1,)), P((1,))) == {P((2,)): 1, P((1, 1)): 1}

    def test_s21_squared(self):
        expected = {P((4, 2)): 1, P((4, 1, 1)): 1, P((3, 3)): 1,
                    P((3, 2, 1)): 2, P((3, 1, 1, 1)): 1, P((2, 2, 2)): 1,
                    P((2, 2, 1, 1)): 1}
        assert product_expand(P((2, 1)), P((2, 1))) == expected

    def test_unit(self):
        assert product_expand(P((3, 1)), P()) == {P((3, 1)): 1}
        assert product_expand(P(), P()) == {P(): 1}

    @given(small_partition, small_partition)
    @settings(max_examples=25, deadline=None)
    def test_commutative(self, a, b):
        assert product_expand(a, b) == product_expand(b, a)

    @given(small_partition, small_partition, st.integers(1, 4))
    @settings(max_examples=25, deadline=None)
    def test_dimension_identity(self, a, b, n):
        coeffs = product_expand(a, b)
        total = sum(c * dim_weyl(lam, n) for lam, c in coeffs.items())
        assert total == dim_weyl(a, n) * dim_weyl(b, n)


class TestPlethysm:
    def test_sym2_of_sym2(self):
        assert plethysm_expand(P((2,)), P((2,))) == \
            {P((4,)): 1, P((2, 2)): 1}

    def test_wedge2_of_sym2(self):
        assert plethysm_expand(P((1, 1)), P((2,))) == {P((3, 1)): 1}

    def test_identity(self):
        for mu in [P((3,)), P((2, 1)), P((4, 2))]:
            assert plethysm_expand(P((1,)), mu) == {mu: 1}

    def test_degree_cap(self):
        with pytest.raises(BudgetError, match="cap"):
            plethysm_expand(P((3,)), P((3,)), degree_cap=8)

    def test_sym3_of_sym2(self):
        # classical: Sym^3(Sym^2) = S(6) + S(4,2) + S(2,2,2)
        assert plethysm_expand(P((3,)), P((2,))) == \
            {P((6,)): 1, P((4, 2)): 1, P((2, 2, 2)): 1}

    def test_coefficients_nonnegative(self):
        for pi in partitions_of(3):
            for mu in partitions_of(2):
                assert all(v > 0 for v in plethysm_expand(pi, mu).values())
