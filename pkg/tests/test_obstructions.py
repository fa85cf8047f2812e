import json
import math
import time

import pytest

from weylbox.config import BudgetError
from weylbox.obstructions import (MagicSquare, ObstructionCertificate,
                                  ObstructionChecks, ObstructionError,
                                  basic_invariant_poly,
                                  emit_obstruction_family,
                                  enumerate_magic_squares,
                                  invariant_ring_dimension_check,
                                  magic_orbit_representatives,
                                  trace_like_invariance_check,
                                  verify_obstruction)
from weylbox.partitions import Partition

P = Partition


class TestMagicSquares:
    def test_weight_one_is_permutations(self):
        squares, orbits = enumerate_magic_squares(3, 1)
        assert len(squares) == 6 and orbits == 1
        for sq in squares:
            assert sorted(v for row in sq.entries for v in row) == [0] * 6 + [1] * 3

    def test_two_by_two_weight_three(self):
        squares, orbits = enumerate_magic_squares(2, 3)
        assert len(squares) == 4  # a free diagonal parameter 0..3
        assert orbits == 2

    def test_zero_weight(self):
        squares, orbits = enumerate_magic_squares(2, 0)
        assert len(squares) == 1 and orbits == 1

    def test_three_by_three_weight_three_count(self):
        # classical: H_3(3) = 55
        squares, _ = enumerate_magic_squares(3, 3)
        assert len(squares) == 55

    def test_caps(self):
        with pytest.raises(BudgetError):
            enumerate_magic_squares(5, 1)
        with pytest.raises(BudgetError):
            enumerate_magic_squares(2, 99)

    def test_invalid_square_rejected(self):
        with pytest.raises(ValueError):
            MagicSquare(2, ((1, 0), (0, 2)))


class TestBasicInvariants:
    def names(self, n):
        return [f"x{i + 1}{j + 1}" for i in range(n) for j in range(n)]

    def test_identity_orbit_is_perm(self):
        poly = basic_invariant_poly(MagicSquare(2, ((1, 0), (0, 1))))
        assert poly.to_string(self.names(2)) == "x11*x22 + x12*x21"

    def test_all_ones_fixed(self):
        poly = basic_invariant_poly(MagicSquare(2, ((1, 1), (1, 1))))
        assert poly.to_string(self.names(2)) == "x11*x12*x21*x22"

    def test_doubled_diagonal(self):
        poly = basic_invariant_poly(MagicSquare(2, ((2, 0), (0, 2))))
        assert poly.to_string(self.names(2)) == "x11^2*x22^2 + x12^2*x21^2"

    def test_invariance_under_permutations(self):
        # symbolic check: substituting a row or column permutation fixes p_A
        sq = MagicSquare(3, ((2, 1, 0), (0, 2, 1), (1, 0, 2)))
        poly = basic_invariant_poly(sq)
        n = 3
        for perm in [[1, 0, 2], [1, 2, 0]]:
            row_sub = [perm[t // n] * n + t % n for t in range(n * n)]
            col_sub = [(t // n) * n + perm[t % n] for t in range(n * n)]
            assert poly.permute_variables(row_sub) == poly
            assert poly.permute_variables(col_sub) == poly


class TestInvariantRingDimension:
    @pytest.mark.parametrize("n,r", [(2, 0), (2, 1), (2, 2), (2, 3),
                                     (3, 0), (3, 1), (3, 2), (3, 3)])
    def test_agreement(self, n, r):
        assert invariant_ring_dimension_check(n, r)

    def test_representative_count_weight_one(self):
        assert len(magic_orbit_representatives(3, 1)) == 1


class TestTraceInvariance:
    @pytest.mark.parametrize("n,j", [(2, 2), (3, 0), (2, 3), (3, 2)])
    def test_invariance(self, n, j):
        assert trace_like_invariance_check(n, j, trials=3)


class TestObstructionFamily:
    def test_emit_small(self):
        certs = list(emit_obstruction_family(4))
        assert [c.gamma for c in certs] == [P((4,)), P((6,)), P((8,))]
        assert all(c.checks.even and c.checks.alpha_neq_beta for c in certs)

    def test_emit_fifty_fast(self):
        t0 = time.perf_counter()
        certs = list(emit_obstruction_family(50))
        for c in certs:
            verify_obstruction(c)
        assert time.perf_counter() - t0 < 1.0
        assert len(certs) == 49

    def test_full_verification(self):
        cert = next(iter(emit_obstruction_family(2)))
        full = verify_obstruction(cert, full=True)
        assert full.checks.invariant_dim >= 1

    def test_rejects_odd(self):
        bad = ObstructionCertificate(2, P((3, 1)), ObstructionChecks(False, True))
        with pytest.raises(ObstructionError, match="not even"):
            verify_obstruction(bad)

    def test_rejects_wrong_size(self):
        bad = ObstructionCertificate(3, P((4,)), ObstructionChecks(True, True))
        with pytest.raises(ObstructionError, match="2n"):
            verify_obstruction(bad)

    def test_structural_only_for_large_n(self):
        cert = ObstructionCertificate(7, P((10, 4)), ObstructionChecks(True, True))
        verified = verify_obstruction(cert, full=True)
        assert verified.checks.invariant_dim is None  # out of full budget

    def test_json_roundtrip(self):
        cert = verify_obstruction(
            next(iter(emit_obstruction_family(2))), full=True)
        data = json.loads(json.dumps(cert.to_json()))
        back = ObstructionCertificate.from_json(data)
        assert back.n == cert.n and back.gamma == cert.gamma
        assert back.checks.invariant_dim == cert.checks.invariant_dim

    def test_bitlength_logarithmic(self):
        certs = list(emit_obstruction_family(50))
        for cert in certs:
            # O(log n): a generous explicit constant, far below the O(n) bound
            assert cert.bitlength <= 4 * math.log2(cert.n) + 8
            serialized = cert.gamma.serialize()
            assert 8 * len(serialized.encode()) <= 32 * math.log2(cert.n) + 32
