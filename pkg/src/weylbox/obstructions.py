"""Magic squares, basic permanent-like invariants, and the strongly explicit
obstruction family.

A magic square of weight r (all row and column sums r) names a basic
invariant p_A, the orbit sum of the monomial x^A under row and column
permutations; orbit representatives form a basis of the permanent-stabilizer
invariant ring. The obstruction family emits, for each n, the single-row
even partition (2n): evenness gives an invariant on the permanent side while
the first tensor factor being trivial rules one out on the trace side.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, replace
from fractions import Fraction

from . import linalg
from .config import DEFAULT, BudgetError
from .partitions import Partition, is_even
from .weylmod import MultiPoly, perm_stabilizer_invariants

_TRACE_SEED = 91


class ObstructionError(ValueError):
    """A certificate failed verification."""


@dataclass(frozen=True)
class MagicSquare:
    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError(f"entries must form an {self.n}x{self.n} matrix")
        if any(v < 0 for row in self.entries for v in row):
            raise ValueError("entries must be nonnegative")
        sums = {sum(row) for row in self.entries}
        sums |= {sum(self.entries[i][j] for i in range(self.n))
                 for j in range(self.n)}
        if len(sums) != 1:
            raise ValueError("row and column sums must all be equal")

    @property
    def weight(self) -> int:
        return sum(self.entries[0])

    def canonical_form(self) -> tuple[tuple[int, ...], ...]:
        """Lexicographically minimal matrix in the row/column permutation
        orbit."""
        best = None
        for rp in itertools.permutations(range(self.n)):
            rows = [self.entries[i] for i in rp]
            for cp in itertools.permutations(range(self.n)):
                cand = tuple(tuple(row[j] for j in cp) for row in rows)
                if best is None or cand < best:
                    best = cand
        return best

    def orbit(self) -> set[tuple[tuple[int, ...], ...]]:
        out = set()
        for rp in itertools.permutations(range(self.n)):
            rows = [self.entries[i] for i in rp]
            for cp in itertools.permutations(range(self.n)):
                out.add(tuple(tuple(row[j] for j in cp) for row in rows))
        return out


def enumerate_magic_squares(n: int, r: int,
                            size_cap: int | None = None,
                            weight_cap: int | None = None
                            ) -> tuple[list[MagicSquare], int]:
    """All n x n magic squares of weight r plus the number of orbits under
    row/column permutations (canonical-form counting)."""
    if size_cap is None:
        size_cap = DEFAULT.magic_size_cap
    if weight_cap is None:
        weight_cap = DEFAULT.magic_weight_cap
    if n < 1:
        raise ValueError("n must be positive")
    if n > size_cap:
        raise BudgetError(f"n={n} exceeds cap {size_cap}")
    if r < 0:
        raise ValueError("weight must be nonnegative")
    if r > weight_cap:
        raise BudgetError(f"weight {r} exceeds cap {weight_cap}")

    squares: list[MagicSquare] = []
    col_left = [r] * n
    rows_acc: list[tuple[int, ...]] = []

    def compositions(total: int, caps: list[int]):
        """Weak compositions of total with per-coordinate caps."""
        k = len(caps)

        def rec(pos: int, remaining: int, prefix: list[int]):
            if pos == k - 1:
                if remaining <= caps[pos]:
                    prefix.append(remaining)
                    yield tuple(prefix)
                    prefix.pop()
                return
            for v in range(min(remaining, caps[pos]), -1, -1):
                prefix.append(v)
                yield from rec(pos + 1, remaining - v, prefix)
                prefix.pop()

        yield from rec(0, total, [])

    def fill(row_idx: int):
        if row_idx == n - 1:
            last = tuple(col_left)
            if sum(last) == r:
                squares.append(MagicSquare(n, tuple(rows_acc) + (last,)))
            return
        for row in compositions(r, col_left):
            rows_acc.append(row)
            for j in range(n):
                col_left[j] -= row[j]
            fill(row_idx + 1)
            for j in range(n):
                col_left[j] += row[j]
            rows_acc.pop()

    if n == 1:
        squares.append(MagicSquare(1, ((r,),)))
    else:
        fill(0)
    orbits = {sq.canonical_form() for sq in squares}
    return squares, len(orbits)


def magic_orbit_representatives(n: int, r: int, **caps) -> list[MagicSquare]:
    squares, _ = enumerate_magic_squares(n, r, **caps)
    forms = sorted({sq.canonical_form() for sq in squares})
    return [MagicSquare(n, f) for f in forms]


def basic_invariant_poly(A: MagicSquare) -> MultiPoly:
    """p_A: the sum of monomials x^{A'} over the row/column permutation
    orbit of A, a basic permanent-like invariant."""
    n = A.n
    terms = {}
    for mat in A.orbit():
        expo = tuple(v for row in mat for v in row)
        terms[expo] = 1
    return MultiPoly(n * n, terms)


def _magic_monomial_space(n: int, r: int) -> list[tuple[int, ...]]:
    """Degree-nr monomials in the n x n matrix entries whose row and column
    degrees are all equal; these are exactly the weight-r magic squares,
    derived here from the torus condition rather than reusing the magic
    enumerator."""
    nv = n * n
    out = []

    def rec(pos: int, remaining: int, prefix: list[int]):
        if pos == nv - 1:
            prefix.append(remaining)
            expo = tuple(prefix)
            rows = [sum(expo[i * n:(i + 1) * n]) for i in range(n)]
            cols = [sum(expo[i * n + j] for i in range(n)) for j in range(n)]
            if len(set(rows)) == 1 and len(set(cols)) == 1:
                out.append(expo)
            prefix.pop()
            return
        for v in range(remaining, -1, -1):
            prefix.append(v)
            rec(pos + 1, remaining - v, prefix)
            prefix.pop()

    if nv == 1:
        return [(n * r,)]
    rec(0, n * r, [])
    return out


def invariant_ring_dimension_check(n: int, r: int, **caps) -> bool:
    """Two independent computations of the dimension of the degree-nr
    invariant space must agree: the number of magic-square orbits (whose
    p_A are verified linearly independent by exact rank) and the fixed
    subspace of the permutation action on torus-allowed monomials."""
    if n > 3:
        raise ValueError("dimension check is budgeted for n <= 3")
    reps = magic_orbit_representatives(n, r, **caps)
    polys = [basic_invariant_poly(rep) for rep in reps]
    monos = sorted({e for p in polys for e in p.terms})
    if polys:
        index = {e: i for i, e in enumerate(monos)}
        rows = [[0] * len(polys) for _ in monos]
        for j, p in enumerate(polys):
            for e, c in p.terms.items():
                rows[index[e]][j] = c
        if linalg.rank(rows, len(polys)) != len(polys):
            raise RuntimeError("basic invariants p_A are linearly dependent")

    space = _magic_monomial_space(n, r)
    sp_index = {e: i for i, e in enumerate(space)}
    stacked = []
    for gen in _perm_generators(n):
        row_map = {}
        col_map = {}
        for e in space:
            mat = [list(e[i * n:(i + 1) * n]) for i in range(n)]
            rmat = tuple(tuple(mat[gen[i]][j] for j in range(n)) for i in range(n))
            cmat = tuple(tuple(mat[i][gen[j]] for j in range(n)) for i in range(n))
            row_map[e] = tuple(v for row in rmat for v in row)
            col_map[e] = tuple(v for row in cmat for v in row)
        for mapping in (row_map, col_map):
            for e in space:
                row = [0] * len(space)
                row[sp_index[mapping[e]]] += 1
                row[sp_index[e]] -= 1
                if any(row):
                    stacked.append(row)
    fixed_dim = len(space) - (linalg.rank(stacked, len(space)) if stacked else 0)
    if fixed_dim != len(reps):
        raise RuntimeError(
            f"invariant dimension mismatch: {len(reps)} orbit representatives"
            f" vs fixed-space dimension {fixed_dim}")
    return True


def _perm_generators(n: int) -> list[list[int]]:
    if n < 2:
        return []
    swap = list(range(n))
    swap[0], swap[1] = swap[1], swap[0]
    gens = [swap]
    if n > 2:
        gens.append([(i + 1) % n for i in range(n)])
    return gens


def trace_like_invariance_check(n: int, j: int, trials: int = 5,
                                seed: int = _TRACE_SEED) -> bool:
    """Exact check that trace((A X A^{-1})^j) = trace(X^j) for random
    invertible rational A; singular samples are redrawn, never an error."""
    if n < 1 or j < 0 or trials < 1:
        raise ValueError("need n >= 1, j >= 0, trials >= 1")
    rng = random.Random(seed)
    nv = n * n
    X = [[MultiPoly.variable(nv, i * n + k) for k in range(n)] for i in range(n)]

    def sym_mat_mul(P, Q):
        return [[sum((P[i][t] * Q[t][k] for t in range(n)),
                     MultiPoly.zero(nv)) for k in range(n)] for i in range(n)]

    def num_times_sym(A, M):
        return [[sum((M[t][k].scale(A[i][t]) for t in range(n)),
                     MultiPoly.zero(nv)) for k in range(n)] for i in range(n)]

    def sym_times_num(M, B):
        return [[sum((M[i][t].scale(B[t][k]) for t in range(n)),
                     MultiPoly.zero(nv)) for k in range(n)] for i in range(n)]

    def trace(M):
        return sum((M[i][i] for i in range(n)), MultiPoly.zero(nv))

    def mat_power(M, k):
        R = [[MultiPoly.constant(nv, 1) if i == t else MultiPoly.zero(nv)
              for t in range(n)] for i in range(n)]
        for _ in range(k):
            R = sym_mat_mul(R, M)
        return R

    target = trace(mat_power(X, j))
    for _ in range(trials):
        while True:
            A = [[Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                  for _ in range(n)] for _ in range(n)]
            if linalg.det(A) != 0:
                break
        Ainv = linalg.mat_inv(A)
        conj = sym_times_num(num_times_sym(A, X), Ainv)
        if trace(mat_power(conj, j)) != target:
            return False
    return True


@dataclass(frozen=True)
class ObstructionChecks:
    even: bool
    alpha_neq_beta: bool
    invariant_dim: int | None = None


@dataclass(frozen=True)
class ObstructionCertificate:
    """The pair (n, gamma) with its verification record; gamma labels the
    candidate obstruction (trivial) (x) V_gamma(SL_n) with |gamma| = 2n."""

    n: int
    gamma: Partition
    checks: ObstructionChecks

    @property
    def bitlength(self) -> int:
        return n_bits(self.n) + sum(n_bits(p) for p in self.gamma)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "gamma": self.gamma.serialize(),
            "checks": {
                "even": self.checks.even,
                "alpha_neq_beta": self.checks.alpha_neq_beta,
                "invariant_dim": self.checks.invariant_dim,
            },
            "bitlength": self.bitlength,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ObstructionCertificate":
        checks = data.get("checks", {})
        return cls(int(data["n"]), Partition.parse(data["gamma"]),
                   ObstructionChecks(bool(checks.get("even", False)),
                                     bool(checks.get("alpha_neq_beta", False)),
                                     checks.get("invariant_dim")))


def n_bits(v: int) -> int:
    return max(v.bit_length(), 1)


def emit_obstruction_family(N: int):
    """Certificates for n = 2..N with the canonical choice gamma_n = (2n):
    a single even row, so construction takes O(n) integer work and the
    serialized label has O(log n) bits."""
    if N < 2:
        raise ValueError("N must be at least 2")
    for n in range(2, N + 1):
        gamma = Partition((2 * n,))
        yield ObstructionCertificate(
            n, gamma,
            ObstructionChecks(even=True, alpha_neq_beta=bool(gamma)))


def verify_obstruction(cert: ObstructionCertificate,
                       full: bool = False) -> ObstructionCertificate:
    """Structural verification always: gamma must be even (occurrence on the
    permanent side) and nonempty (no invariant on the trace side, where the
    first factor is trivial). With full=True and n <= 3 the invariant
    multiplicity is computed explicitly and must be positive."""
    if cert.gamma.size != 2 * cert.n:
        raise ObstructionError(
            f"|gamma| = {cert.gamma.size} must equal 2n = {2 * cert.n}")
    if not is_even(cert.gamma):
        raise ObstructionError(f"not an obstruction: {cert.gamma} is not even")
    if not cert.gamma:
        raise ObstructionError("not an obstruction: empty gamma")
    inv_dim = cert.checks.invariant_dim
    if full and cert.n <= 3:
        inv_dim = perm_stabilizer_invariants(cert.gamma, cert.n)
        if inv_dim < 1:
            raise ObstructionError(
                "not an obstruction: no stabilizer invariant found")
    return replace(cert, checks=ObstructionChecks(True, True, inv_dim))


def read_certificates(path: str) -> list[ObstructionCertificate]:
    with open(path) as fh:
        data = json.load(fh)
    return [ObstructionCertificate.from_json(d) for d in data]
