"""Littlewood-Richardson coefficients by two independent routes.

Route one is the classical rule: count skew semistandard tableaux of shape
lam/alpha and content beta whose reverse reading word is a lattice word.
Route two is polyhedral: count integer points of the hive polytope, a
triangular array with rhombus concavity inequalities whose boundary is pinned
to the partial sums of alpha, beta and lam. The public coefficient routine
runs both and refuses to answer when they disagree; positivity is decided by
exact LP feasibility of the hive without any enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .config import DEFAULT, BudgetError
from .partitions import Partition
from .polytope import (Polytope, QuasiPolynomial, count_integer_points,
                       feasible, fit_quasipolynomial)


class OracleMismatchError(RuntimeError):
    """The tableau rule and the hive count disagree: a bug, never a value."""


@dataclass(frozen=True)
class LRQuery:
    alpha: Partition
    beta: Partition
    lam: Partition

    def __post_init__(self):
        object.__setattr__(self, "alpha", Partition(self.alpha))
        object.__setattr__(self, "beta", Partition(self.beta))
        object.__setattr__(self, "lam", Partition(self.lam))

    def sizes_match(self) -> bool:
        return self.lam.size == self.alpha.size + self.beta.size

    def scale(self, k: int) -> "LRQuery":
        return LRQuery(self.alpha.scale(k), self.beta.scale(k), self.lam.scale(k))


@dataclass(frozen=True)
class StretchSeries:
    query: LRQuery
    values: tuple[int, ...]
    fit: QuasiPolynomial | None


def _hive_vertices(side: int) -> list[tuple[int, int, int]]:
    return [(i, j, side - i - j) for i in range(side + 1)
            for j in range(side - i + 1)]


def hive_polytope(q: LRQuery, side: int | None = None,
                  side_cap: int | None = None) -> Polytope:
    """The hive model for c^lam_{alpha,beta}.

    Variables are the entries of a triangular array of side n indexed by
    (i, j, k) with i+j+k = n. Rows are the three families of rhombus
    inequalities plus paired <=/>= rows pinning the boundary: the j-edge
    carries the partial sums of alpha, the k-edge continues with beta, and
    the i-edge carries the partial sums of lam. Integer points then biject
    with Littlewood-Richardson fillings.
    """
    if side_cap is None:
        side_cap = DEFAULT.hive_side_cap
    if not q.sizes_match():
        raise ValueError(
            f"size mismatch: |lam|={q.lam.size} != |alpha|+|beta|="
            f"{q.alpha.size + q.beta.size}")
    n = max(len(q.alpha), len(q.beta), len(q.lam), 1)
    if side is not None:
        if side < n:
            raise ValueError(f"side {side} too small for lengths up to {n}")
        n = side
    if n > side_cap:
        raise BudgetError(f"hive side {n} exceeds cap {side_cap}")

    verts = _hive_vertices(n)
    index = {v: t for t, v in enumerate(verts)}
    T = len(verts)
    Z = Fraction(0)

    rows: list[tuple[Fraction, ...]] = []
    rhs: list[Fraction] = []

    def add_row(entries: dict[tuple[int, int, int], int], bound: Fraction):
        row = [Z] * T
        for v, coeff in entries.items():
            row[index[v]] += Fraction(coeff)
        rows.append(tuple(row))
        rhs.append(bound)

    # rhombus concavity, three orientations per inner lattice triangle
    for i in range(n - 1):
        for j in range(n - 1 - i):
            k = n - 2 - i - j
            add_row({(i, j + 2, k): 1, (i + 1, j, k + 1): 1,
                     (i + 1, j + 1, k): -1, (i, j + 1, k + 1): -1}, Z)
            add_row({(i + 2, j, k): 1, (i, j + 1, k + 1): 1,
                     (i + 1, j + 1, k): -1, (i + 1, j, k + 1): -1}, Z)
            add_row({(i, j, k + 2): 1, (i + 1, j + 1, k): 1,
                     (i + 1, j, k + 1): -1, (i, j + 1, k + 1): -1}, Z)

    alpha = q.alpha.padded(n)
    beta = q.beta.padded(n)
    lam = q.lam.padded(n)
    boundary: dict[tuple[int, int, int], int] = {}
    s = 0
    for j in range(n + 1):
        boundary[(0, j, n - j)] = s  # partial sums of alpha
        if j < n:
            s += alpha[j]
    s = q.alpha.size
    for i in range(1, n + 1):
        s += beta[i - 1]
        boundary[(i, n - i, 0)] = s  # |alpha| plus partial sums of beta
    s = 0
    for i in range(1, n + 1):
        s += lam[i - 1]
        boundary[(i, 0, n - i)] = s  # partial sums of lam; corner agrees

    for v, value in sorted(boundary.items()):
        bound = Fraction(value)
        add_row({v: 1}, bound)
        add_row({v: -1}, -bound)

    return Polytope(tuple(rows), tuple(rhs))


def _skew_lr_count(alpha: Partition, beta: Partition, lam: Partition) -> int:
    """Classical rule: skew semistandard fillings of lam/alpha with content
    beta whose reverse reading word (rows read right to left, top to bottom)
    is a lattice word."""
    if lam.size != alpha.size + beta.size:
        return 0
    rows = len(lam)
    if len(alpha) > rows:
        return 0
    a = alpha.padded(rows)
    if any(a[r] > lam[r] for r in range(rows)):
        return 0
    if not beta:
        return 1 if lam == alpha else 0
    nletters = len(beta)
    # cells in reverse reading order: per row, right to left
    cells = [(r, c) for r in range(rows) for c in range(lam[r] - 1, a[r] - 1, -1)]
    grid = [[0] * lam[r] for r in range(rows)]
    counts = [0] * (nletters + 1)

    def above(r: int, c: int) -> int:
        if r == 0 or c >= lam[r - 1] or c < a[r - 1]:
            return 0
        return grid[r - 1][c]

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        right = grid[r][c + 1] if c + 1 < lam[r] else nletters
        lo = above(r, c) + 1
        total = 0
        for e in range(lo, right + 1):
            if counts[e] >= beta[e - 1]:
                continue
            if e > 1 and counts[e] >= counts[e - 1]:
                continue  # lattice prefix condition
            grid[r][c] = e
            counts[e] += 1
            total += fill(idx + 1)
            counts[e] -= 1
        grid[r][c] = 0
        return total

    return fill(0)


def lr_coefficient(q: LRQuery, side_cap: int | None = None) -> int:
    """c^lam_{alpha,beta} computed by BOTH the tableau rule and hive
    counting; raises OracleMismatchError when the two disagree."""
    if not q.sizes_match():
        return 0
    t = _skew_lr_count(q.alpha, q.beta, q.lam)
    h = count_integer_points(hive_polytope(q, side_cap=side_cap))
    if t != h:
        raise OracleMismatchError(
            f"oracle mismatch for {q}: tableau rule {t}, hive count {h}")
    return t


def lr_positive(q: LRQuery, side_cap: int | None = None) -> bool:
    """Positivity via the saturation property: c > 0 iff the hive polytope
    is nonempty, decided by exact LP with no integer enumeration."""
    if not q.sizes_match():
        return False
    return feasible(hive_polytope(q, side_cap=side_cap))


def lr_stretch(q: LRQuery, K: int, max_period: int | None = None,
               max_degree: int | None = None, holdout: int | None = None,
               side_cap: int | None = None) -> StretchSeries:
    """Counts at the k-scaled query for k = 1..K, with a quasi-polynomial fit.

    The k-scaled hive polytope must coincide with the k-dilation of the
    unscaled one (same matrix, right-hand side scaled by k); this structural
    identity is asserted, not assumed.
    """
    if K < 4:
        raise ValueError("need K >= 4 for a meaningful stretch series")
    if max_period is None:
        max_period = DEFAULT.max_period
    if max_degree is None:
        max_degree = DEFAULT.max_degree
    if holdout is None:
        holdout = DEFAULT.holdout
    if holdout < 2:
        raise ValueError("holdout must be at least 2")
    if not q.sizes_match():
        raise ValueError("size mismatch in stretch query")

    base = hive_polytope(q, side_cap=side_cap)
    values = []
    for k in range(1, K + 1):
        Pk = hive_polytope(q.scale(k), side_cap=side_cap)
        if Pk.A != base.A or Pk.b != base.dilate(k).b:
            raise RuntimeError(
                f"hive dilation identity violated at k={k}")  # bug guard
        values.append(count_integer_points(Pk))
    fit = fit_quasipolynomial(values, max_period, max_degree, holdout)
    return StretchSeries(q, tuple(values), fit)
