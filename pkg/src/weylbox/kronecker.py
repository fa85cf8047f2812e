"""Symmetric-group characters, Kronecker coefficients, and the multiplicity
of determinant-stabilizer invariants.

Characters come from the Murnaghan-Nakayama rule in its beta-set form:
removing a border strip of length r from lam is replacing a first-column
hook length b by b - r, with sign (-1)^(number of hooks jumped over).
Kronecker coefficients are then plain class sums, and the multiplicity of
the trivial SL_m x SL_m representation inside an irreducible of GL(m^2)
reduces to a Kronecker coefficient at a rectangular shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .config import DEFAULT, BudgetError
from .partitions import Partition, partitions_of
from .polytope import QuasiPolynomial, FitError, fit_quasipolynomial


def _betas_to_partition(betas: list[int]) -> tuple[int, ...]:
    betas = sorted(betas, reverse=True)
    l = len(betas)
    parts = tuple(b - (l - 1 - i) for i, b in enumerate(betas))
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    l = len(lam)
    betas = [lam[i] + (l - 1 - i) for i in range(l)]
    beta_set = set(betas)
    total = 0
    for b in betas:
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in betas if nb < x < b)
        new_betas = [x for x in betas if x != b] + [nb]
        total += (-1) ** height * _mn(_betas_to_partition(new_betas), rest)
    return total


def sym_character(lam: Partition, mu: Partition) -> int:
    """Character value chi_lam(mu) of S_n, n = |lam| = |mu|."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"|lam|={lam.size} != |mu|={mu.size}")
    return _mn(tuple(lam), tuple(mu))


def class_size(mu: Partition) -> int:
    """Number of permutations with cycle type mu."""
    mu = Partition(mu)
    z = 1
    mult: dict[int, int] = {}
    for p in mu:
        mult[p] = mult.get(p, 0) + 1
    for part, m in mult.items():
        z *= part ** m * factorial(m)
    return factorial(mu.size) // z


@dataclass(frozen=True)
class CharacterTable:
    """Full character table of S_n: rows chi_lam, columns cycle types."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")

    @property
    def partitions(self) -> tuple[Partition, ...]:
        return tuple(partitions_of(self.n))

    def character(self, lam: Partition, mu: Partition) -> int:
        return sym_character(lam, mu)

    def class_size(self, mu: Partition) -> int:
        return class_size(mu)

    def row(self, lam: Partition) -> tuple[int, ...]:
        return tuple(self.character(lam, mu) for mu in self.partitions)


def kronecker(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Kronecker coefficient: multiplicity of the trivial character in
    chi_lam * chi_mu * chi_nu, symmetric in all three arguments."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    n = lam.size
    if mu.size != n or nu.size != n:
        raise ValueError(
            f"sizes differ: {lam.size}, {mu.size}, {nu.size}")
    if n == 0:
        return 1
    total = 0
    for rho in partitions_of(n):
        total += (class_size(rho) * sym_character(lam, rho)
                  * sym_character(mu, rho) * sym_character(nu, rho))
    value, rem = divmod(total, factorial(n))
    if rem != 0 or value < 0:
        raise RuntimeError(
            f"kronecker class sum is not a nonnegative integer: {total}")
    return value


def det_stabilizer_invariant_mult(lam: Partition, m: int) -> int:
    """Multiplicity of the trivial SL_m x SL_m representation in the
    irreducible GL(m^2)-representation labelled by lam, restricted through
    GL_m x GL_m acting on C^m (x) C^m.

    The restriction multiplicities are Kronecker coefficients; the
    SL-trivial constituents are those with both GL_m labels rectangular,
    which forces the single shape R = (|lam|/m, ..., |lam|/m). The discrete
    transpose part of the full determinant stabilizer is ignored here.
    """
    lam = Partition(lam)
    if m < 1:
        raise ValueError("m must be positive")
    if len(lam) > m * m:
        raise ValueError(f"length {len(lam)} exceeds m^2 = {m * m}")
    if lam.size % m != 0:
        return 0
    R = Partition((lam.size // m,) * m)
    return kronecker(lam, R, R)


@dataclass(frozen=True)
class GStretchSeries:
    lam: Partition
    m: int
    values: tuple[int, ...]
    fit: QuasiPolynomial | None


def g_stretch(lam: Partition, m: int, K: int,
              table_cap: int | None = None,
              max_period: int | None = None,
              max_degree: int | None = None,
              holdout: int | None = None) -> GStretchSeries:
    """The stretching function k -> det_stabilizer_invariant_mult(k*lam, m)
    for k = 1..K, with an empirical quasi-polynomial fit when K leaves room
    for a holdout."""
    lam = Partition(lam)
    if table_cap is None:
        table_cap = DEFAULT.char_table_max_n
    if max_period is None:
        max_period = DEFAULT.max_period
    if max_degree is None:
        max_degree = DEFAULT.max_degree
    if holdout is None:
        holdout = DEFAULT.holdout
    if K < 1:
        raise ValueError("K must be positive")
    for k in range(1, K + 1):
        if k * lam.size > table_cap:
            raise BudgetError(
                f"character table budget exceeded at k={k}: "
                f"|k*lam|={k * lam.size} > {table_cap}")
    values = tuple(det_stabilizer_invariant_mult(lam.scale(k), m)
                   for k in range(1, K + 1))
    fit = None
    if K >= holdout + 2:
        try:
            fit = fit_quasipolynomial(values, max_period, max_degree, holdout)
        except FitError:
            fit = None  # recorded as empirical data without a fit
    return GStretchSeries(lam, m, values, fit)
