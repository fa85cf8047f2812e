"""Exact symmetric-polynomial calculus.

Schur polynomials are built from their semistandard-tableau content
generating functions, products are multiplied out monomial by monomial, and
plethysm is computed by literal substitution of the monomials of the inner
polynomial into the outer one. Nothing here knows about Littlewood-Richardson
or plethysm rules: this module is the brute-force oracle the rest of the
toolkit is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

from .config import DEFAULT, BudgetError
from .partitions import Partition, iter_ssyt, kostka, partitions_of


class NonHomogeneousError(ValueError):
    """Schur expansion requires a homogeneous input."""


def _distinct_permutations(items: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All distinct permutations of a multiset, without generating duplicates."""
    pool = sorted(items, reverse=True)
    n = len(pool)
    out = [0] * n

    def rec(remaining: list[int], depth: int):
        if depth == n:
            yield tuple(out)
            return
        prev = None
        for i, v in enumerate(remaining):
            if v == prev:
                continue
            prev = v
            out[depth] = v
            yield from rec(remaining[:i] + remaining[i + 1:], depth + 1)

    yield from rec(pool, 0)


@dataclass(frozen=True)
class SymPoly:
    """A symmetric polynomial in ``num_vars`` variables, stored in the
    monomial-symmetric basis: ``terms[lam]`` is the coefficient of m_lam."""

    num_vars: int
    terms: Mapping[Partition, object]

    def __post_init__(self):
        clean = {}
        for key, coeff in self.terms.items():
            key = Partition(key)
            if coeff == 0:
                continue
            if len(key) > self.num_vars:
                raise ValueError(
                    f"key {key} longer than variable count {self.num_vars}")
            clean[key] = coeff
        object.__setattr__(self, "terms", clean)

    @property
    def degree(self) -> int | None:
        """Homogeneous degree, or None for the zero polynomial."""
        sizes = {k.size for k in self.terms}
        if not sizes:
            return None
        if len(sizes) > 1:
            raise NonHomogeneousError(f"mixed degrees {sorted(sizes)}")
        return sizes.pop()

    def is_homogeneous(self) -> bool:
        return len({k.size for k in self.terms}) <= 1

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "SymPoly") -> "SymPoly":
        if self.num_vars != other.num_vars:
            raise ValueError("variable counts differ")
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return SymPoly(self.num_vars, terms)

    def scale(self, c) -> "SymPoly":
        return SymPoly(self.num_vars, {k: c * v for k, v in self.terms.items()})

    def raw_monomials(self) -> dict[tuple[int, ...], object]:
        """Expand into plain exponent-vector form (length num_vars)."""
        out: dict[tuple[int, ...], object] = {}
        for key, coeff in self.terms.items():
            padded = key.padded(self.num_vars)
            for expo in _distinct_permutations(padded):
                out[expo] = coeff
        return out

    def __mul__(self, other: "SymPoly") -> "SymPoly":
        if self.num_vars != other.num_vars:
            raise ValueError("variable counts differ")
        raw1 = self.raw_monomials()
        raw2 = other.raw_monomials()
        if len(raw1) > len(raw2):
            raw1, raw2 = raw2, raw1
        acc: dict[Partition, object] = {}
        # collect only monomials that are already sorted: those are exactly
        # the m_lam representatives, and symmetry supplies the rest
        for e1, c1 in raw1.items():
            for e2, c2 in raw2.items():
                merged = tuple(a + b for a, b in zip(e1, e2))
                srt = sorted(merged, reverse=True)
                if list(merged) != srt:
                    continue
                key = Partition(merged)
                acc[key] = acc.get(key, 0) + c1 * c2
        return SymPoly(self.num_vars, acc)


@lru_cache(maxsize=None)
def schur(lam: Partition, N: int) -> SymPoly:
    """Schur polynomial s_lam(x_1..x_N) as its SSYT content generating
    function: the m_mu coefficient is the Kostka number K_{lam,mu}."""
    lam = Partition(lam)
    if len(lam) > N:
        return SymPoly(N, {})
    terms = {}
    for mu in partitions_of(lam.size, max_length=max(N, 1)):
        k = kostka(lam, tuple(mu)) if lam else 1
        if k:
            terms[mu] = k
    if not lam:
        terms = {Partition(): 1}
    return SymPoly(N, terms)


def schur_expand(f: SymPoly) -> dict[Partition, object]:
    """Expand a homogeneous symmetric polynomial in the Schur basis.

    Triangular elimination: repeatedly strip the lexicographically largest
    monomial key, which is dominance-maximal, using s_key = m_key + lower
    terms. Exact rational coefficients pass through unchanged.
    """
    if not f.is_homogeneous():
        raise NonHomogeneousError("cannot Schur-expand a nonhomogeneous polynomial")
    work = dict(f.terms)
    out: dict[Partition, object] = {}
    while work:
        top = max(work)
        coeff = work.pop(top)
        if coeff == 0:
            continue
        out[top] = coeff
        for key, c in schur(top, f.num_vars).terms.items():
            if key == top:
                continue
            nxt = work.get(key, 0) - coeff * c
            if nxt:
                work[key] = nxt
            else:
                work.pop(key, None)
    return out


def product_expand(alpha: Partition, beta: Partition) -> dict[Partition, int]:
    """Littlewood-Richardson coefficients c^lam_{alpha,beta} as the Schur
    expansion of s_alpha * s_beta, computed in |alpha|+|beta| variables
    (enough to determine every coefficient)."""
    alpha, beta = Partition(alpha), Partition(beta)
    N = alpha.size + beta.size
    prod = schur(alpha, N) * schur(beta, N)
    return {k: int(v) for k, v in schur_expand(prod).items()}


def plethysm_expand(pi: Partition, mu: Partition,
                    degree_cap: int | None = None) -> dict[Partition, int]:
    """Plethysm constants a^lam_{pi,mu} by monomial substitution.

    The monomials of s_mu (with multiplicity, one per semistandard tableau)
    are listed in N = |pi|*|mu| variables; s_pi is then evaluated with the
    monomial list as its alphabet and the result expanded in the Schur basis.
    """
    pi, mu = Partition(pi), Partition(mu)
    if degree_cap is None:
        degree_cap = DEFAULT.plethysm_degree_cap
    degree = pi.size * mu.size
    if degree > degree_cap:
        raise BudgetError(
            f"plethysm degree {degree} exceeds cap {degree_cap}")
    if not pi:
        return {Partition(): 1}
    N = degree
    monomials = [content_vector(rows, N) for rows in iter_ssyt(mu, N)] \
        if mu else [(0,) * N]
    acc: dict[Partition, int] = {}
    shape = tuple(pi)
    M = len(monomials)
    if len(shape) > M:
        return {}

    # fused SSYT-of-shape-pi enumeration over the monomial alphabet, keeping a
    # running exponent sum; only keep exponent vectors that are sorted, i.e.
    # the m_lam representatives
    from .partitions import conjugate
    col_len = conjugate(Partition(shape)).padded(shape[0])
    cells = [(r, c) for r, width in enumerate(shape) for c in range(width)]
    rows_state = [[0] * width for width in shape]
    expo = [0] * N

    def fill(idx: int):
        if idx == len(cells):
            for t in range(N - 1):
                if expo[t] < expo[t + 1]:
                    return
            key = Partition(expo)
            acc[key] = acc.get(key, 0) + 1
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = rows_state[r][c - 1]
        if r > 0:
            lo = max(lo, rows_state[r - 1][c] + 1)
        hi = M - (col_len[c] - r - 1)
        for v in range(lo, hi + 1):
            rows_state[r][c] = v
            mono = monomials[v - 1]
            for t in range(N):
                expo[t] += mono[t]
            fill(idx + 1)
            for t in range(N):
                expo[t] -= mono[t]

    fill(0)
    poly = SymPoly(N, acc)
    return {k: int(v) for k, v in schur_expand(poly).items()}


def content_vector(rows: tuple[tuple[int, ...], ...], n: int) -> tuple[int, ...]:
    counts = [0] * n
    for row in rows:
        for e in row:
            counts[e - 1] += 1
    return tuple(counts)
