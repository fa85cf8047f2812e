"""Explicit Weyl-module models inside a polynomial ring.

The model realizes the irreducible GL_n representation labelled by lam as the
span of column-minor products e_T inside C[Z], Z an n x n matrix of
variables, with the action (g . f)(Z) = f(Z g). The semistandard e_T form a
basis; group elements act by exact linear substitution followed by an exact
linear solve against that basis. On top of the models sit the fixed-subspace
solvers: invariants of the permanent stabilizer, the symmetry
characterizations of the determinant and the permanent, and the concrete
irreducibility criterion used for the permanent's stability check.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .config import DEFAULT, BudgetError
from .partitions import (Partition, Tableau, canonical_tableau, dim_weyl,
                         enumerate_ssyt)

_HWV_SEED = 178
_TRIALS_PER_CHECK = 5


class MultiPoly:
    """Exact multivariate polynomial: exponent tuples over a fixed variable
    count mapping to rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], object] = {}
        if terms:
            for expo, coeff in terms.items():
                if coeff:
                    self.terms[tuple(expo)] = coeff

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, idx: int) -> "MultiPoly":
        expo = [0] * nvars
        expo[idx] = 1
        return cls(nvars, {tuple(expo): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly(self.nvars, out)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "MultiPoly":
        if not c:
            return MultiPoly(self.nvars)
        return MultiPoly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        out: dict[tuple[int, ...], object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return MultiPoly(self.nvars, out)

    def pow(self, k: int) -> "MultiPoly":
        result = MultiPoly.constant(self.nvars, 1)
        for _ in range(k):
            result = result * self
        return result

    def derivative(self, idx: int) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            if e[idx]:
                ne = list(e)
                ne[idx] -= 1
                out[tuple(ne)] = c * e[idx]
        return MultiPoly(self.nvars, out)

    def compose_linear(self, images: list["MultiPoly"]) -> "MultiPoly":
        """Substitute variable t by images[t] (all linear or not, exact)."""
        result = MultiPoly(self.nvars)
        power_cache: dict[tuple[int, int], MultiPoly] = {}
        for e, c in self.terms.items():
            term = MultiPoly.constant(self.nvars, c)
            for t, k in enumerate(e):
                if k == 0:
                    continue
                key = (t, k)
                if key not in power_cache:
                    power_cache[key] = images[t].pow(k)
                term = term * power_cache[key]
            result = result + term
        return result

    def permute_variables(self, perm: list[int]) -> "MultiPoly":
        """Exponent of variable t moves to perm[t]."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for t, k in enumerate(e):
                if k:
                    ne[perm[t]] += k
            key = tuple(ne)
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return MultiPoly(self.nvars, out)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        return sorted(self.terms.items(), reverse=True)

    def to_string(self, names: list[str] | None = None) -> str:
        if self.is_zero():
            return "0"
        if names is None:
            names = [f"x{t}" for t in range(self.nvars)]
        parts = []
        for e, c in self.sorted_terms():
            factors = [f"{names[t]}^{k}" if k > 1 else names[t]
                       for t, k in enumerate(e) if k]
            mono = "*".join(factors) if factors else "1"
            coeff = Fraction(c)
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            piece = mono if mag == 1 and factors else f"{mag}*{mono}"
            parts.append((sign, piece))
        first_sign, first = parts[0]
        text = (("-" if first_sign == "-" else "") + first)
        for sign, piece in parts[1:]:
            text += f" {sign} {piece}"
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_string()})"


def matrix_variable_names(n: int) -> list[str]:
    return [f"z{i + 1}{j + 1}" for i in range(n) for j in range(n)]


def _var(n: int, i: int, j: int) -> int:
    return i * n + j


def minor(n: int, rows: list[int], cols: list[int]) -> MultiPoly:
    """Determinant of the submatrix of Z on the given rows and columns, in
    the given column order."""
    nv = n * n
    out: dict[tuple[int, ...], object] = {}
    l = len(rows)
    for perm in itertools.permutations(range(l)):
        inv = sum(1 for a in range(l) for b in range(a + 1, l)
                  if perm[a] > perm[b])
        sign = -1 if inv % 2 else 1
        expo = [0] * nv
        for r in range(l):
            expo[_var(n, rows[r], cols[perm[r]])] += 1
        key = tuple(expo)
        v = out.get(key, 0) + sign
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return MultiPoly(nv, out)


def deruyts_generator(T: Tableau, n: int) -> MultiPoly:
    """The polynomial e_T: product over columns c of T of the minor of Z on
    the first len(c) rows and the columns named by c's entries. Zero exactly
    when some column repeats an entry."""
    if any(e > n for row in T.rows for e in row):
        raise ValueError(f"tableau entries must lie in 1..{n}")
    result = MultiPoly.constant(n * n, 1)
    for col in T.columns():
        l = len(col)
        result = result * minor(n, list(range(l)), [e - 1 for e in col])
        if result.is_zero():
            break
    return result


@dataclass(frozen=True)
class WeylModuleModel:
    """Basis {e_T : T semistandard} of the GL_n irreducible labelled by lam,
    together with the monomial coordinatization used for exact solves."""

    lam: Partition
    n: int
    tableaux: tuple[Tableau, ...]
    basis: tuple[MultiPoly, ...]
    monomials: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def basis_matrix_rows(self) -> list[list]:
        index = {m: i for i, m in enumerate(self.monomials)}
        rows = [[0] * self.dimension for _ in self.monomials]
        for col, poly in enumerate(self.basis):
            for e, c in poly.terms.items():
                rows[index[e]][col] = c
        return rows

    def coordinates_of(self, polys: list[MultiPoly]) -> list[list[Fraction]]:
        """Exact coordinates of each poly in the e_T basis; raises when a
        poly falls outside the span (that is a bug, never a value)."""
        index = {m: i for i, m in enumerate(self.monomials)}
        nrows = len(self.monomials)
        B = self.basis_matrix_rows()
        F = [[0] * len(polys) for _ in range(nrows)]
        for j, poly in enumerate(polys):
            for e, c in poly.terms.items():
                if e not in index:
                    raise RuntimeError(
                        "polynomial leaves the Weyl-module span: basis bug")
                F[index[e]][j] = c
        try:
            X = linalg.solve_columns(B, F)
        except ValueError as exc:
            raise RuntimeError(f"exact solve failed: {exc}") from exc
        return X


def weyl_module(lam: Partition, n: int,
                dim_cap: int | None = None) -> WeylModuleModel:
    """Construct the explicit model; linear independence of the basis is
    verified by an exact rank computation, not assumed."""
    lam = Partition(lam)
    if dim_cap is None:
        dim_cap = DEFAULT.weyl_dim_cap
    dim = dim_weyl(lam, n)
    if dim > dim_cap:
        raise BudgetError(f"dim {dim} exceeds cap {dim_cap}")
    tableaux = tuple(enumerate_ssyt(lam, n))
    basis = tuple(deruyts_generator(T, n) for T in tableaux)
    monomials = tuple(sorted({e for p in basis for e in p.terms}))
    model = WeylModuleModel(lam, n, tableaux, basis, monomials)
    if dim != len(tableaux):
        raise RuntimeError("tableau enumeration disagrees with dimension")
    if dim:
        r = linalg.rank(model.basis_matrix_rows(), dim)
        if r != dim:
            raise RuntimeError(
                f"basis polynomials are dependent: rank {r} != dim {dim}")
    return model


def group_action_matrix(M: WeylModuleModel, g) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix of f(Z) -> f(Z g) in the e_T basis; column T holds the
    coordinates of the transformed e_T. Exact, and a homomorphism:
    matrix(gh) = matrix(g) matrix(h)."""
    n = M.n
    g = [[Fraction(x) for x in row] for row in g]
    if len(g) != n or any(len(row) != n for row in g):
        raise ValueError(f"group element must be {n}x{n}")
    if linalg.det(g) == 0:
        raise ValueError("singular matrix cannot act on the module")
    nv = n * n
    images = [MultiPoly(nv) for _ in range(nv)]
    for i in range(n):
        for j in range(n):
            # z_ij -> sum_k z_ik g[k][j]
            terms = {}
            for k in range(n):
                if g[k][j]:
                    expo = [0] * nv
                    expo[_var(n, i, k)] = 1
                    terms[tuple(expo)] = g[k][j]
            images[_var(n, i, j)] = MultiPoly(nv, terms)
    transformed = [p.compose_linear(images) for p in M.basis]
    X = M.coordinates_of(transformed)
    dim = M.dimension
    return tuple(tuple(X[r][c] for c in range(dim)) for r in range(dim))


def permutation_matrix(n: int, perm: list[int]) -> list[list[Fraction]]:
    """0/1 matrix sending basis vector j to perm[j]."""
    mat = [[Fraction(0)] * n for _ in range(n)]
    for j, i in enumerate(perm):
        mat[i][j] = Fraction(1)
    return mat


def symmetric_group_generators(n: int) -> list[list[list[Fraction]]]:
    """Permutation matrices generating S_n (plain 0/1 lift into GL_n)."""
    if n < 2:
        return []
    swap = list(range(n))
    swap[0], swap[1] = swap[1], swap[0]
    cycle = [(i + 1) % n for i in range(n)]
    gens = [permutation_matrix(n, swap)]
    if n > 2:
        gens.append(permutation_matrix(n, cycle))
    return gens


def highest_weight_vector(M: WeylModuleModel) -> int:
    """Index of e_{T0}, T0 the canonical tableau with i-th row all i's.

    Verified, not assumed: e_{T0} must be an eigenvector of the action of
    five pseudo-random upper-triangular rational matrices, and the only
    basis element with that property.
    """
    if M.dimension == 0:
        raise ValueError("zero module has no highest weight vector")
    T0 = canonical_tableau(M.lam)
    idx = M.tableaux.index(T0)
    rng = random.Random(_HWV_SEED)
    candidates = set(range(M.dimension))
    for _ in range(_TRIALS_PER_CHECK):
        b = [[Fraction(0)] * M.n for _ in range(M.n)]
        for i in range(M.n):
            b[i][i] = Fraction(rng.randint(1, 9))
            for j in range(i + 1, M.n):
                b[i][j] = Fraction(rng.randint(-9, 9), rng.randint(1, 3))
        A = group_action_matrix(M, b)
        candidates = {s for s in candidates
                      if all(A[r][s] == 0 for r in range(M.dimension) if r != s)
                      and A[s][s] != 0}
    if candidates != {idx}:
        raise RuntimeError(
            f"highest weight verification failed: eigen lines {sorted(candidates)}"
            f" vs canonical index {idx}")
    return idx


def fixed_subspace_dim(M: WeylModuleModel, generators, weight="any") -> int:
    """Dimension of {v in the weight subspace : action(g) v = v for all g}.

    The weight subspace is the span of the e_T with content(T) equal to the
    given vector over 1..n ("any" takes the whole module). The conditions
    are imposed over the full module, so non-invariant weight subspaces are
    handled correctly.
    """
    dim = M.dimension
    if dim == 0:
        return 0
    if weight == "any":
        cols = list(range(dim))
    else:
        weight = tuple(weight)
        cols = [t for t, T in enumerate(M.tableaux)
                if T.content(M.n) == weight]
    if not cols:
        return 0
    rows = []
    for g in generators:
        A = group_action_matrix(M, g)
        for r in range(dim):
            row = [A[r][t] - (1 if r == t else 0) for t in cols]
            if any(row):
                rows.append(row)
    if not rows:
        return len(cols)
    return len(cols) - linalg.rank(rows, len(cols))


def perm_stabilizer_invariants(gamma: Partition, n: int,
                               dim_cap: int | None = None) -> int:
    """Multiplicity of permanent-stabilizer invariants in the SL_n x SL_n
    representation (trivial) (x) V_gamma, computed inside V_gamma(GL_n).

    The stabilizer's torus forces the constant content (2, ..., 2), since
    |gamma| = 2n; the discrete part acts through plain 0/1 permutation
    matrices (this lift convention is validated by the even-partition
    acceptance gate). The transpose flip of the full stabilizer does not
    preserve the factor (trivial) (x) V_gamma and is deliberately omitted.
    """
    gamma = Partition(gamma)
    if gamma.size != 2 * n:
        raise ValueError(f"|gamma| = {gamma.size} must equal 2n = {2 * n}")
    if len(gamma) > n:
        raise ValueError(f"length {len(gamma)} exceeds n = {n}")
    M = weyl_module(gamma, n, dim_cap=dim_cap)
    gens = symmetric_group_generators(n)
    return fixed_subspace_dim(M, gens, weight=(2,) * n)


# ---------------------------------------------------------------------------
# symmetry characterization of det and perm
# ---------------------------------------------------------------------------

def _degree_monomials(nvars: int, degree: int):
    """All exponent vectors of the given total degree."""
    def rec(pos: int, remaining: int, prefix: list[int]):
        if pos == nvars - 1:
            prefix.append(remaining)
            yield tuple(prefix)
            prefix.pop()
            return
        for v in range(remaining, -1, -1):
            prefix.append(v)
            yield from rec(pos + 1, remaining - v, prefix)
            prefix.pop()
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    yield from rec(0, degree, [])


def _row_col_degrees(expo: tuple[int, ...], m: int):
    row = [0] * m
    col = [0] * m
    for t, k in enumerate(expo):
        if k:
            row[t // m] += k
            col[t % m] += k
    return row, col


def det_polynomial(m: int) -> MultiPoly:
    return minor(m, list(range(m)), list(range(m)))


def perm_polynomial(m: int) -> MultiPoly:
    nv = m * m
    terms = {}
    for perm in itertools.permutations(range(m)):
        expo = [0] * nv
        for i in range(m):
            expo[_var(m, i, perm[i])] += 1
        terms[tuple(expo)] = 1
    return MultiPoly(nv, terms)


def _kernel_intersection(basis: list[dict], operators) -> list[dict]:
    """Iteratively intersect the kernel of each operator with the current
    subspace; vectors are sparse dicts over monomials."""
    for op in operators:
        if not basis:
            return []
        images = [op(vec) for vec in basis]
        support = sorted({m for img in images for m in img})
        if support:
            sup_index = {m: i for i, m in enumerate(support)}
            rows = [[0] * len(basis) for _ in support]
            for j, img in enumerate(images):
                for mkey, c in img.items():
                    rows[sup_index[mkey]][j] = c
            combos = linalg.nullspace(rows, len(basis))
        else:
            combos = [tuple(Fraction(1) if i == j else Fraction(0)
                            for j in range(len(basis)))
                      for i in range(len(basis))]
        new_basis = []
        for combo in combos:
            vec: dict = {}
            for coeff, old in zip(combo, basis):
                if coeff == 0:
                    continue
                for mkey, c in old.items():
                    v = vec.get(mkey, 0) + coeff * c
                    if v:
                        vec[mkey] = v
                    else:
                        vec.pop(mkey, None)
            if vec:
                new_basis.append(vec)
        basis = new_basis
    return basis


def _sparse_from_poly(p: MultiPoly) -> dict:
    return dict(p.terms)


def _poly_from_sparse(nvars: int, vec: dict) -> MultiPoly:
    return MultiPoly(nvars, vec)


def symmetry_characterization_space(kind: str, size: int) -> tuple[int, list[MultiPoly]]:
    """Dimension and basis of the space of degree-m forms on an m x m matrix
    sharing the symmetries of det (kind="det") or perm (kind="perm").

    det: joint kernel, inside degree-m forms, of the infinitesimal left and
    right sl_m actions (off-diagonal derivations plus diagonal differences)
    together with transpose symmetry.

    perm: monomials whose row and column degrees are all equal (the torus
    constraint from the product-one condition on diagonal factors), fixed by
    row permutations, column permutations, and transpose.
    """
    if size not in (2, 3):
        raise ValueError(f"unsupported size {size}: only 2 and 3 are in budget")
    if kind not in ("det", "perm"):
        raise ValueError(f"kind must be 'det' or 'perm', got {kind!r}")
    m = size
    nv = m * m

    if kind == "det":
        monos = list(_degree_monomials(nv, m))
        # the diagonal-difference derivations act diagonally on monomials
        # with eigenvalue (row or column degree difference): their joint
        # kernel is the span of monomials with constant row and column
        # degree vectors
        filtered = [e for e in monos
                    if len(set(_row_col_degrees(e, m)[0])) == 1
                    and len(set(_row_col_degrees(e, m)[1])) == 1]
        basis = [{e: 1} for e in filtered]

        operators = []
        for a in range(m):
            for b in range(m):
                if a == b:
                    continue

                def left_op(vec, a=a, b=b):
                    # sum_j y_bj d/dy_aj
                    p = _poly_from_sparse(nv, vec)
                    out = MultiPoly(nv)
                    for j in range(m):
                        out = out + (p.derivative(_var(m, a, j))
                                     * MultiPoly.variable(nv, _var(m, b, j)))
                    return _sparse_from_poly(out)

                def right_op(vec, a=a, b=b):
                    # sum_i y_ia d/dy_ib
                    p = _poly_from_sparse(nv, vec)
                    out = MultiPoly(nv)
                    for i in range(m):
                        out = out + (p.derivative(_var(m, i, b))
                                     * MultiPoly.variable(nv, _var(m, i, a)))
                    return _sparse_from_poly(out)

                operators.append(left_op)
                operators.append(right_op)

        transpose_perm = [_var(m, t % m, t // m) for t in range(nv)]

        def transpose_op(vec):
            p = _poly_from_sparse(nv, vec)
            return _sparse_from_poly(p.permute_variables(transpose_perm) - p)

        operators.append(transpose_op)
        result = _kernel_intersection(basis, operators)
        return len(result), [_poly_from_sparse(nv, v) for v in result]

    # perm: torus filter plus finite generators
    monos = [e for e in _degree_monomials(nv, m)
             if len(set(_row_col_degrees(e, m)[0])) == 1
             and len(set(_row_col_degrees(e, m)[1])) == 1]
    basis = [{e: 1} for e in monos]
    substitutions = []
    for gen in _perm_group_generators(m):
        row_perm = [_var(m, gen[t // m], t % m) for t in range(nv)]
        col_perm = [_var(m, t // m, gen[t % m]) for t in range(nv)]
        substitutions.append(row_perm)
        substitutions.append(col_perm)
    substitutions.append([_var(m, t % m, t // m) for t in range(nv)])  # transpose

    operators = []
    for sub in substitutions:
        def op(vec, sub=sub):
            p = _poly_from_sparse(nv, vec)
            return _sparse_from_poly(p.permute_variables(sub) - p)
        operators.append(op)
    result = _kernel_intersection(basis, operators)
    return len(result), [_poly_from_sparse(nv, v) for v in result]


def _perm_group_generators(n: int) -> list[list[int]]:
    if n < 2:
        return []
    swap = list(range(n))
    swap[0], swap[1] = swap[1], swap[0]
    gens = [swap]
    if n > 2:
        gens.append([(i + 1) % n for i in range(n)])
    return gens


def symmetry_characterization_dim(kind: str, size: int) -> int:
    """Dimension of the space of forms with det's (resp. perm's) symmetry;
    the characterization theorems say this is 1."""
    dim, _ = symmetry_characterization_space(kind, size)
    return dim


# ---------------------------------------------------------------------------
# concrete stability criterion for the permanent
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KempfResult:
    stable: bool
    degenerate: bool
    torus_characters_distinct: bool
    permutations_transitive: bool

    def __bool__(self) -> bool:
        return self.stable


def kempf_irreducibility_check(n: int) -> KempfResult:
    """Is C^n (x) C^n irreducible under the permanent's stabilizer?

    Checks the two halves of the concrete criterion: (i) the characters of
    the stabilizer torus (pairs of determinant-one diagonal matrices) on the
    n^2 matrix coordinates are pairwise distinct, and (ii) the S_n x S_n
    part permutes the coordinates transitively. n = 1 is degenerate: the
    space is one dimensional and the verdict is trivially true.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return KempfResult(True, True, True, True)

    # character of (D, E) on x_ij is d_i e_j; as characters of the torus
    # {det = 1 on both factors}, chi_ij = chi_kl iff e_i - e_k and f_j - f_l
    # are both integer multiples of the all-ones vector
    def is_multiple_of_ones(vec: list[int]) -> bool:
        return len(set(vec)) <= 1

    distinct = True
    coords = [(i, j) for i in range(n) for j in range(n)]
    for a in range(len(coords)):
        for b in range(a + 1, len(coords)):
            (i, j), (k, l) = coords[a], coords[b]
            e_diff = [0] * n
            e_diff[i] += 1
            e_diff[k] -= 1
            f_diff = [0] * n
            f_diff[j] += 1
            f_diff[l] -= 1
            if is_multiple_of_ones(e_diff) and is_multiple_of_ones(f_diff):
                distinct = False

    # transitivity of S_n x S_n on the coordinate grid, by orbit growth
    gens = _perm_group_generators(n)
    orbit = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        i, j = frontier.pop()
        for g in gens:
            for nxt in ((g[i], j), (i, g[j])):
                if nxt not in orbit:
                    orbit.add(nxt)
                    frontier.append(nxt)
    transitive = len(orbit) == n * n

    return KempfResult(distinct and transitive, False, distinct, transitive)
