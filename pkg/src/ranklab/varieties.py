"""Parametrizations, ambient-space bookkeeping, affine-cone tangent generators
and known hypersurface equations for the four supported variety families.

Conventions (fixed once, used everywhere):
  * Veronese(n, d): coordinates are the coefficients of l**d in the pure
    monomial basis (multinomial factors included), graded-lex exponent order.
  * Grassmann(k, n): k-dimensional subspaces of C**n; Pluecker coordinates are
    the k x k minors of the column matrix [w_1 .. w_k], row subsets in lex order.
  * Segre(dims): outer products, coordinates flattened row-major.
  * FlagAdjoint3: flags in the plane realized as rank-1 traceless 3x3 matrices
    via (v1, v2) -> v1 * cross(v1, v2)^T, flattened row-major (9 coordinates,
    zero trace implicit).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .errors import DegenerateParams, DimensionMismatch, NoKnownEquation
from .tensor_core import DenseMatrix, MultiPoly, Scalar, Tensor3


@dataclass(frozen=True)
class Veronese:
    """Degree-d power embedding of linear forms in n+1 variables."""
    n: int
    d: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.d < 1:
            raise DegenerateParams("Veronese needs n >= 1 and d >= 1")


@dataclass(frozen=True)
class Grassmann:
    """k-dimensional subspaces of C**n (affine parameters, 1 <= k <= n-1)."""
    k: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.n - 1:
            raise DegenerateParams("Grassmann needs 1 <= k <= n-1")

    def normalized(self) -> "Grassmann":
        """Duality-normalized presentation with k <= n-k."""
        return self if self.k <= self.n - self.k else Grassmann(self.n - self.k, self.n)


@dataclass(frozen=True)
class Segre:
    """Products of projective spaces embedded by outer products."""
    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.dims) < 2 or any(d < 2 for d in self.dims):
            raise DegenerateParams("Segre needs >= 2 factors, each of dim >= 2")


@dataclass(frozen=True)
class FlagAdjoint3:
    """Point-line flags in the plane: rank-1 traceless 3x3 matrices."""


VarietyFamily = Union[Veronese, Grassmann, Segre, FlagAdjoint3]


@dataclass(frozen=True)
class AmbientInfo:
    N: int      # projective dimension of the ambient space
    dimX: int   # projective dimension of the variety


def ambient(v: VarietyFamily) -> AmbientInfo:
    """Exact ambient and variety dimensions for a family."""
    if isinstance(v, Veronese):
        return AmbientInfo(math.comb(v.n + v.d, v.d) - 1, v.n)
    if isinstance(v, Grassmann):
        return AmbientInfo(math.comb(v.n, v.k) - 1, v.k * (v.n - v.k))
    if isinstance(v, Segre):
        N = math.prod(v.dims) - 1
        return AmbientInfo(N, sum(d - 1 for d in v.dims))
    if isinstance(v, FlagAdjoint3):
        return AmbientInfo(7, 3)
    raise DegenerateParams(f"unsupported family {v!r}")


# ---------------------------------------------------------------------------
# Veronese
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def monomial_exponents(num_vars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent tuples of the given total degree, graded-lex order."""
    exps = [e for e in itertools.product(range(degree + 1), repeat=num_vars)
            if sum(e) == degree]
    exps.sort(reverse=True)
    return tuple(exps)


def _multinomial(d: int, exps: Sequence[int]) -> int:
    out = math.factorial(d)
    for e in exps:
        out //= math.factorial(e)
    return out


def _veronese_coords(linear_form: Sequence[Scalar], d: int) -> tuple[Scalar, ...]:
    exps = monomial_exponents(len(linear_form), d)
    coords = []
    for e in exps:
        val: Scalar = _multinomial(d, e)
        for a, p in zip(linear_form, e):
            if p:
                val = val * a ** p
        coords.append(val)
    return tuple(coords)


# ---------------------------------------------------------------------------
# Grassmann
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def pluecker_subsets(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.combinations(range(n), k))


def _det_exact(rows: list[list[Scalar]]) -> Scalar:
    """Exact determinant by fraction-free elimination (small matrices)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        a, b, c = rows[0]
        d, e, f = rows[1]
        g, h, i = rows[2]
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    mat = [list(r) for r in rows]
    sign = 1
    prev: Scalar = 1
    for col in range(n - 1):
        piv = next((r for r in range(col, n) if mat[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            sign = -sign
        pivot = mat[col][col]
        for r in range(col + 1, n):
            f = mat[r][col]
            mat[r] = [_exact_div(pivot * x - f * y, prev)
                      for x, y in zip(mat[r], mat[col])]
        prev = pivot
    return sign * mat[n - 1][n - 1]


def _exact_div(a: Scalar, b: Scalar) -> Scalar:
    if isinstance(a, int) and isinstance(b, int):
        return a // b
    q = Fraction(a) / Fraction(b)
    return q


def _grassmann_coords(vectors: Sequence[Sequence[Scalar]], n: int, k: int) -> tuple[Scalar, ...]:
    coords = []
    for I in pluecker_subsets(n, k):
        coords.append(_det_exact([[vectors[r][c] for c in I] for r in range(k)]))
    return tuple(coords)


# ---------------------------------------------------------------------------
# Segre / flag helpers
# ---------------------------------------------------------------------------

def _outer_flatten(vectors: Sequence[Sequence[Scalar]]) -> tuple[Scalar, ...]:
    coords: list[Scalar] = [1]
    for v in vectors:
        coords = [c * x for c in coords for x in v]
    return tuple(coords)


def cross(u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple[Scalar, Scalar, Scalar]:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def flag_matrix(v1: Sequence[Scalar], v2: Sequence[Scalar]) -> tuple[Scalar, ...]:
    """Row-major 3x3 matrix of the flag point (v1, v2): v1 * cross(v1, v2)^T."""
    phi = cross(v1, v2)
    return tuple(a * b for a in v1 for b in phi)


def wedge_point_matrix(u: Sequence[Scalar], v: Sequence[Scalar],
                       w: Sequence[Scalar]) -> tuple[Scalar, ...]:
    """Row-major matrix of (u ^ v) (x) w under the fixed identification."""
    phi = cross(u, v)
    return tuple(a * b for a in w for b in phi)


# ---------------------------------------------------------------------------
# embed / tangent cone
# ---------------------------------------------------------------------------

def embed(v: VarietyFamily, p) -> tuple[Scalar, ...]:
    """Exact homogeneous coordinates of the embedded parameter point."""
    if isinstance(v, Veronese):
        form = tuple(p)
        if len(form) != v.n + 1:
            raise DimensionMismatch(f"linear form needs {v.n + 1} coefficients")
        if not any(form):
            raise DegenerateParams("zero linear form")
        return _veronese_coords(form, v.d)

    if isinstance(v, Grassmann):
        vectors = [tuple(w) for w in p]
        if len(vectors) != v.k or any(len(w) != v.n for w in vectors):
            raise DimensionMismatch(f"need {v.k} spanning vectors of length {v.n}")
        coords = _grassmann_coords(vectors, v.n, v.k)
        if not any(coords):
            raise DegenerateParams("spanning vectors are linearly dependent")
        return coords

    if isinstance(v, Segre):
        vectors = [tuple(w) for w in p]
        if len(vectors) != len(v.dims) or any(len(w) != d for w, d in zip(vectors, v.dims)):
            raise DimensionMismatch("factor vectors do not match the Segre dims")
        if any(not any(w) for w in vectors):
            raise DegenerateParams("zero factor vector")
        return _outer_flatten(vectors)

    if isinstance(v, FlagAdjoint3):
        v1, v2 = tuple(p[0]), tuple(p[1])
        if len(v1) != 3 or len(v2) != 3:
            raise DimensionMismatch("flag parameters are two vectors in 3-space")
        if not any(cross(v1, v2)):
            raise DegenerateParams("flag parameter vectors are proportional")
        return flag_matrix(v1, v2)

    raise DegenerateParams(f"unsupported family {v!r}")


def tangent_cone_basis(v: VarietyFamily, p) -> DenseMatrix:
    """Rows spanning the affine-cone tangent space at the embedded point."""
    if isinstance(v, Veronese):
        form = tuple(p)
        if not any(form):
            raise DegenerateParams("zero linear form")
        nv = v.n + 1
        # Coordinates are plain polynomial coefficients, so the row of
        # l**(d-1) * x_i is the coefficient vector of that product.
        base = _veronese_coords(form, v.d - 1)
        exps_low = monomial_exponents(nv, v.d - 1)
        exps_high = monomial_exponents(nv, v.d)
        index = {e: i for i, e in enumerate(exps_high)}
        rows = []
        for i in range(nv):
            row: list[Scalar] = [0] * len(exps_high)
            for e, coeff in zip(exps_low, base):
                if coeff:
                    shifted = list(e)
                    shifted[i] += 1
                    row[index[tuple(shifted)]] += coeff
            rows.append(row)
        return DenseMatrix.from_rows(rows)

    if isinstance(v, Grassmann):
        vectors = [tuple(w) for w in p]
        coords = embed(v, vectors)  # validates
        del coords
        rows = []
        for slot in range(v.k):
            for j in range(v.n):
                pert = list(vectors)
                pert[slot] = tuple(1 if t == j else 0 for t in range(v.n))
                rows.append(list(_grassmann_coords(pert, v.n, v.k)))
        return DenseMatrix.from_rows(rows)

    if isinstance(v, Segre):
        vectors = [tuple(w) for w in p]
        embed(v, vectors)  # validates
        rows = []
        for slot, dim in enumerate(v.dims):
            for j in range(dim):
                pert = list(vectors)
                pert[slot] = tuple(1 if t == j else 0 for t in range(dim))
                rows.append(list(_outer_flatten(pert)))
        return DenseMatrix.from_rows(rows)

    if isinstance(v, FlagAdjoint3):
        v1, v2 = tuple(p[0]), tuple(p[1])
        embed(v, (v1, v2))  # validates
        basis = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        phi = cross(v1, v2)
        rows = []
        for u in basis:
            dphi = cross(u, v2)
            m1 = [a * b for a in u for b in phi]
            m2 = [a * b for a in v1 for b in dphi]
            rows.append([x + y for x, y in zip(m1, m2)])
        for w in basis:
            dphi = cross(v1, w)
            rows.append([a * b for a in v1 for b in dphi])
        return DenseMatrix.from_rows(rows)

    raise DegenerateParams(f"unsupported family {v!r}")


# ---------------------------------------------------------------------------
# known hypersurface equations
# ---------------------------------------------------------------------------

def _sym3_matrix_of_coords() -> list[list[MultiPoly]]:
    """Symmetric 3x3 matrix of a ternary quadric in the coefficient basis."""
    nv = 6
    exps = monomial_exponents(3, 2)
    var_of = {e: MultiPoly.variable(nv, i) for i, e in enumerate(exps)}
    half = Fraction(1, 2)

    def entry(i: int, j: int) -> MultiPoly:
        e = [0, 0, 0]
        e[i] += 1
        e[j] += 1
        poly = var_of[tuple(e)]
        return poly if i == j else poly * half

    return [[entry(i, j) for j in range(3)] for i in range(3)]


def _det3_poly(m: list[list[MultiPoly]]) -> MultiPoly:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def known_hypersurface_equation(v: VarietyFamily, s: int) -> MultiPoly:
    """Exact defining equation for the three supported hypersurface secants."""
    if isinstance(v, Veronese) and (v.n, v.d) == (2, 2) and s == 2:
        return _det3_poly(_sym3_matrix_of_coords())

    if isinstance(v, Grassmann) and (v.k, v.n) == (2, 4) and s == 1:
        # p01*p23 - p02*p13 + p03*p12 in lex subset order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
        def mono(i: int, j: int) -> MultiPoly:
            e = [0] * 6
            e[i] += 1
            e[j] += 1
            return MultiPoly(6, {tuple(e): Fraction(1)})
        return mono(0, 5) - mono(1, 4) + mono(2, 3)

    if isinstance(v, FlagAdjoint3) and s == 2:
        m = [[MultiPoly.variable(9, 3 * i + j) for j in range(3)] for i in range(3)]
        return _det3_poly(m)

    raise NoKnownEquation(f"no shipped equation for sigma_{s} of {v!r}")


def allums13() -> Tensor3:
    """The 3x3x3 tensor whose exact rank the numerical literature left open."""
    one = Fraction(1)
    return Tensor3.from_map(
        (3, 3, 3),
        {(0, 0, 0): one, (0, 2, 2): one,
         (1, 1, 0): one, (1, 1, 1): one,
         (2, 2, 1): one, (2, 1, 2): one})
