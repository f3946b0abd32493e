"""Exact rational scalars, dense matrices, multivariate polynomials and order-3
tensors, plus the rank/kernel/flattening primitives the geometry modules consume.

All arithmetic is exact: scalars are python ints or ``fractions.Fraction``;
ranks are computed by fraction-free (Bareiss) elimination over the integers or
by Gaussian elimination modulo a word-size prime.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, NonInvertibleDenominator

# Exact scalars: any int or Fraction.  Fraction keeps gcd(num, den) = 1 and
# den > 0 by construction, which is exactly the invariant we need.
ExactScalar = Fraction
Scalar = int | Fraction


def as_fraction(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class DenseMatrix:
    """Immutable row-major dense matrix with exact rational entries."""

    rows: int
    cols: int
    entries: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[Scalar]]) -> "DenseMatrix":
        rows = [tuple(r) for r in rows]
        if not rows:
            return cls(0, 0, ())
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "DenseMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "DenseMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_lists(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(
            self.cols, self.rows,
            tuple(self.entries[r * self.cols + c]
                  for c in range(self.cols) for r in range(self.rows)),
        )

    def stack(self, *others: "DenseMatrix") -> "DenseMatrix":
        for m in others:
            if m.cols != self.cols:
                raise DimensionMismatch("stacked matrices must share a width")
        ents = self.entries + tuple(x for m in others for x in m.entries)
        return DenseMatrix(self.rows + sum(m.rows for m in others), self.cols, ents)


def _integer_rows(m: DenseMatrix) -> list[list[int]]:
    """Row-scale to integers (rank-preserving) and strip content gcds."""
    out = []
    for i in range(m.rows):
        row = m.row(i)
        lcm = 1
        for x in row:
            if isinstance(x, Fraction):
                lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        ints = [int(x * lcm) if isinstance(x, Fraction) else x * lcm for x in row]
        g = 0
        for x in ints:
            g = math.gcd(g, x)
        if g > 1:
            ints = [x // g for x in ints]
        out.append(ints)
    return out


def rank_exact(m: DenseMatrix) -> int:
    """Rank over the rationals via fraction-free (Bareiss) elimination.

    Rows are first scaled to primitive integer vectors; intermediate entries
    then stay minors of the scaled matrix, which bounds coefficient blowup.
    """
    rows = [r for r in _integer_rows(m) if any(r)]
    if not rows:
        return 0
    ncols = m.cols
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        pivot = rows[r][c]
        prow = rows[r]
        # Every row below the pivot gets the full Bareiss update, zero
        # multiplier included: entries must stay bordered minors or the
        # exact divisions at later steps break down.
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [(pivot * x - f * y) // prev
                           for x, y in zip(rows[i], prow)]
            else:
                rows[i] = [pivot * x // prev for x in rows[i]]
        prev = pivot
        r += 1
        rank += 1
        if r == len(rows):
            break
    return rank


def rank_modp(m: DenseMatrix, p: int) -> int:
    """Rank of ``m`` reduced mod the prime ``p``; always <= rank_exact(m).

    Raises NonInvertibleDenominator when an entry's denominator is divisible
    by ``p`` (the caller should retry with another prime).
    """
    rows = []
    for i in range(m.rows):
        row = []
        for x in m.row(i):
            if isinstance(x, Fraction):
                if x.denominator % p == 0:
                    raise NonInvertibleDenominator(
                        f"denominator {x.denominator} not invertible mod {p}")
                row.append(x.numerator * pow(x.denominator, -1, p) % p)
            else:
                row.append(x % p)
        if any(row):
            rows.append(row)
    rank = 0
    r = 0
    for c in range(m.cols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        prow = rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] * inv % p
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], prow)]
        r += 1
        rank += 1
        if r == len(rows):
            break
    return rank


# ---------------------------------------------------------------------------
# primes for the modular fast path
# ---------------------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; deterministic for every n < 3.3e24 with these bases."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(bits: int, seed: int) -> int:
    """Deterministic-under-seed prime with the given bit length."""
    rng = random.Random(seed)
    while True:
        cand = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_probable_prime(cand):
            return cand


# ---------------------------------------------------------------------------
# multivariate polynomials
# ---------------------------------------------------------------------------

class MultiPoly:
    """Multivariate polynomial with dense exponent tuples and Fraction coefficients."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int,
                 terms: Mapping[tuple[int, ...], Scalar] | None = None) -> None:
        self.num_vars = num_vars
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != num_vars:
                raise DimensionMismatch(
                    f"exponent tuple {exps} does not have {num_vars} entries")
            coeff = as_fraction(coeff)
            if coeff:
                clean[exps] = clean.get(exps, Fraction(0)) + coeff
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean

    @classmethod
    def zero(cls, num_vars: int) -> "MultiPoly":
        return cls(num_vars, {})

    @classmethod
    def variable(cls, num_vars: int, i: int) -> "MultiPoly":
        exps = tuple(1 if j == i else 0 for j in range(num_vars))
        return cls(num_vars, {exps: Fraction(1)})

    @classmethod
    def constant(cls, num_vars: int, c: Scalar) -> "MultiPoly":
        return cls(num_vars, {(0,) * num_vars: c})

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, MultiPoly)
                and self.num_vars == other.num_vars
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        if self.num_vars != other.num_vars:
            raise DimensionMismatch("adding polynomials in different rings")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MultiPoly(self.num_vars, out)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + other * -1

    def __mul__(self, other: "MultiPoly | Scalar") -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.num_vars,
                             {e: c * other for e, c in self.terms.items()})
        if self.num_vars != other.num_vars:
            raise DimensionMismatch("multiplying polynomials in different rings")
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.num_vars, out)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"MultiPoly({self.num_vars}, {len(self.terms)} terms, deg {self.degree()})"


def eval_poly(f: MultiPoly, x: Sequence[Scalar]) -> Fraction:
    """Exact value of ``f`` at the point ``x``."""
    if len(x) != f.num_vars:
        raise DimensionMismatch(
            f"point has {len(x)} coordinates, polynomial expects {f.num_vars}")
    total = Fraction(0)
    for exps, coeff in f.terms.items():
        val = coeff
        for xi, e in zip(x, exps):
            if e:
                val = val * as_fraction(xi) ** e
        total += val
    return total


# ---------------------------------------------------------------------------
# order-3 tensors and flattenings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Tensor3:
    """Dense order-3 tensor, entries indexed (i, j, k) row-major."""

    dims: tuple[int, int, int]
    entries: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        d1, d2, d3 = self.dims
        if len(self.entries) != d1 * d2 * d3:
            raise DimensionMismatch("entry count does not match dims")

    @classmethod
    def from_map(cls, dims: tuple[int, int, int],
                 values: Mapping[tuple[int, int, int], Scalar]) -> "Tensor3":
        d1, d2, d3 = dims
        ents = [0] * (d1 * d2 * d3)
        for (i, j, k), v in values.items():
            ents[(i * d2 + j) * d3 + k] = v
        return cls(dims, tuple(ents))

    @classmethod
    def outer(cls, u: Sequence[Scalar], v: Sequence[Scalar],
              w: Sequence[Scalar]) -> "Tensor3":
        ents = tuple(a * b * c for a in u for b in v for c in w)
        return cls((len(u), len(v), len(w)), ents)

    def entry(self, i: int, j: int, k: int) -> Scalar:
        d1, d2, d3 = self.dims
        return self.entries[(i * d2 + j) * d3 + k]

    def __add__(self, other: "Tensor3") -> "Tensor3":
        if self.dims != other.dims:
            raise DimensionMismatch("tensor shapes differ")
        return Tensor3(self.dims,
                       tuple(a + b for a, b in zip(self.entries, other.entries)))

    def flattening(self, mode: int) -> DenseMatrix:
        """Mode-m flattening: d_mode rows, product of the other dims columns."""
        d1, d2, d3 = self.dims
        if mode == 1:
            rows = [[self.entry(i, j, k) for j in range(d2) for k in range(d3)]
                    for i in range(d1)]
        elif mode == 2:
            rows = [[self.entry(i, j, k) for i in range(d1) for k in range(d3)]
                    for j in range(d2)]
        elif mode == 3:
            rows = [[self.entry(i, j, k) for i in range(d1) for j in range(d2)]
                    for k in range(d3)]
        else:
            raise DimensionMismatch(f"mode must be 1, 2 or 3, got {mode}")
        return DenseMatrix.from_rows(rows)


def flattening_rank(t: Tensor3, mode: int) -> int:
    """Rank of the mode-flattening; the max over modes lower-bounds tensor rank."""
    return rank_exact(t.flattening(mode))


# ---------------------------------------------------------------------------
# seeded randomness
# ---------------------------------------------------------------------------

def random_int_vector(length: int, bound: int, seed: int) -> tuple[int, ...]:
    """Deterministic-under-seed vector of ints in [-bound, bound], never all zero."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    rng = random.Random(seed)
    return draw_int_vector(rng, length, bound)


def draw_int_vector(rng: random.Random, length: int, bound: int) -> tuple[int, ...]:
    """Like random_int_vector but drawing from an existing RNG stream."""
    while True:
        v = tuple(rng.randint(-bound, bound) for _ in range(length))
        if any(v):
            return v


def mix_seed(*parts: int) -> int:
    """Stable integer seed derived from several indices (splitmix-style)."""
    h = 0x9E3779B97F4A7C15
    for p in parts:
        h ^= (p & 0xFFFFFFFFFFFFFFFF) + 0x9E3779B97F4A7C15 + ((h << 6) & 0xFFFFFFFFFFFFFFFF) + (h >> 2)
        h &= 0xFFFFFFFFFFFFFFFF
        h = (h ^ (h >> 30)) * 0xBF58476D1CE4E5B9 & 0xFFFFFFFFFFFFFFFF
        h = (h ^ (h >> 27)) * 0x94D049BB133111EB & 0xFFFFFFFFFFFFFFFF
        h ^= h >> 31
    return h
