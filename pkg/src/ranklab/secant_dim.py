"""Expected and actual secant-variety dimensions: Terracini sampling with exact
or modular ranks, exception tables for the known defective cases, generic rank.

A Terracini sample is a certified lower bound for the secant dimension
(semicontinuity); it equals the true dimension with overwhelming probability,
so the max over a few independently seeded trials is the reported value.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Mapping

from .datafiles import load_exception_entries
from .errors import ConfigError, DegenerateParams, SamplingFailed, UnknownCase
from .tensor_core import (DenseMatrix, draw_int_vector, mix_seed, random_prime,
                          rank_exact, rank_modp, NonInvertibleDenominator)
from .varieties import (FlagAdjoint3, Grassmann, Segre, VarietyFamily, Veronese,
                        ambient, tangent_cone_basis)

# exact ranks above this ambient dimension are a desk-scale hazard
MODULAR_THRESHOLD = 5000

SOURCE_TERRACINI = "terracini"
SOURCE_TABLE = "exception_table"
SOURCE_ARITHMETIC = "arithmetic"


def family_key(v: VarietyFamily) -> tuple[str, tuple[int, ...]]:
    if isinstance(v, Veronese):
        return "veronese", (v.n, v.d)
    if isinstance(v, Grassmann):
        return "grassmann", (v.k, v.n)
    if isinstance(v, Segre):
        return "segre", tuple(v.dims)
    if isinstance(v, FlagAdjoint3):
        return "flag_adjoint3", ()
    raise DegenerateParams(f"unsupported family {v!r}")


def family_from_key(kind: str, params: tuple[int, ...]) -> VarietyFamily:
    if kind == "veronese":
        return Veronese(*params)
    if kind == "grassmann":
        return Grassmann(*params)
    if kind == "segre":
        return Segre(tuple(params))
    if kind == "flag_adjoint3":
        return FlagAdjoint3()
    raise ConfigError(f"unknown family kind {kind!r}")


@dataclass(frozen=True)
class ExceptionEntry:
    defect: int
    status: str      # "theorem" | "conjecture"
    citation: str


class ExceptionTable:
    """Known/conjectural secant defects keyed by (family kind, params, s)."""

    def __init__(self, entries: Mapping[tuple[str, tuple[int, ...], int],
                                        ExceptionEntry]) -> None:
        self.entries = dict(entries)

    @classmethod
    def from_rows(cls, rows: list[dict]) -> "ExceptionTable":
        entries = {}
        for row in rows:
            key = (row["family"], tuple(row["params"]), row["s"])
            entries[key] = ExceptionEntry(row["defect"], row["status"], row["citation"])
        return cls(entries)

    @classmethod
    def load(cls, path=None) -> "ExceptionTable":
        return cls.from_rows(load_exception_entries(path))

    def entry(self, v: VarietyFamily, s: int) -> ExceptionEntry | None:
        kind, params = family_key(v)
        return self.entries.get((kind, params, s))

    def defect(self, v: VarietyFamily, s: int) -> int:
        e = self.entry(v, s)
        return e.defect if e else 0

    def without(self, v: VarietyFamily, s: int) -> "ExceptionTable":
        """Copy with one entry removed (sensitivity checks)."""
        kind, params = family_key(v)
        entries = dict(self.entries)
        entries.pop((kind, params, s), None)
        return ExceptionTable(entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class SecantRecord:
    family: VarietyFamily
    s: int
    expected_dim: int
    actual_dim: int
    defect: int
    hypersurface: bool
    source: str

    def as_json_dict(self) -> dict:
        kind, params = family_key(self.family)
        return {
            "family": kind,
            "params": list(params),
            "s": self.s,
            "expected_dim": self.expected_dim,
            "actual_dim": self.actual_dim,
            "defect": self.defect,
            "hypersurface": self.hypersurface,
            "source": self.source,
        }


def expected_dim(v: VarietyFamily, s: int) -> int:
    """min(s*(dim X + 1) - 1, N): the count-of-parameters dimension."""
    if s < 1:
        raise ValueError("s must be >= 1")
    info = ambient(v)
    return min(s * (info.dimX + 1) - 1, info.N)


def quadric_secant_dim(n: int, s: int) -> int:
    """Closed form for sigma_s of the quadric Veronese: bounded-rank symmetric
    matrices of order n+1."""
    import math
    N = math.comb(n + 2, 2) - 1
    m = n - s + 2
    drop = math.comb(m, 2) if m >= 2 else 0
    return N - drop


# ---------------------------------------------------------------------------
# Terracini sampling
# ---------------------------------------------------------------------------

_MAX_PARAM_RETRIES = 64


def sample_params(v: VarietyFamily, rng: random.Random, bound: int):
    """One random, non-degenerate parameter point for the family."""
    for _ in range(_MAX_PARAM_RETRIES):
        try:
            if isinstance(v, Veronese):
                return draw_int_vector(rng, v.n + 1, bound)
            if isinstance(v, Grassmann):
                vecs = tuple(draw_int_vector(rng, v.n, bound) for _ in range(v.k))
                if rank_exact(DenseMatrix.from_rows(vecs)) != v.k:
                    raise DegenerateParams("dependent spanning set")
                return vecs
            if isinstance(v, Segre):
                return tuple(draw_int_vector(rng, d, bound) for d in v.dims)
            if isinstance(v, FlagAdjoint3):
                v1 = draw_int_vector(rng, 3, bound)
                v2 = draw_int_vector(rng, 3, bound)
                from .varieties import cross
                if not any(cross(v1, v2)):
                    raise DegenerateParams("proportional flag vectors")
                return (v1, v2)
            raise DegenerateParams(f"unsupported family {v!r}")
        except DegenerateParams:
            continue
    raise SamplingFailed(f"could not sample a smooth point of {v!r}")


def terracini_dim(v: VarietyFamily, s: int, trials: int = 3, bound: int = 50,
                  seed: int = 0, mode: str = "exact") -> int:
    """Max over trials of rank(stacked tangent bases at s random points) - 1.

    ``mode`` is "exact" (Bareiss) or "modular" (single random 62-bit prime per
    trial); modular is mandatory above ambient dimension MODULAR_THRESHOLD.
    """
    if s < 1 or trials < 1:
        raise ValueError("s and trials must be >= 1")
    if mode not in ("exact", "modular"):
        raise ConfigError(f"unknown mode {mode!r}")
    info = ambient(v)
    if info.N > MODULAR_THRESHOLD and mode == "exact":
        raise ConfigError(
            f"ambient dimension {info.N} needs mode='modular' "
            f"(exact elimination at this size is not desk-scale)")
    best = -1
    for trial in range(trials):
        rng = random.Random(mix_seed(seed, trial))
        blocks = [tangent_cone_basis(v, sample_params(v, rng, bound))
                  for _ in range(s)]
        stacked = blocks[0].stack(*blocks[1:]) if len(blocks) > 1 else blocks[0]
        if mode == "exact":
            rank = rank_exact(stacked)
        else:
            rank = _modular_rank_with_retry(stacked, seed, trial)
        best = max(best, rank - 1)
    exp = expected_dim(v, s)
    assert best <= exp, "sampled dimension exceeded the parameter count"
    return best


def _modular_rank_with_retry(m: DenseMatrix, seed: int, trial: int) -> int:
    for attempt in range(8):
        p = random_prime(62, mix_seed(seed, trial, 0xBEEF + attempt))
        try:
            return rank_modp(m, p)
        except NonInvertibleDenominator:
            continue
    raise SamplingFailed("kept drawing primes dividing a denominator")


# ---------------------------------------------------------------------------
# table-driven actual dimensions
# ---------------------------------------------------------------------------

def _table_policy_covered(v: VarietyFamily) -> bool:
    # Veronese: the interpolation theorem is complete.  Grassmann: complete
    # modulo the shipped (conjectural) defect list.  Flag: its one defective
    # secant is shipped.  Segre: only the 3x3x3 case is charted.
    if isinstance(v, (Veronese, Grassmann, FlagAdjoint3)):
        return True
    if isinstance(v, Segre):
        return tuple(sorted(v.dims)) == (3, 3, 3)
    return False


def actual_dim(v: VarietyFamily, s: int, table: ExceptionTable) -> SecantRecord:
    """Actual secant dimension from exact arithmetic plus the exception table."""
    if not _table_policy_covered(v):
        raise UnknownCase(
            f"{v!r} is outside the shipped table policy; use terracini_dim")
    info = ambient(v)
    exp = expected_dim(v, s)
    if isinstance(v, Veronese) and v.d == 2:
        actual = min(quadric_secant_dim(v.n, s), info.N)
        source = SOURCE_ARITHMETIC
    else:
        entry = table.entry(v, s)
        actual = exp - (entry.defect if entry else 0)
        source = SOURCE_TABLE if entry else SOURCE_ARITHMETIC
    return SecantRecord(
        family=v, s=s, expected_dim=exp, actual_dim=actual,
        defect=exp - actual, hypersurface=(actual == info.N - 1), source=source)


def generic_rank(v: VarietyFamily, table: ExceptionTable) -> int:
    """Smallest s whose secant variety fills the ambient space."""
    N = ambient(v).N
    for s in range(1, N + 3):
        if actual_dim(v, s, table).actual_dim == N:
            return s
    raise UnknownCase(f"no filling secant found for {v!r}")  # pragma: no cover


def secant_profile(v: VarietyFamily, table: ExceptionTable) -> Iterator[SecantRecord]:
    """Records for s = 1 .. generic rank (the filling value)."""
    N = ambient(v).N
    for s in range(1, N + 3):
        rec = actual_dim(v, s, table)
        yield rec
        if rec.actual_dim == N:
            return
