"""Maximum-rank bound formulas and per-family comparison reports.

Bounds computed from the generic rank g: the codimension bound, 2g, 2g-1
(previous secant a hypersurface), 2g-2 (homogeneous varieties), the two
open-rank binomial bounds and the floor bound for ternary forms, and the
hypersurface-layer bound r_max <= r_{max,g-1} + 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

from .datafiles import load_known_fact_rows
from .errors import NotAHypersurface, UnknownCase
from .secant_dim import ExceptionTable, actual_dim, family_key, generic_rank
from .varieties import Grassmann, Segre, VarietyFamily, Veronese, ambient

# The source comparisons attribute per-example figures (4 for the quadric
# Veronese, 5 for 3-planes in C^7, 8 for 3x3x3) to the 2g-family bounds that
# the general statements do not yield; reports carry this footnote instead of
# reproducing those numbers.
BT_ATTRIBUTION_NOTE = (
    "Some quoted literature figures (4 for the quadric Veronese surface, 5 for "
    "3-planes in C^7, 8 for the 3x3x3 Segre) are inconsistent with the 2g / "
    "2g-1 / 2g-2 formulas; the values reported here are recomputed from the "
    "formulas and those three quoted figures are omitted."
)


def binom0(m: int, k: int) -> int:
    """Binomial with C(m, k) = 0 for m < 0 or k > m and C(m, 0) = 1 for m >= 0."""
    if m < 0 or k < 0 or k > m:
        return 0
    return math.comb(m, k)


@dataclass(frozen=True)
class KnownFact:
    value: int
    is_upper_bound_only: bool
    citation: str


class KnownRankFacts:
    """Literature values: max rank on sigma_s layers and true max ranks."""

    def __init__(self, sigma_facts: Mapping[tuple[str, tuple[int, ...], int], KnownFact],
                 max_facts: Mapping[tuple[str, tuple[int, ...]], KnownFact]) -> None:
        self.sigma_facts = dict(sigma_facts)
        self.max_facts = dict(max_facts)

    @classmethod
    def from_rows(cls, rows: list[dict]) -> "KnownRankFacts":
        sigma_facts, max_facts = {}, {}
        for row in rows:
            fact = KnownFact(row["value"], row["is_upper_bound_only"], row["citation"])
            key = (row["family"], tuple(row["params"]))
            if row["sigma"] is None:
                max_facts[key] = fact
            else:
                sigma_facts[key + (row["sigma"],)] = fact
        return cls(sigma_facts, max_facts)

    @classmethod
    def load(cls, path=None) -> "KnownRankFacts":
        return cls.from_rows(load_known_fact_rows(path))

    def sigma_fact(self, v: VarietyFamily, s: int) -> KnownFact | None:
        kind, params = family_key(v)
        return self.sigma_facts.get((kind, params, s))

    def max_fact(self, v: VarietyFamily) -> KnownFact | None:
        return self.max_facts.get(family_key(v))


@dataclass(frozen=True)
class BoundsReport:
    family: VarietyFamily
    g: int
    codim_bound: int
    bt_general: int                       # 2g
    bt_hypersurface: int | None           # 2g-1, iff sigma_{g-1} is a hypersurface
    bhmt: int | None                      # 2g-2, homogeneous varieties (all four here)
    jelisiejew: int | None                # Veronese only
    bdp: int | None                       # Veronese only
    deparis2: int | None                  # ternary (n = 2) Veronese only
    main_bound: int | None                # r_{max,g-1} + 1 when that layer is known
    main_bound_is_upper_only: bool
    known_r_max: int | None
    notes: tuple[str, ...] = field(default_factory=tuple)

    def as_json_dict(self) -> dict:
        kind, params = family_key(self.family)
        return {
            "family": kind, "params": list(params), "g": self.g,
            "codim_bound": self.codim_bound,
            "bt_general": self.bt_general,
            "bt_hypersurface": self.bt_hypersurface,
            "bhmt": self.bhmt,
            "jelisiejew": self.jelisiejew,
            "bdp": self.bdp,
            "deparis2": self.deparis2,
            "main_bound": self.main_bound,
            "main_bound_is_upper_only": self.main_bound_is_upper_only,
            "known_r_max": self.known_r_max,
            "notes": list(self.notes),
        }


def codim_bound(v: VarietyFamily) -> int:
    """codim X + 1."""
    info = ambient(v)
    return info.N - info.dimX + 1


def bt_bounds(g: int, sigma_prev_is_hypersurface: bool) -> tuple[int, int | None]:
    """(2g, and 2g-1 when the subgeneric secant is a hypersurface)."""
    if g < 1:
        raise ValueError("g must be >= 1")
    return 2 * g, (2 * g - 1 if sigma_prev_is_hypersurface else None)


def bhmt_bound(g: int) -> int:
    """2g - 2, valid for curves and homogeneous varieties."""
    return 2 * g - 2


def jelisiejew_bound(n: int, d: int) -> int:
    """Open-rank binomial bound for degree-d forms in n+1 variables."""
    return binom0(n + d - 1, n) - binom0(n + d - 5, n - 2)


def bdp_bound(n: int, d: int) -> int:
    """Sharper open-rank binomial bound; always <= jelisiejew_bound."""
    return jelisiejew_bound(n, d) - binom0(n + d - 6, n - 2)


def deparis2_bound(d: int) -> int:
    """floor((d^2 + 6d + 1)/4) for ternary degree-d forms."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return (d * d + 6 * d + 1) // 4


def main_bound(r_prev: int) -> int:
    """Max rank bound r_prev + 1; caller must have checked the hypersurface
    hypothesis on the subgeneric secant."""
    return r_prev + 1


def hypersurface_X_max_rank(v: VarietyFamily) -> int:
    """Max rank for a variety that is itself a non-degenerate hypersurface: 2."""
    info = ambient(v)
    if info.dimX != info.N - 1:
        raise NotAHypersurface(f"{v!r} has codimension {info.N - info.dimX}")
    return 2


def bounds_report(v: VarietyFamily, facts: KnownRankFacts,
                  table: ExceptionTable) -> BoundsReport:
    """One comparison row: every applicable bound for the family."""
    g = generic_rank(v, table)
    hyp = g >= 2 and actual_dim(v, g - 1, table).hypersurface
    bt_gen, bt_hyp = bt_bounds(g, hyp)

    jel = bdp = dep2 = None
    if isinstance(v, Veronese):
        jel = jelisiejew_bound(v.n, v.d)
        bdp = bdp_bound(v.n, v.d)
        if v.n == 2:
            dep2 = deparis2_bound(v.d)

    main = None
    main_upper_only = False
    if hyp:
        prev = facts.sigma_fact(v, g - 1)
        if prev is not None:
            main = main_bound(prev.value)
            main_upper_only = prev.is_upper_bound_only

    known = facts.max_fact(v)
    return BoundsReport(
        family=v, g=g, codim_bound=codim_bound(v),
        bt_general=bt_gen, bt_hypersurface=bt_hyp,
        bhmt=bhmt_bound(g),  # all four supported families are homogeneous
        jelisiejew=jel, bdp=bdp, deparis2=dep2,
        main_bound=main, main_bound_is_upper_only=main_upper_only,
        known_r_max=known.value if known else None,
        notes=(BT_ATTRIBUTION_NOTE,),
    )
