"""Widths, packing numbers and deficiencies derived from the bound functions."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import folding, lagrangian
from .domain import Accuracy
from .errors import (InvalidCohomologyClass, RatioExceedsOne, UnsupportedKind)

PROBLEMS = ("EB", "EC", "PB", "PC")

# limit of the deficiency maxima and the direction they approach it from
_DEFICIENCY_LIMITS = {"EB": (1.0, "decreasing"), "PB": (2.0, "increasing"),
                      "PC": (1.5, "increasing")}


@dataclass(frozen=True)
class PackingResult:
    width: float
    packing_number: float
    provenance: str


def width_from_squeezing(s: float) -> float:
    """Weighted width of a simple shape from the dual squeezing number (1/s)."""
    if not s > 0:
        raise ValueError("squeezing number must be positive")
    return 1.0 / s


def packing_number(width: float, weights: Sequence[float], target_volume: float,
                   shape: str = "ellipsoid") -> float:
    """Volume fraction filled by ``width * E(1, q_2, ..., q_n)`` (or P(...))."""
    if not (width > 0 and target_volume > 0):
        raise ValueError("width and volume must be positive")
    if any(q < 1 for q in weights):
        raise ValueError("weights must be >= 1")
    n = len(weights) + 1
    p = width**n * math.prod(weights) / target_volume
    if shape == "ellipsoid":
        p /= math.factorial(n)
    elif shape != "polydisc":
        raise ValueError(f"unknown shape {shape!r}")
    if p > 1 + 1e-9:
        raise RatioExceedsOne(f"packing number {p} > 1: inconsistent inputs")
    return p


def packing_from_squeezing(s: float, q: float, target_volume: float,
                           provenance: str) -> PackingResult:
    """Width and packing number of a 4-dimensional target by E(1, q)."""
    w = width_from_squeezing(s)
    return PackingResult(w, packing_number(w, (q,), target_volume), provenance)


def best_upper(problem: str, a: float, acc: Accuracy | float | None = None) -> float:
    """Smallest upper bound available for E(1,a)/P(1,a) into B^4/C^4."""
    if problem == "EB":
        return min(folding.s_eb(a, acc).value, lagrangian.l_eb(a).value)
    if problem == "EC":
        return folding.s_ec(a, acc).value
    if problem == "PB":
        return folding.s_pb(a).value
    if problem == "PC":
        return min(folding.s_pc(a).value, lagrangian.l_pc(a).value)
    raise UnsupportedKind(problem)


def volume_condition(problem: str, a: float) -> float:
    if problem in ("EB", "PC"):
        return math.sqrt(a)
    if problem == "PB":
        return math.sqrt(2 * a)
    if problem == "EC":
        return math.sqrt(a / 2)
    raise UnsupportedKind(problem)


def deficiency(kind: str, a: float, acc: Accuracy | float | None = None) -> float:
    """Bound minus the volume condition, the rigidity left over at ``a``.

    The EB deficiency is measured for the Lagrangian bound l_EB.
    """
    if kind == "EB":
        bound = lagrangian.l_eb(a).value
    elif kind == "PB":
        bound = folding.s_pb(a).value
    elif kind == "EC":
        bound = folding.s_ec(a, acc).value
    elif kind == "PC":
        bound = folding.s_pc(a).value
    else:
        raise UnsupportedKind(kind)
    return bound - volume_condition(kind, a)


def deficiency_maxima(kind: str, k_max: int) -> list[tuple[float, float]]:
    """Local maxima (a_k, d(a_k)) for k = 1..k_max, from the closed forms."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    out = []
    for k in range(1, k_max + 1):
        if kind == "EB":
            a_k = k * (k + 2)
            out.append((float(a_k), (k + 2) - math.sqrt(a_k)))
        elif kind == "PB":
            m = k * k - k + 1
            out.append((float(2 * m), (2 * k + 1) - 2 * math.sqrt(m)))
        elif kind == "PC":
            a_k = k * k - k + 2
            out.append((float(a_k), (k + 1) - math.sqrt(a_k)))
        else:
            raise UnsupportedKind(f"no closed-form maxima for {kind!r}")
    return out


@dataclass(frozen=True)
class DeficiencyReport:
    kind: str
    points: list
    direction: str
    limit: float
    monotone: bool
    below_limit: bool


def deficiency_report(kind: str, k_max: int) -> DeficiencyReport:
    pts = deficiency_maxima(kind, k_max)
    limit, direction = _DEFICIENCY_LIMITS[kind]
    ds = [d for _, d in pts]
    steps = list(zip(ds, ds[1:]))
    if direction == "decreasing":
        monotone = all(y < x for x, y in steps)
        bounded = all(d > limit for d in ds)
    else:
        monotone = all(y > x for x, y in steps)
        bounded = all(d < limit for d in ds)
    return DeficiencyReport(kind, pts, direction, limit, monotone, bounded)


def ruled_surface_packing(genus: int, a: float, b: float, twisted: bool = False) -> float:
    """Packing number of a ruled symplectic 4-manifold by one ball.

    ``a`` is the area of the base class, ``b`` that of the fibre.
    """
    if genus < 0:
        raise ValueError("genus must be >= 0")
    if not (a > 0 and b > 0):
        raise InvalidCohomologyClass("a and b must be positive")
    if genus == 0:
        if twisted:
            if not a > b / 2:
                raise InvalidCohomologyClass("twisted sphere bundle needs a > b/2")
        elif a < b:
            a, b = b, a
        return b / (2 * a)
    return min(1.0, b / (2 * a))


def jiang_lower_bound(a: float) -> float:
    """Lower bound for the packing number of T^2(1) x Sigma(a)."""
    if not a >= 1:
        raise ValueError("need a >= 1")
    return max(a + 1 - math.sqrt(2 * a + 1), 2.0) / (4 * a)


def asymptotic_ratio(problem: str, a: float, acc: Accuracy | float | None = None) -> float:
    """Volume fraction of the source inside the best known target.

    Tends to 1 as a grows for all four problems.
    """
    ub = best_upper(problem, a, acc)
    if problem == "EB":
        return a / ub**2
    if problem == "EC":
        return (a / 2) / ub**2
    if problem == "PB":
        return 2 * a / ub**2
    return a / ub**2


@dataclass(frozen=True)
class AlternationRow:
    k: int
    lagrangian_wins_at_k_k1: bool
    folding_wins_at_k_k2: bool
    gap_at_k_k2: float


def alternation_report(k_max: int, acc: Accuracy | float | None = 1e-9) -> list[AlternationRow]:
    """Compare s_EB and l_EB at a = k(k+1) and a = k(k+2).

    Each row says which bound is smaller at the two sample points and how far
    l_EB sits above s_EB at k(k+2).  Nothing is asserted about the pattern.
    """
    rows = []
    for k in range(1, k_max + 1):
        a1, a2 = k * (k + 1), k * (k + 2)
        s1 = folding.s_eb(a1, acc).value
        s2 = folding.s_eb(a2, acc).value
        rows.append(AlternationRow(k, lagrangian.l_eb(a1).value < s1,
                                   s2 < lagrangian.l_eb(a2).value,
                                   lagrangian.l_eb(a2).value - s2))
    return rows
