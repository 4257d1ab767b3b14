"""Ekeland-Hofer capacities and the lower bounds they give."""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction

from .domain import (Bound, Direction, Ellipsoid, Family, Method, Polydisc,
                     Shape, TargetFamily, volume)
from .errors import DimensionMismatch

DEFAULT_K_MAX = 100


@dataclass(frozen=True)
class SpectrumPrefix:
    values: tuple[float, ...]

    @property
    def count(self) -> int:
        return len(self.values)


def spectrum_prefix(e: Ellipsoid, count: int) -> SpectrumPrefix:
    """The ``count`` smallest elements of {m * a_i : m >= 1}, with multiplicity.

    A k-way merge of the arithmetic progressions m * a_i.
    """
    return SpectrumPrefix(tuple(float(v) for v in _exact_spectrum(e.radii, count)))


def _exact_spectrum(radii, count: int) -> list[Fraction]:
    # Exact products, so ties and ratios are compared without rounding;
    # float() of each entry is the correctly rounded m * a_i.
    if count < 1:
        raise ValueError("count must be >= 1")
    exact = [Fraction(r) for r in radii]
    heap = [(r, i, 1) for i, r in enumerate(exact)]
    heapq.heapify(heap)
    out = []
    while len(out) < count:
        val, i, m = heapq.heappop(heap)
        out.append(val)
        heapq.heappush(heap, ((m + 1) * exact[i], i, m + 1))
    return out


def eh_capacity(shape: Shape, k: int) -> float:
    """k-th Ekeland-Hofer capacity c_k in pi-units.

    For a polydisc only the smallest factor is seen: c_k(P) = k * a_1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if isinstance(shape, Ellipsoid):
        return spectrum_prefix(shape, k).values[k - 1]
    if isinstance(shape, Polydisc):
        return k * shape.areas[0]
    raise TypeError(f"no capacities for {type(shape).__name__}")


def unit_target_capacity(target: TargetFamily, k: int) -> int:
    """c_k of the unit ball (ceil(k/n)) or unit cube (k)."""
    if target.family is Family.BALL:
        return -(-k // target.half_dimension)
    return k


def _check_dims(source: Shape, target: TargetFamily) -> None:
    if source.n != target.half_dimension:
        raise DimensionMismatch(
            f"source has half-dimension {source.n}, target {target.half_dimension}"
        )


def eh_lower_bound(source: Shape, target: TargetFamily,
                   k_max: int = DEFAULT_K_MAX) -> Bound:
    """sup over k <= k_max of c_k(source) / c_k(unit target)."""
    _check_dims(source, target)
    if isinstance(source, Ellipsoid):
        caps = _exact_spectrum(source.radii, k_max)
    else:
        caps = [k * Fraction(source.areas[0]) for k in range(1, k_max + 1)]
    best_k, best = 1, Fraction(0)
    for k, c in enumerate(caps, start=1):
        ratio = c / unit_target_capacity(target, k)
        if ratio > best:
            best_k, best = k, ratio
    return Bound(float(best), Direction.LOWER, Method.EKELAND_HOFER, {"k": best_k})


def _nth_root(x: float, n: int) -> float:
    if n == 1:
        return x
    if n == 2:
        return math.sqrt(x)
    return x ** (1.0 / n)


def volume_lower_bound(source: Shape, target: TargetFamily) -> Bound:
    """Smallest target capacity whose volume is at least the source volume."""
    _check_dims(source, target)
    n = target.half_dimension
    vol = volume(source)
    if target.family is Family.BALL:
        value = _nth_root(math.factorial(n) * vol, n)
    else:
        value = _nth_root(vol, n)
    return Bound(value, Direction.LOWER, Method.VOLUME)


def best_lower_bound(source: Shape, target: TargetFamily,
                     k_max: int = DEFAULT_K_MAX) -> Bound:
    eh = eh_lower_bound(source, target, k_max)
    vol = volume_lower_bound(source, target)
    return eh if eh.value >= vol.value else vol


def linear_embeds(e: Ellipsoid, e2: Ellipsoid) -> bool:
    """Whether ``e`` sits inside ``e2`` after a linear symplectic map."""
    if e.n != e2.n:
        raise DimensionMismatch(f"{e.n} != {e2.n}")
    return all(x <= y for x, y in zip(e.radii, e2.radii))


def rigidity_excludes(e: Ellipsoid, ball_capacity: float) -> bool:
    """Rigidity for nearly round ellipsoids.

    If a_n <= 2 a_1, the ellipsoid does not embed into any ball of capacity
    below a_n; returns False whenever the pinching hypothesis fails.
    """
    return e.radii[-1] <= 2 * e.radii[0] and ball_capacity < e.radii[-1]


theorem1_excludes = rigidity_excludes  # name used by the published interface


def ellipsoid_e_invariants(e: Ellipsoid) -> tuple[float, ...]:
    return e.radii
