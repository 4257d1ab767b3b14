"""Shapes, targets and the bound record used throughout the package.

All capacities, radii and areas are stored in units of pi: the ellipsoid
E(pi, 4 pi) is ``Ellipsoid((1, 4))`` and a ball of capacity 2.69 pi is
``(TargetFamily(Family.BALL, 2), 2.69)``.  Volumes are reported as the
coefficient of pi**n.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Union

from .errors import NonPositiveEntry, SymbError

DEFAULT_MAX_ITER = 10**6


def _sorted_positive(values: Iterable[float]) -> tuple[float, ...]:
    vals = tuple(float(v) for v in values)
    if not vals:
        raise NonPositiveEntry("at least one entry is required")
    for v in vals:
        if not v > 0:
            raise NonPositiveEntry(f"entries must be positive, got {v!r}")
    return tuple(sorted(vals))


@dataclass(frozen=True)
class Ellipsoid:
    """E(a_1, ..., a_n) with ``radii[i] = a_i / pi``, kept nondecreasing."""

    radii: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "radii", _sorted_positive(self.radii))

    @property
    def n(self) -> int:
        return len(self.radii)

    @classmethod
    def ball(cls, a: float, n: int) -> "Ellipsoid":
        return cls((a,) * n)


@dataclass(frozen=True)
class Polydisc:
    """P(a_1, ..., a_n) with ``areas[i] = a_i / pi``, kept nondecreasing."""

    areas: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "areas", _sorted_positive(self.areas))

    @property
    def n(self) -> int:
        return len(self.areas)

    @classmethod
    def cube(cls, a: float, n: int) -> "Polydisc":
        return cls((a,) * n)


Shape = Union[Ellipsoid, Polydisc]


class Family(str, enum.Enum):
    BALL = "Ball"
    CUBE = "Cube"


@dataclass(frozen=True)
class TargetFamily:
    family: Family
    half_dimension: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.half_dimension < 1:
            raise ValueError("half_dimension must be >= 1")

    def shape(self, capacity: float) -> Shape:
        if self.family is Family.BALL:
            return Ellipsoid.ball(capacity, self.half_dimension)
        return Polydisc.cube(capacity, self.half_dimension)


class Direction(str, enum.Enum):
    LOWER = "Lower"
    UPPER = "Upper"


class Method(str, enum.Enum):
    VOLUME = "Volume"
    EKELAND_HOFER = "EkelandHofer"
    INCLUSION = "Inclusion"
    MULTI_FOLD = "MultiFold"
    CLOSED_FORM_FOLD = "ClosedFormFold"
    LAGRANGIAN_M = "LagrangianM"
    LAGRANGIAN_N = "LagrangianN"
    DIAGONAL = "Diagonal"


# certificate keys each method must carry (alternatives for ClosedFormFold)
_CERT_KEYS: dict[Method, tuple[frozenset, ...]] = {
    Method.VOLUME: (frozenset(),),
    Method.INCLUSION: (frozenset(),),
    Method.EKELAND_HOFER: (frozenset({"k"}),),
    Method.MULTI_FOLD: (frozenset({"u0", "folds"}),),
    Method.CLOSED_FORM_FOLD: (frozenset({"k"}), frozenset({"N"})),
    Method.LAGRANGIAN_M: (frozenset({"ks"}),),
    Method.LAGRANGIAN_N: (frozenset({"ks"}),),
    Method.DIAGONAL: (frozenset({"r"}),),
}


@dataclass(frozen=True, eq=False)
class Bound:
    """A one-sided bound on a target capacity, in pi-units.

    Upper bounds are infima: the construction behind them reaches every
    capacity strictly above ``value``.
    """

    value: float
    direction: Direction
    method: Method
    certificate: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "direction", Direction(self.direction))
        object.__setattr__(self, "method", Method(self.method))
        object.__setattr__(self, "certificate", dict(self.certificate))
        if not self.value > 0:
            raise SymbError(f"bound value must be positive, got {self.value!r}")
        keys = set(self.certificate)
        allowed = _CERT_KEYS[self.method]
        if not any(req <= keys for req in allowed):
            raise SymbError(
                f"certificate {sorted(keys)} does not fit method {self.method.value}"
            )

    def __float__(self) -> float:
        return float(self.value)

    def cert_string(self) -> str:
        """Compact ``method(key=value;...)`` rendering used in CSV output."""
        parts = []
        for key in sorted(self.certificate):
            val = self.certificate[key]
            if isinstance(val, (tuple, list)):
                val = "/".join(str(v) for v in val)
            elif isinstance(val, float):
                val = f"{val:.9f}"
            parts.append(f"{key}={val}")
        return f"{self.method.value}({';'.join(parts)})"


@dataclass(frozen=True)
class Accuracy:
    acc: float = 1e-9
    max_iter: int = DEFAULT_MAX_ITER

    def __post_init__(self):
        if not self.acc > 0:
            raise ValueError("acc must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")


def as_accuracy(acc: "Accuracy | float | None") -> Accuracy:
    if acc is None:
        return Accuracy()
    if isinstance(acc, Accuracy):
        return acc
    return Accuracy(float(acc))


def normalize(values: Iterable[float], kind: str = "ellipsoid") -> Shape:
    """Sorted copy of ``values`` wrapped as an ellipsoid or polydisc.

    >>> normalize([3, 1, 2]).radii
    (1.0, 2.0, 3.0)
    """
    if kind == "ellipsoid":
        return Ellipsoid(tuple(values))
    if kind == "polydisc":
        return Polydisc(tuple(values))
    raise ValueError(f"unknown shape kind {kind!r}")


def volume(shape: "Shape | tuple[TargetFamily, float]") -> float:
    """Euclidean volume divided by pi**n."""
    if isinstance(shape, tuple):
        target, cap = shape
        shape = target.shape(cap)
    if isinstance(shape, Ellipsoid):
        return math.prod(shape.radii) / math.factorial(shape.n)
    if isinstance(shape, Polydisc):
        return math.prod(shape.areas)
    raise TypeError(f"cannot take the volume of {type(shape).__name__}")


def half_dimension(shape: Shape) -> int:
    return shape.n
