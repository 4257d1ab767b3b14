"""Parameter sweeps, crossover search and CSV/JSON emission."""
from __future__ import annotations

import io
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields
from typing import Callable, Iterable, Sequence

from . import capacities, folding, lagrangian
from .domain import (Accuracy, Bound, Direction, Ellipsoid, Family, Method,
                     Polydisc, TargetFamily, as_accuracy)
from .errors import NoSignChange

PROBLEMS = ("EB", "EC", "PB", "PC", "PC2n")
CSV_HEADER = "a,vol_lb,eh_lb,lb_best,fold_ub,lagr_ub,ub_best,cert"


@dataclass(frozen=True)
class SweepRow:
    a: float
    vol_lb: float | None
    eh_lb: float | None
    lb_best: float | None
    fold_ub: float | None
    lagr_ub: float | None
    ub_best: float | None
    cert: str

    def csv_line(self) -> str:
        vals = [_fmt(getattr(self, f.name)) for f in fields(self)[:-1]]
        return ",".join(vals + [self.cert])

    def as_dict(self) -> dict:
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            out[f.name] = round(v, 9) if isinstance(v, float) else v
        return out


def _fmt(x: float | None) -> str:
    return "" if x is None else f"{x:.9f}"


def problem_setup(problem: str, a: float, n: int = 3):
    """Source shape and target family for one grid point."""
    if problem == "EB":
        return Ellipsoid((1.0, a)), TargetFamily(Family.BALL, 2)
    if problem == "EC":
        return Ellipsoid((1.0, a)), TargetFamily(Family.CUBE, 2)
    if problem == "PB":
        return Polydisc((1.0, a)), TargetFamily(Family.BALL, 2)
    if problem == "PC":
        return Polydisc((1.0, a)), TargetFamily(Family.CUBE, 2)
    if problem == "PC2n":
        return Polydisc((1.0,) * (n - 1) + (a,)), TargetFamily(Family.CUBE, n)
    raise ValueError(f"unknown problem {problem!r}")


def upper_bounds(problem: str, a: float, acc: Accuracy, n: int = 3
                 ) -> tuple[Bound, Bound | None]:
    """(folding bound, Lagrangian bound or None) for one grid point."""
    if problem == "EB":
        return folding.s_eb(a, acc), lagrangian.l_eb(a)
    if problem == "EC":
        return folding.s_ec(a, acc), None
    if problem == "PB":
        return folding.s_pb(a), None
    if problem == "PC":
        return folding.s_pc(a), lagrangian.l_pc(a)
    if problem == "PC2n":
        if a <= 2:
            return Bound(a, Direction.UPPER, Method.INCLUSION), None
        return folding.s_pc_2n(a, n), None
    raise ValueError(f"unknown problem {problem!r}")


def evaluate(problem: str, a: float, acc: Accuracy | float | None = None,
             n: int = 3) -> SweepRow:
    acc = as_accuracy(acc)
    source, target = problem_setup(problem, a, n)
    vol = capacities.volume_lower_bound(source, target)
    eh = capacities.eh_lower_bound(source, target)
    lb = eh if eh.value >= vol.value else vol
    fold, lagr = upper_bounds(problem, a, acc, n)
    ub = fold if lagr is None or fold.value <= lagr.value else lagr
    cert = "|".join(b.cert_string() for b in (lb, fold, lagr) if b is not None)
    return SweepRow(a, vol.value, eh.value, lb.value, fold.value,
                    None if lagr is None else lagr.value, ub.value, cert)


def grid(a_from: float, a_to: float, step: float) -> list[float]:
    if not step > 0:
        raise ValueError("step must be positive")
    if a_from > a_to:
        raise ValueError("a_from must not exceed a_to")
    count = math.floor((a_to - a_from) / step + 1e-9) + 1
    return [round(a_from + i * step, 12) for i in range(count)]


def sweep(problem: str, a_from: float, a_to: float, step: float,
          acc: Accuracy | float | None = None, n: int = 3,
          threads: int | None = None) -> list[SweepRow]:
    """Evaluate every grid point; rows come back in grid order regardless of
    the number of worker threads."""
    if problem not in PROBLEMS:
        raise ValueError(f"unknown problem {problem!r}")
    if problem == "PC2n" and n < 2:
        raise ValueError("n must be >= 2")
    points = grid(a_from, a_to, step)
    acc = as_accuracy(acc)
    workers = threads or os.cpu_count() or 1
    if workers == 1 or len(points) == 1:
        return [evaluate(problem, a, acc, n) for a in points]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda a: evaluate(problem, a, acc, n), points))


def to_csv(rows: Iterable[SweepRow]) -> str:
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for row in rows:
        buf.write(row.csv_line() + "\n")
    return buf.getvalue()


def to_json(rows: Iterable[SweepRow]) -> str:
    return json.dumps([r.as_dict() for r in rows], indent=1) + "\n"


def _vol(problem: str) -> Callable[[float], float]:
    def f(a: float) -> float:
        source, target = problem_setup(problem, a)
        return capacities.volume_lower_bound(source, target).value
    return f


def _eh(problem: str) -> Callable[[float], float]:
    def f(a: float) -> float:
        source, target = problem_setup(problem, a)
        return capacities.eh_lower_bound(source, target).value
    return f


def bound_function(name: str, acc: Accuracy | float | None = None) -> Callable[[float], float]:
    """Look up a scalar bound a -> value by name (``s_EB``, ``l_PC``,
    ``volume_EB``, ``eh_PC``, ...; case-insensitive)."""
    acc = as_accuracy(acc)
    table: dict[str, Callable[[float], float]] = {
        "s_eb": lambda a: folding.s_eb(a, acc).value,
        "s_ec": lambda a: folding.s_ec(a, acc).value,
        "s_pb": lambda a: folding.s_pb(a).value,
        "s_pc": lambda a: folding.s_pc(a).value,
        "l_eb": lambda a: lagrangian.l_eb(a).value,
        "l_pc": lambda a: lagrangian.l_pc(a).value,
    }
    for p in ("EB", "EC", "PB", "PC"):
        table[f"volume_{p.lower()}"] = _vol(p)
        table[f"eh_{p.lower()}"] = _eh(p)
    try:
        return table[name.lower()]
    except KeyError:
        raise ValueError(f"unknown bound {name!r}; known: {sorted(table)}") from None


def crossover(left: str | Callable[[float], float], right: str | Callable[[float], float],
              lo: float, hi: float, tol: float = 1e-6,
              acc: Accuracy | float | None = 1e-10) -> float:
    """Bisect for a root of right(a) - left(a) on [lo, hi]."""
    f = bound_function(left, acc) if isinstance(left, str) else left
    g = bound_function(right, acc) if isinstance(right, str) else right
    if not lo < hi:
        raise ValueError("need lo < hi")
    if not tol > 0:
        raise ValueError("tol must be positive")

    def diff(a):
        return g(a) - f(a)

    d_lo, d_hi = diff(lo), diff(hi)
    if not d_lo * d_hi < 0:
        raise NoSignChange(f"no sign change on [{lo}, {hi}] ({d_lo:g}, {d_hi:g})")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        d_mid = diff(mid)
        if d_mid == 0:
            return mid
        if (d_mid < 0) == (d_lo < 0):
            lo, d_lo = mid, d_mid
        else:
            hi = mid
    return (lo + hi) / 2


def consistency_violations(rows: Sequence[SweepRow], slack: float = 1e-9) -> list[SweepRow]:
    return [r for r in rows
            if r.lb_best is not None and r.ub_best is not None
            and r.lb_best > r.ub_best + slack]
