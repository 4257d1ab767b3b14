"""Upper bounds from symplectic (multiple) folding in dimension four.

The two optimisers ``s_eb`` (ellipsoid into ball) and ``s_ec`` (ellipsoid
into cube) run the fold recurrences for a trial fold point u1 and bisect
for the smallest admissible one.  The polydisc bounds are closed forms.

Everything is in pi-units: ``a`` is the long radius of E(1, a) or the long
factor of P(1, a).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .domain import Accuracy, Bound, Direction, Method, as_accuracy
from .errors import NonTermination, OutOfInterval


@dataclass(frozen=True)
class FoldState:
    """Loop-head state of the ball recurrence: floor j has length u_j,
    r_j is still to be folded and l_j = r_j / a is the fibre level."""

    j: int
    u_j: float
    r_j: float
    l_j: float
    l_prev: float | None


@dataclass(frozen=True)
class FoldOutcome:
    feasible: bool
    capacity: float | None
    folds: int


def fold_interval(a: float) -> tuple[float, float]:
    """[a/(a+1), a/2]: the only fold points worth trying when folding twice."""
    return a / (a + 1), a / 2


def _ball_run(a: float, u1: float, max_iter: int) -> Iterator[FoldState]:
    # Generator form of the ball recurrence; its return value (carried by
    # StopIteration) is (feasible, j, r_j).
    j = 2
    uj = (a + 1) / (a - 1) * u1 - a / (a - 1)
    rj = a - u1 - uj
    lj = rj / a
    li = None
    for _ in range(max_iter):
        yield FoldState(j, uj, rj, lj, li)
        if j % 2 == 0:
            if rj <= uj:
                return True, j, rj
            if uj <= 2 * lj:
                return False, j, rj
            j += 1
            uj = a / (a - 2) * (uj - 2 * lj)
            rj = rj - uj
            li = lj
            lj = rj / a
        else:
            # The top-left corner of F_{j+2} is not checked here; if it
            # sticks out, the next even step fails anyway.
            if rj <= uj + li:
                return True, j, rj
            j += 1
            uj = (a + 1) / (a - 1) * uj
            rj = rj - uj
            lj = rj / a
    raise NonTermination(f"fold loop exceeded {max_iter} iterations (a={a}, u1={u1})")


def fold_states(a: float, u1: float, max_iter: int = 10**6) -> list[FoldState]:
    """All loop-head states visited while trying to fold E(1, a) at ``u1``."""
    return list(_ball_run(a, u1, max_iter))


def fold_feasible(a: float, u1: float, acc: Accuracy | float | None = None) -> FoldOutcome:
    """Try to fold E(1, a) into the ball of capacity 2 + (1 - 2/a) u1.

    Parameters
    ----------
    a : float
        Long radius, must exceed 2.
    u1 : float
        First fold point, inside ``fold_interval(a)``.
    acc : Accuracy, optional
        Only ``max_iter`` is used, as a loop guard.

    Returns
    -------
    FoldOutcome
        ``capacity`` is None when the attempt fails.
    """
    guard = as_accuracy(acc).max_iter
    if not a > 2:
        raise OutOfInterval(f"ball folding needs a > 2, got {a}")
    lo, hi = fold_interval(a)
    if not lo <= u1 <= hi:
        raise OutOfInterval(f"u1={u1} outside [{lo}, {hi}]")
    run = _ball_run(a, u1, guard)
    try:
        while True:
            next(run)
    except StopIteration as stop:
        feasible, j, rj = stop.value
    if not feasible:
        return FoldOutcome(False, None, j - 1)
    folds = j if rj > 0 else j - 1
    return FoldOutcome(True, 2 + (1 - 2 / a) * u1, folds)


def _require_a(a: float) -> None:
    if not a >= 1:
        raise ValueError(f"need a >= 1 (pi-units), got {a}")


def s_eb(a: float, acc: Accuracy | float | None = None) -> Bound:
    """Best multiple-folding bound for E(1, a) into a 4-ball.

    For a <= 2 no folding helps and the inclusion E(1, a) in B(a) is returned.
    """
    _require_a(a)
    accuracy = as_accuracy(acc)
    if a <= 2:
        return Bound(a, Direction.UPPER, Method.INCLUSION)
    b, c = fold_interval(a)
    u1 = (b + c) / 2
    while (c - b) / 2 > accuracy.acc / 2:
        if fold_feasible(a, u1, accuracy).feasible:
            c = u1
        else:
            b = u1
        u1 = (b + c) / 2
    folds = fold_feasible(a, c, accuracy).folds
    value = 2 + (1 - 2 / a) * u1
    return Bound(value, Direction.UPPER, Method.MULTI_FOLD,
                 {"u0": u1, "folds": folds, "u_feasible": c})


def closed_form_a_n(a, n_folds: int):
    """Optimal capacity reachable with exactly 1, 2 or 3 folds.

    Works for any number type with field arithmetic, so ``Fraction`` inputs
    give exact values.
    """
    if a < 2:
        raise OutOfInterval(f"closed forms are defined for a >= 2, got {a}")
    if n_folds == 1:
        return 2 + (a - 2) / 2
    if n_folds == 2:
        return 2 + (a - 2) * (a + 1) / (3 * a + 1)
    if n_folds == 3:
        return 2 + (a - 2) * (a + 1) * (a + 2) / (4 * (a * a + a + 1))
    raise ValueError("closed forms exist for 1, 2 or 3 folds only")


class Dual:
    """Forward-mode dual number ``val + der * eps`` with eps**2 = 0.

    With Fraction parts this differentiates rational functions exactly.
    """

    __slots__ = ("val", "der")

    def __init__(self, val, der=0):
        self.val = val
        self.der = der

    @staticmethod
    def _lift(x):
        return x if isinstance(x, Dual) else Dual(x, 0)

    def __add__(self, other):
        o = self._lift(other)
        return Dual(self.val + o.val, self.der + o.der)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return Dual(self.val - o.val, self.der - o.der)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return Dual(self.val * o.val, self.der * o.val + self.val * o.der)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        return Dual(self.val / o.val,
                    (self.der * o.val - self.val * o.der) / (o.val * o.val))

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __lt__(self, other):
        return self.val < self._lift(other).val

    def __repr__(self):
        return f"Dual({self.val!r}, {self.der!r})"


def derivative(f, x):
    """Exact derivative of a rational function ``f`` at a rational ``x``."""
    return f(Dual(Fraction(x), Fraction(1))).der


def fold_height(a: float, u1: float, max_iter: int = 10**6) -> float:
    """Height of the image of E(1, a) folded into a cube starting at ``u1``."""
    return _cube_run(a, u1, max_iter)[0]


def _cube_run(a: float, u1: float, max_iter: int) -> tuple[float, int, float]:
    if not a > 1:
        raise OutOfInterval(f"cube folding needs a > 1, got {a}")
    lo, hi = fold_interval(a)
    if not lo < u1 <= hi:
        raise OutOfInterval(f"u1={u1} outside ({lo}, {hi}]")
    l1 = 1 - u1 / a
    j = 2
    uj = (a + 1) / (a - 1) * u1 - a / (a - 1)
    rj = a - u1 - uj
    lj = rj / a
    li = l1
    hj = 2 * l1
    steps = 0
    while rj > u1 + l1 - lj:
        steps += 1
        if steps > max_iter:
            raise NonTermination(f"height loop exceeded {max_iter} iterations")
        j += 1
        uj = (a + 1) / (a - 1) * uj
        rj = rj - uj
        li = lj
        lj = rj / a
        if j % 2 == 0:
            hj = hj + 2 * li
    if j % 2 == 0:
        hj = hj + lj
    else:
        hj = hj + max(li, 2 * lj)
    return hj, j, rj


def fold_width(a: float, u1: float) -> float:
    return 1 + (1 - 1 / a) * u1


def s_ec(a: float, acc: Accuracy | float | None = None) -> Bound:
    """Best multiple-folding bound for E(1, a) into a 4-cube.

    Bisects for the fold point where image height and width agree, then
    keeps the one-fold value (a + 1)/2 if that happens to be smaller.
    """
    _require_a(a)
    accuracy = as_accuracy(acc)
    if a == 1:
        return Bound(1.0, Direction.UPPER, Method.INCLUSION)
    b, c = fold_interval(a)
    u1 = (b + c) / 2
    while (c - b) / 2 > accuracy.acc / 2:
        if fold_height(a, u1, accuracy.max_iter) > fold_width(a, u1):
            b = u1
        else:
            c = u1
        u1 = (b + c) / 2
    value = fold_width(a, u1)
    _, j, rj = _cube_run(a, u1, accuracy.max_iter)
    folds = j if rj > 0 else j - 1
    once = fold_width(a, a / 2)
    if once < value:
        return Bound(once, Direction.UPPER, Method.MULTI_FOLD, {"u0": a / 2, "folds": 1})
    return Bound(value, Direction.UPPER, Method.MULTI_FOLD, {"u0": u1, "folds": folds})


def s_ec_closed_form(a):
    """a(3a - 1)/(a^2 + 2a - 1); equals s_ec on [1, 4.2360...]."""
    return a * (3 * a - 1) / (a * a + 2 * a - 1)


def u0_cube_closed_form(a):
    return a * (2 * a - 1) / (a * a + 2 * a - 1)


def s_pb_branch(a, k: int):
    return (a - 2) / (2 * k) + (k + 2)


def s_pb(a: float) -> Bound:
    """Folding bound for the polydisc P(1, a) into a 4-ball."""
    _require_a(a)
    if a <= 2:
        return Bound(a + 1, Direction.UPPER, Method.INCLUSION)
    k = 1
    while a > 2 * (k * k + k + 1):
        k += 1
    return Bound(s_pb_branch(a, k), Direction.UPPER, Method.CLOSED_FORM_FOLD, {"k": k})


def s_pc_branches(a, n_folds: int):
    """(flat branch, sloped branch) of the polydisc-into-cube bound for N folds."""
    return n_folds + 1, (a + 2 * n_folds) / (n_folds + 1)


def s_pc(a: float) -> Bound:
    """Folding bound for P(1, a) into a 4-cube; the inclusion for a <= 2."""
    _require_a(a)
    if a <= 2:
        return Bound(a, Direction.UPPER, Method.INCLUSION)
    big_n = 1
    while a > big_n * (big_n + 1) + 2:
        big_n += 1
    flat, sloped = s_pc_branches(a, big_n)
    value = flat if a <= big_n * big_n + 1 else sloped
    return Bound(float(value), Direction.UPPER, Method.CLOSED_FORM_FOLD, {"N": big_n})


def s_pc_2n_branches(a, n_folds: int, n: int):
    layers = (n_folds + 1) ** (n - 1)
    return n_folds + 1, (a - 2) / layers + 2


def s_pc_2n(a: float, n: int) -> Bound:
    """Folding bound for P(1, ..., 1, a) into the 2n-dimensional cube."""
    if not a > 2:
        raise OutOfInterval(f"need a > 2, got {a}")
    if n < 2:
        raise ValueError("n must be >= 2")
    x = a - 2
    big_n = 1
    while x > big_n * (big_n + 1) ** (n - 1):
        big_n += 1
    flat, sloped = s_pc_2n_branches(a, big_n, n)
    value = flat if x <= (big_n - 1) * (big_n + 1) ** (n - 1) else sloped
    return Bound(float(value), Direction.UPPER, Method.CLOSED_FORM_FOLD, {"N": big_n})


def diagonal_cube_bound(r: float, n: int = 2) -> tuple[Bound, bool]:
    """Linear diagonal map sending P(1, ..., 1, r^2) into C(1/2 + r^2/2 + r).

    The second item says whether this beats the trivial cube C(r^2), which
    happens exactly for r > 1 + sqrt(2).
    """
    if not r > 0:
        raise ValueError("r must be positive")
    if n < 2:
        raise ValueError("n must be >= 2")
    bound = 0.5 + r * r / 2 + r
    return Bound(bound, Direction.UPPER, Method.DIAGONAL, {"r": r}), bound < r * r
