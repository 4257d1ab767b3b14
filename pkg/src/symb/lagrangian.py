"""Lagrangian folding: wrapping a box around the torus with unimodular maps.

Shapes are viewed as Lagrangian products of a box and a simplex (ellipsoids)
or of two boxes (polydiscs).  An integer-rational matrix M that is injective
on the box modulo the lattice folds the box into the torus, and the dual map
(M^{-1})^T moves the simplex or box into a small target.  All matrix work is
done in exact rationals; floats only appear in the returned bounds.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .domain import Bound, Direction, Method
from .errors import CapTooSmall, DimensionMismatch, InvalidK, NotCoprime


Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class RationalMatrix:
    entries: Matrix

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        if any(len(r) != len(rows) for r in rows):
            raise DimensionMismatch("matrix must be square")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        cols = list(zip(*other.entries))
        return RationalMatrix(tuple(
            tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols)
            for row in self.entries))

    def apply(self, vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return tuple(sum((x * y for x, y in zip(row, vec)), Fraction(0))
                     for row in self.entries)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(tuple(zip(*self.entries)))

    def determinant(self) -> Fraction:
        a = [list(row) for row in self.entries]
        n = self.n
        det = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                det = -det
            det *= a[col][col]
            for r in range(col + 1, n):
                f = a[r][col] / a[col][col]
                if f:
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return det

    def inverse(self) -> "RationalMatrix":
        n = self.n
        a = [list(row) + [Fraction(int(i == j)) for j in range(n)]
             for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                raise ZeroDivisionError("singular matrix")
            a[col], a[pivot] = a[pivot], a[col]
            p = a[col][col]
            a[col] = [x / p for x in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return RationalMatrix(tuple(tuple(row[n:]) for row in a))

    def inverse_transpose(self) -> "RationalMatrix":
        return self.inverse().transpose()


def pairwise_coprime(ks: Sequence[int]) -> bool:
    return all(math.gcd(x, y) == 1 for x, y in itertools.combinations(ks, 2))


def _check_m_mode(ks: Sequence[int]) -> tuple[int, ...]:
    ks = tuple(int(k) for k in ks)
    if not ks or any(k < 1 for k in ks):
        raise InvalidK(f"need at least one k >= 1, got {ks}")
    if not pairwise_coprime(ks):
        raise NotCoprime(f"{ks} are not pairwise coprime")
    return ks


def _check_n_mode(ks: Sequence[int]) -> tuple[int, ...]:
    ks = tuple(int(k) for k in ks)
    if not ks or any(k < 2 for k in ks):
        raise InvalidK(f"every k must be >= 2, got {ks}")
    return ks


def m_matrix(ks: Sequence[int]) -> RationalMatrix:
    """Identity with last column (-1/k_1, ..., -1/k_{n-1}, 1).

    Injective modulo Z^n on the box (1/k_1, ..., 1/k_{n-1}, k_1 ... k_{n-1})
    when the k_i are pairwise coprime.  Not validated here so that
    non-coprime probes can be built.
    """
    ks = tuple(int(k) for k in ks)
    n = len(ks) + 1
    rows = []
    for i in range(n):
        row = [Fraction(int(i == j)) for j in range(n)]
        if i < n - 1:
            row[-1] = Fraction(-1, ks[i])
        rows.append(tuple(row))
    return RationalMatrix(tuple(rows))


def m_star_matrix(ks: Sequence[int]) -> RationalMatrix:
    ks = tuple(int(k) for k in ks)
    n = len(ks) + 1
    rows = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n - 1)]
    rows.append(tuple(Fraction(1, k) for k in ks) + (Fraction(1),))
    return RationalMatrix(tuple(rows))


def n_matrix(ks: Sequence[int]) -> RationalMatrix:
    """Box map paired with :func:`n_star_matrix` (its inverse transpose).

    Upper unitriangular with -1/k_{i+1} directly right of the diagonal; the
    entries further right make the pairing with N* exact.  It is injective
    modulo Z^n on the box (1/(k_2...k_n), k_2, ..., k_n), which
    :func:`torus_injectivity_check` confirms on sample grids.
    """
    return n_star_matrix(ks).inverse_transpose()


def n_star_matrix(ks: Sequence[int]) -> RationalMatrix:
    """Dual map acting on the simplex (or box) factor.

    Lower unitriangular; below the diagonal entry (i, j) is
    (-1)**(i-j+1) / (k_{j+1} ... k_i) with k indexed from 2.
    """
    ks = _check_n_mode(ks)
    n = len(ks) + 1
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if j > i:
                row.append(Fraction(0))
            elif j == i:
                row.append(Fraction(1))
            else:
                sign = -1 if (i - j) % 2 == 0 else 1
                row.append(Fraction(sign, math.prod(ks[j:i])))
        rows.append(tuple(row))
    return RationalMatrix(tuple(rows))


def l_eb(a: float) -> Bound:
    """min over k of max(k + 1, a/k): Lagrangian bound for E(1, a) into a ball."""
    if not a >= 1:
        raise ValueError(f"need a >= 1, got {a}")
    k = 1
    while a > k * (k + 2):
        k += 1
    value = float(k + 1) if a <= k * (k + 1) else a / k
    return Bound(value, Direction.UPPER, Method.LAGRANGIAN_M, {"ks": (k,)})


def l_pc(a: float) -> Bound:
    """min over k of max(k, a/k + 1): Lagrangian bound for P(1, a) into a cube."""
    if not a >= 1:
        raise ValueError(f"need a >= 1, got {a}")
    k = 1
    while a > k * k:
        k += 1
    value = float(k) if a <= k * (k - 1) else a / k + 1
    return Bound(value, Direction.UPPER, Method.LAGRANGIAN_M, {"ks": (k,)})


def ball_bound_m(ks: Sequence[int], a: float) -> Bound:
    """E(1, ..., 1, a) into the ball of capacity max(k_max + 1, a / prod k)."""
    ks = _check_m_mode(ks)
    value = max(max(ks) + 1, a / math.prod(ks))
    return Bound(float(value), Direction.UPPER, Method.LAGRANGIAN_M, {"ks": ks})


def cube_bound_m(ks: Sequence[int], a: float) -> Bound:
    """P(1, ..., 1, a) into the cube of size max(k_max, n - 1 + a / prod k)."""
    ks = _check_m_mode(ks)
    value = max(max(ks), len(ks) + a / math.prod(ks))
    return Bound(float(value), Direction.UPPER, Method.LAGRANGIAN_M, {"ks": ks})


def _scaled_n_star(ks: Sequence[int], a_rest: Sequence[float]) -> list[list[Fraction]]:
    ks = _check_n_mode(ks)
    if len(ks) < 2:
        raise DimensionMismatch("the N-construction needs n >= 3")
    if len(a_rest) != len(ks):
        raise DimensionMismatch(f"{len(a_rest)} areas for {len(ks)} k's")
    if any(not x > 0 for x in a_rest):
        raise ValueError("areas must be positive")
    scales = [Fraction(math.prod(ks))] + [Fraction(x) / k for x, k in zip(a_rest, ks)]
    star = n_star_matrix(ks).entries
    return [[x * s for x, s in zip(row, scales)] for row in star]


def ball_bound_n(ks: Sequence[int], a_rest: Sequence[float]) -> Bound:
    """Ball capacity for E(1, a_2, ..., a_n) from the simplex moved by N*.

    Columns of the scaled matrix are the simplex vertices (the origin is the
    remaining one).  Each coordinate is shifted so its minimum over all
    vertices is zero, and the largest vertex coordinate sum is the answer.
    """
    m = _scaled_n_star(ks, a_rest)
    shifts = [-min(Fraction(0), min(row)) for row in m]
    shifted = [[x + s for x in row] for row, s in zip(m, shifts)]
    sums = [sum(col) for col in zip(*shifted)]
    sums.append(sum(shifts))
    return Bound(float(max(sums)), Direction.UPPER, Method.LAGRANGIAN_N,
                 {"ks": tuple(int(k) for k in ks)})


def polydisc_bound_n(ks: Sequence[int], a_rest: Sequence[float]) -> list[float]:
    """Factor sizes (A_1, ..., A_n) of a polydisc containing P(1, a_2, ..., a_n)."""
    m = _scaled_n_star(ks, a_rest)
    return [float(sum(abs(x) for x in row)) for row in m]


def _first_primes(count: int) -> list[int]:
    primes: list[int] = []
    cand = 2
    while len(primes) < count:
        if all(cand % p for p in primes if p * p <= cand):
            primes.append(cand)
        cand += 1
    return primes


def find_coprime_ks(caps: Sequence[float]) -> tuple[int, ...]:
    """Pairwise coprime k_i < cap_i from the prime-shift construction.

    With the first primes p_i and l the lcm of their differences,
    k_i = m_i l - p_i is taken with m_i maximal below the cap.  Distinct
    maxima m_i can break coprimality, so later entries step m_i down until
    they are coprime to the earlier ones; if that runs out of room, a common
    m = min m_i is used, which is always coprime.
    """
    if not caps:
        raise ValueError("need at least one cap")
    fcaps = [Fraction(c) for c in caps]
    primes = _first_primes(len(caps))
    diffs = [abs(p - q) for p, q in itertools.combinations(primes, 2)]
    step = math.lcm(*diffs) if diffs else 1
    # largest m with m*step - p < cap
    ms = [math.ceil((c + p) / step) - 1 for c, p in zip(fcaps, primes)]
    ks = [m * step - p for m, p in zip(ms, primes)]
    if any(k < 1 for k in ks):
        raise CapTooSmall(f"caps {list(caps)} leave no admissible k")

    repaired = list(ks)
    for i in range(1, len(repaired)):
        while any(math.gcd(repaired[i], repaired[j]) > 1 for j in range(i)):
            repaired[i] -= step
            if repaired[i] < 1:
                break
        if repaired[i] < 1:
            break
    else:
        return tuple(repaired)

    m = min(ms)
    common = [m * step - p for p in primes]
    if any(k < 1 for k in common):
        raise CapTooSmall(f"caps {list(caps)} leave no coprime tuple")
    return tuple(common)


def torus_injectivity_check(matrix: RationalMatrix, box: Sequence, resolution: int) -> bool:
    """Sample the box on a cell-centred grid and look for collisions mod Z^n.

    Exact rational arithmetic throughout, so a reported collision is a real
    one.  A clean result only covers the sampled points.
    """
    n = matrix.n
    if len(box) != n:
        raise DimensionMismatch(f"box has {len(box)} sides, matrix is {n}x{n}")
    if resolution < 1:
        raise ValueError("resolution must be >= 1")
    sides = [Fraction(b) for b in box]
    axes = [[(m + Fraction(1, 2)) * s / resolution for m in range(resolution)]
            for s in sides]
    seen = set()
    for point in itertools.product(*axes):
        image = tuple(x - math.floor(x) for x in matrix.apply(point))
        if image in seen:
            return False
        seen.add(image)
    return True
