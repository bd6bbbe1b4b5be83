"""
Diagonals

Piecewise-linear diagonals, the 0/2 slope class and its approximation
scheme, diagonal copulas E_delta with their two-point Markov kernel, and the
correspondence between 0/2 diagonals and bi-monotone symmetric shuffles.
"""

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, List, Sequence, Set, Tuple

import numpy as np

from .errors import (
    DiagonalAxiom,
    DiagonalError,
    Diagonal02Error,
    DomainError,
    KernelBreakpointError,
    ShuffleDefect,
    ShuffleDiagonalError,
)
from .exactnum import ONE, ZERO, RationalLike, to_rational
from .segmeasures import Branch, KernelSupport, from_permutation
from .shuffles import Involution, Permutation, classify

DiagonalLike = Callable[[Fraction], Fraction]


@dataclass(frozen=True)
class PiecewiseLinear:
    """Continuous piecewise-linear function given by its breakpoint table."""
    breakpoints: Tuple[Fraction, ...]
    values: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        breakpoints = tuple(to_rational(t) for t in self.breakpoints)
        values = tuple(to_rational(v) for v in self.values)
        object.__setattr__(self, "breakpoints", breakpoints)
        object.__setattr__(self, "values", values)
        if len(breakpoints) < 2 or len(breakpoints) != len(values):
            raise DiagonalError(
                DiagonalAxiom.BREAKPOINTS,
                f"need matching tables of length >= 2, got {len(breakpoints)} and {len(values)}",
            )
        for left, right in zip(breakpoints, breakpoints[1:]):
            if left >= right:
                raise DiagonalError(DiagonalAxiom.BREAKPOINTS, f"{left} >= {right}")
        object.__setattr__(self, "_slope_table", tuple(
            (v1 - v0) / (t1 - t0)
            for t0, t1, v0, v1 in zip(breakpoints, breakpoints[1:], values, values[1:])
        ))

    def piece_index(self, t: Fraction) -> int:
        """Index j of the piece [t_j, t_{j+1}] containing t (left piece at breakpoints)."""
        if not self.breakpoints[0] <= t <= self.breakpoints[-1]:
            raise DomainError(f"{t} outside [{self.breakpoints[0]}, {self.breakpoints[-1]}]")
        index = bisect.bisect_left(self.breakpoints, t) - 1
        return min(max(index, 0), len(self.breakpoints) - 2)

    def __call__(self, t: RationalLike) -> Fraction:
        t = to_rational(t)
        j = self.piece_index(t)
        return self.values[j] + self.slopes()[j] * (t - self.breakpoints[j])

    def slopes(self) -> Tuple[Fraction, ...]:
        return self._slope_table  # type: ignore[attr-defined, no-any-return]

    def is_breakpoint(self, t: Fraction) -> bool:
        position = bisect.bisect_left(self.breakpoints, t)
        return position < len(self.breakpoints) and self.breakpoints[position] == t

    def slope_at(self, t: RationalLike) -> Fraction:
        t = to_rational(t)
        if self.is_breakpoint(t):
            raise KernelBreakpointError(f"Slope undefined at breakpoint {t}")
        return self.slopes()[self.piece_index(t)]

    def quasi_inverse(self, y: Fraction) -> Fraction:
        """min{z : f(z) >= y} for a non-decreasing f."""
        if y <= self.values[0]:
            return self.breakpoints[0]
        pairs = zip(self.breakpoints, self.breakpoints[1:], self.values, self.values[1:])
        for t0, t1, v0, v1 in pairs:
            if v1 >= y:
                return t0 + (y - v0) / (v1 - v0) * (t1 - t0)
        raise DomainError(f"{y} exceeds the range of the function")

    def companion(self) -> "PiecewiseLinear":
        """g(t) = 2t - delta(t)."""
        return PiecewiseLinear(
            self.breakpoints, tuple(2 * t - v for t, v in zip(self.breakpoints, self.values))
        )


@dataclass(frozen=True)
class Diagonal(PiecewiseLinear):
    """
    A diagonal: delta(0) = 0, delta(1) = 1, non-decreasing, 2-Lipschitz and
    below the identity.
    """

    def __post_init__(self) -> None:
        super().__post_init__()
        breakpoints, values = self.breakpoints, self.values
        if breakpoints[0] != 0 or breakpoints[-1] != 1:
            raise DiagonalError(DiagonalAxiom.BREAKPOINTS, "breakpoints must run from 0 to 1")
        if values[0] != 0 or values[-1] != 1:
            raise DiagonalError(
                DiagonalAxiom.ENDPOINT, f"delta(0) = {values[0]}, delta(1) = {values[-1]}"
            )
        for j, slope in enumerate(self.slopes()):
            if slope < 0:
                raise DiagonalError(DiagonalAxiom.MONOTONICITY, f"slope {slope} on piece {j}")
            if slope > 2:
                raise DiagonalError(DiagonalAxiom.LIPSCHITZ, f"slope {slope} on piece {j}")
        for t, value in zip(breakpoints, values):
            if value > t:
                raise DiagonalError(DiagonalAxiom.BELOW_IDENTITY, f"delta({t}) = {value}")


def validate_diagonal(breakpoints: Sequence[RationalLike], values: Sequence[RationalLike]) -> Diagonal:
    return Diagonal(tuple(to_rational(t) for t in breakpoints), tuple(to_rational(v) for v in values))


def delta_m() -> Diagonal:
    return Diagonal((ZERO, ONE), (ZERO, ONE))


def delta_w() -> Diagonal:
    return Diagonal((ZERO, Fraction(1, 2), ONE), (ZERO, ZERO, ONE))


@dataclass(frozen=True)
class Diagonal02:
    """A diagonal with slope 0 or 2 on each of n equal intervals."""
    n: int
    slopes: Tuple[int, ...]

    def __post_init__(self) -> None:
        slopes = tuple(self.slopes)
        object.__setattr__(self, "slopes", slopes)
        if self.n < 2 or self.n % 2:
            raise Diagonal02Error(f"n must be even and positive, got {self.n}")
        if len(slopes) != self.n:
            raise Diagonal02Error(f"expected {self.n} slopes, got {len(slopes)}")
        twos = 0
        for i, slope in enumerate(slopes, 1):
            if slope not in (0, 2):
                raise Diagonal02Error(f"slope {slope!r} on interval {i} is not 0 or 2")
            twos += slope == 2
            if 2 * twos > i:
                raise Diagonal02Error(f"prefix constraint violated at interval {i}")
        if 2 * twos != self.n:
            raise Diagonal02Error(f"{twos} slope-2 intervals, need {self.n // 2}")

    @classmethod
    def from_pattern(cls, n: int, pattern: str) -> "Diagonal02":
        if any(ch not in "02" for ch in pattern):
            raise Diagonal02Error(f"pattern {pattern!r} may only contain '0' and '2'")
        return cls(n, tuple(int(ch) for ch in pattern))

    @property
    def pattern(self) -> str:
        return "".join(str(slope) for slope in self.slopes)

    @property
    def j_two(self) -> Tuple[int, ...]:
        return tuple(i for i, slope in enumerate(self.slopes, 1) if slope == 2)

    @property
    def j_zero(self) -> Tuple[int, ...]:
        return tuple(i for i, slope in enumerate(self.slopes, 1) if slope == 0)

    def to_diagonal(self) -> Diagonal:
        values = [ZERO]
        for slope in self.slopes:
            values.append(values[-1] + Fraction(slope, self.n))
        return Diagonal(tuple(Fraction(i, self.n) for i in range(self.n + 1)), tuple(values))


def enumerate_diagonal02(n: int) -> Iterator[Diagonal02]:
    """All 0/2 slope patterns on n intervals, in lexicographic order."""
    if n < 2 or n % 2:
        raise Diagonal02Error(f"n must be even and positive, got {n}")
    half = n // 2
    pattern: List[int] = []

    def extend(zeros: int, twos: int) -> Iterator[Diagonal02]:
        if len(pattern) == n:
            yield Diagonal02(n, tuple(pattern))
            return
        if zeros < half:
            pattern.append(0)
            yield from extend(zeros + 1, twos)
            pattern.pop()
        if twos < zeros:
            pattern.append(2)
            yield from extend(zeros, twos + 1)
            pattern.pop()

    yield from extend(0, 0)


def approximate_02(d: DiagonalLike, n: int) -> Diagonal02:
    """
    Approximate a diagonal from below by a 0/2 diagonal on 2n intervals.

    With y_i = d(i/2n) and i_k = min{i : y_i >= k/n}, the result has slope 2
    exactly on the intervals ((i_k - 1)/2n, i_k/2n).

    Args:
        d: Any diagonal, evaluated at rational points
        n: Resolution; the sup-distance to d is at most 1/n

    Returns:
        Diagonal02 on 2n intervals
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    samples = [to_rational(d(Fraction(i, 2 * n))) for i in range(2 * n + 1)]
    slopes = [0] * (2 * n)
    for k in range(1, n + 1):
        level = Fraction(k, n)
        i_k = next(i for i in range(1, 2 * n + 1) if samples[i] >= level)
        slopes[i_k - 1] = 2
    return Diagonal02(2 * n, tuple(slopes))


def _merged_breakpoints(a: PiecewiseLinear, b: PiecewiseLinear) -> List[Fraction]:
    return sorted(set(a.breakpoints) | set(b.breakpoints))


def sup_distance(a: PiecewiseLinear, b: PiecewiseLinear) -> Fraction:
    """Exact sup |a - b| over the common domain."""
    return max(abs(a(t) - b(t)) for t in _merged_breakpoints(a, b))


def dominates(a: PiecewiseLinear, b: PiecewiseLinear) -> bool:
    """True when a >= b everywhere."""
    return all(a(t) >= b(t) for t in _merged_breakpoints(a, b))


def ed_cdf(d: DiagonalLike, u: RationalLike, v: RationalLike) -> Fraction:
    """E_delta(u, v) = min(u, v, (delta(u) + delta(v)) / 2)."""
    u, v = to_rational(u), to_rational(v)
    if not (0 <= u <= 1 and 0 <= v <= 1):
        raise DomainError(f"CDF arguments must lie in [0,1], got ({u}, {v})")
    return min(u, v, (to_rational(d(u)) + to_rational(d(v))) / 2)


def ed_numeric_cdf(d: PiecewiseLinear) -> Callable[[np.ndarray, np.ndarray], np.ndarray]:
    """Vectorised E_delta for the grid oracle."""
    knots = [float(t) for t in d.breakpoints]
    levels = [float(v) for v in d.values]

    def evaluate(u: np.ndarray, v: np.ndarray) -> np.ndarray:
        u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
        half_sum = (np.interp(u, knots, levels) + np.interp(v, knots, levels)) / 2.0
        return np.minimum(np.minimum(u, v), half_sum)

    return evaluate


@dataclass(frozen=True)
class KernelAtom:
    """Two-point kernel of E_delta at t: mass weight_L at L, the rest at U."""
    t: Fraction
    L: Fraction
    U: Fraction
    weight_L: Fraction


def kernel_at(d: Diagonal, t: RationalLike) -> KernelAtom:
    """
    Kernel atoms of the diagonal copula at an interior, non-breakpoint t.

    Raises:
        KernelBreakpointError: If t is a breakpoint of d
        DomainError: If t is not in (0, 1)
    """
    t = to_rational(t)
    if not 0 < t < 1:
        raise DomainError(f"Kernel defined for t in (0,1), got {t}")
    slope = d.slope_at(t)
    g = d.companion()
    return KernelAtom(
        t=t,
        L=g.quasi_inverse(d(t)),
        U=d.quasi_inverse(g(t)),
        weight_L=slope / 2,
    )


def kernel_support(d: Diagonal) -> KernelSupport:
    """
    The support of E_delta as weighted branches t -> L(t) and t -> U(t).

    Pieces of d are split wherever delta(t) meets a breakpoint value of g or
    g(t) meets a breakpoint value of delta; L and U are linear in between.
    """
    g = d.companion()
    cuts: Set[Fraction] = set(d.breakpoints)
    g_levels = set(g.values)
    d_levels = set(d.values)
    for t0, t1, slope in zip(d.breakpoints, d.breakpoints[1:], d.slopes()):
        d0, g0 = d(t0), g(t0)
        if slope > 0:
            for level in g_levels:
                if d0 < level < d(t1):
                    cuts.add(t0 + (level - d0) / slope)
        if slope < 2:
            for level in d_levels:
                if g0 < level < g(t1):
                    cuts.add(t0 + (level - g0) / (2 - slope))

    branches: List[Branch] = []
    ordered = sorted(cuts)
    for a, b in zip(ordered, ordered[1:]):
        t1, t2 = a + (b - a) / 3, a + 2 * (b - a) / 3
        first, second = kernel_at(d, t1), kernel_at(d, t2)
        weight_l = first.weight_L
        lower = _line_through(t1, first.L, t2, second.L)
        upper = _line_through(t1, first.U, t2, second.U)
        if weight_l > 0 and weight_l < 1 and lower == upper:
            branches.append(Branch(a, b, lower[0], lower[1], ONE))
            continue
        if weight_l > 0:
            branches.append(Branch(a, b, lower[0], lower[1], weight_l))
        if weight_l < 1:
            branches.append(Branch(a, b, upper[0], upper[1], 1 - weight_l))
    return KernelSupport(tuple(branches))


def _line_through(x1: Fraction, y1: Fraction, x2: Fraction, y2: Fraction) -> Tuple[Fraction, Fraction]:
    slope = (y2 - y1) / (x2 - x1)
    return slope, y1 - slope * x1


def diagonal_of_shuffle(permutation: Permutation) -> Diagonal:
    """The diagonal section t -> C(t, t) of the shuffle copula; kinks only at i/N."""
    support = from_permutation(permutation)
    n = permutation.n
    knots = tuple(Fraction(i, n) for i in range(n + 1))
    return Diagonal(knots, tuple(support.cdf(t, t) for t in knots))


def diagonal_to_shuffle(d02: Diagonal02) -> Involution:
    """Pair the slope-2 intervals with the slope-0 intervals in increasing order."""
    values = [0] * d02.n
    for two, zero in zip(d02.j_two, d02.j_zero):
        values[two - 1] = zero
        values[zero - 1] = two
    return Involution(d02.n, tuple(values))


def shuffle_to_diagonal(involution: Involution) -> Diagonal02:
    """
    The diagonal of a fixed-point-free, bi-monotone symmetric shuffle as a 0/2 pattern.

    Raises:
        ShuffleDiagonalError: If pi has fixed points or is not increasing on I-
    """
    classes = classify(involution)
    if classes.i_zero:
        raise ShuffleDiagonalError(ShuffleDefect.FIXED_POINTS, f"fixed at {classes.i_zero}")
    images = [involution(i) for i in classes.i_minus]
    if any(left >= right for left, right in zip(images, images[1:])):
        raise ShuffleDiagonalError(ShuffleDefect.NOT_BIMONOTONE, f"pi on I- is {tuple(images)}")
    diagonal = diagonal_of_shuffle(involution)
    slopes = tuple(int(slope) for slope in diagonal.slopes())
    return Diagonal02(involution.n, slopes)

