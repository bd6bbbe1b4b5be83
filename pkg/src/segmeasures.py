"""
Segment Measures

Copulas whose mass sits on finitely many line segments: the measure-preserving
maps of completely dependent copulas (SegmentMap, slopes +-1) and weighted
branch families such as the supports of diagonal copulas (KernelSupport).
Both give exact CDF values and exact footrule/rho by piecewise polynomial
integration. A midpoint grid oracle estimates the same statistics from any
vectorised CDF.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Sequence, Tuple

import numpy as np

from .errors import DomainError, KernelSupportError, SegmentMapError
from .exactnum import ONE, ZERO, RationalLike, format_rational, to_rational
from .shuffles import Permutation

ArrayCDF = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class Branch:
    """The segment x -> slope * x + intercept over (x_lo, x_hi), carrying `weight` of the mass."""
    x_lo: Fraction
    x_hi: Fraction
    slope: Fraction
    intercept: Fraction
    weight: Fraction = ONE

    def __post_init__(self) -> None:
        for name in ("x_lo", "x_hi", "slope", "intercept", "weight"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))

    def at(self, x: Fraction) -> Fraction:
        return self.slope * x + self.intercept

    def image(self) -> Tuple[Fraction, Fraction]:
        ends = (self.at(self.x_lo), self.at(self.x_hi))
        return min(ends), max(ends)

    def mass_below(self, u: Fraction, v: Fraction) -> Fraction:
        """weight * length of {x in (x_lo, min(x_hi, u)) : branch(x) <= v}."""
        upper = min(self.x_hi, u)
        if upper <= self.x_lo:
            return ZERO
        if self.slope == 0:
            length = upper - self.x_lo if self.intercept <= v else ZERO
        else:
            threshold = (v - self.intercept) / self.slope
            if self.slope > 0:
                length = max(ZERO, min(upper, threshold) - self.x_lo)
            else:
                length = max(ZERO, upper - max(self.x_lo, threshold))
        return self.weight * length

    def integral_min_identity(self) -> Fraction:
        """weight * integral over the branch of min(u, branch(u))."""
        cuts = [self.x_lo, self.x_hi]
        if self.slope != 1:
            crossing = self.intercept / (1 - self.slope)
            if self.x_lo < crossing < self.x_hi:
                cuts.insert(1, crossing)
        total = ZERO
        for lo, hi in zip(cuts, cuts[1:]):
            middle = (lo + hi) / 2
            if middle <= self.at(middle):
                total += _integrate_linear(ONE, ZERO, lo, hi)
            else:
                total += _integrate_linear(self.slope, self.intercept, lo, hi)
        return self.weight * total

    def integral_u_times_branch(self) -> Fraction:
        """weight * integral over the branch of u * branch(u)."""
        a, b = self.x_lo, self.x_hi
        return self.weight * (
            self.slope * (b ** 3 - a ** 3) / 3 + self.intercept * (b * b - a * a) / 2
        )

    def as_strings(self) -> Tuple[str, ...]:
        return tuple(format_rational(value) for value in (self.x_lo, self.x_hi, self.slope, self.intercept))


def _integrate_linear(slope: Fraction, intercept: Fraction, lo: Fraction, hi: Fraction) -> Fraction:
    return slope * (hi * hi - lo * lo) / 2 + intercept * (hi - lo)


class SupportMeasure:
    """Shared behaviour of measures concentrated on finitely many branches."""

    branches: Tuple[Branch, ...]

    def cdf(self, u: RationalLike, v: RationalLike) -> Fraction:
        u, v = to_rational(u), to_rational(v)
        if not (0 <= u <= 1 and 0 <= v <= 1):
            raise DomainError(f"CDF arguments must lie in [0,1], got ({u}, {v})")
        return sum((branch.mass_below(u, v) for branch in self.branches), ZERO)

    def numeric_cdf(self) -> ArrayCDF:
        """Vectorised double precision CDF for the grid oracle."""
        rows = [
            (float(b.x_lo), float(b.x_hi), float(b.slope), float(b.intercept), float(b.weight))
            for b in self.branches
        ]

        def evaluate(u: np.ndarray, v: np.ndarray) -> np.ndarray:
            u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
            total = np.zeros(u.shape)
            for x_lo, x_hi, slope, intercept, weight in rows:
                upper = np.minimum(x_hi, u)
                if slope > 0:
                    length = np.minimum(upper, (v - intercept) / slope) - x_lo
                elif slope < 0:
                    length = upper - np.maximum(x_lo, (v - intercept) / slope)
                else:
                    length = np.where(intercept <= v, upper - x_lo, 0.0)
                total += weight * np.clip(length, 0.0, None)
            return total

        return evaluate


@dataclass(frozen=True)
class SegmentMap(SupportMeasure):
    """
    A piecewise-linear measure-preserving map h of [0, 1] with slopes +-1.

    The pieces are sorted by x_lo, tile (0, 1), and their images tile [0, 1].
    """
    pieces: Tuple[Branch, ...]

    def __post_init__(self) -> None:
        pieces = tuple(sorted(self.pieces, key=lambda piece: piece.x_lo))
        object.__setattr__(self, "pieces", pieces)
        _validate_segment_map(pieces)

    @property
    def branches(self) -> Tuple[Branch, ...]:  # type: ignore[override]
        return self.pieces

    @classmethod
    def from_tuples(cls, pieces: Iterable[Sequence[RationalLike]]) -> "SegmentMap":
        return cls(tuple(Branch(*piece) for piece in pieces))

    @classmethod
    def identity(cls) -> "SegmentMap":
        return cls((Branch(ZERO, ONE, ONE, ZERO),))

    def __call__(self, x: RationalLike) -> Fraction:
        x = to_rational(x)
        for piece in self.pieces:
            if piece.x_lo <= x < piece.x_hi or (x == 1 and piece.x_hi == 1):
                return piece.at(x)
        raise DomainError(f"h is defined on [0,1], got {x}")

    def refine(self, at: RationalLike) -> "SegmentMap":
        """Split the piece containing `at` into two collinear pieces."""
        at = to_rational(at)
        refined: List[Branch] = []
        split = False
        for piece in self.pieces:
            if piece.x_lo < at < piece.x_hi:
                refined.append(Branch(piece.x_lo, at, piece.slope, piece.intercept))
                refined.append(Branch(at, piece.x_hi, piece.slope, piece.intercept))
                split = True
            else:
                refined.append(piece)
        if not split:
            raise SegmentMapError(f"{at} is not interior to any piece")
        return SegmentMap(tuple(refined))


def _validate_segment_map(pieces: Tuple[Branch, ...]) -> None:
    if not pieces:
        raise SegmentMapError("A segment map needs at least one piece")
    expected = ZERO
    for piece in pieces:
        if piece.slope not in (1, -1):
            raise SegmentMapError(f"Slope {piece.slope} is not +-1")
        if piece.weight != 1:
            raise SegmentMapError("Segment map pieces carry unit weight")
        if piece.x_lo != expected or piece.x_hi <= piece.x_lo:
            raise SegmentMapError(
                f"Pieces must tile (0,1): expected a piece starting at {expected}, "
                f"got ({piece.x_lo}, {piece.x_hi})"
            )
        lo, hi = piece.image()
        if lo < 0 or hi > 1:
            raise SegmentMapError(f"Piece ({piece.x_lo}, {piece.x_hi}) maps outside [0,1]")
        expected = piece.x_hi
    if expected != 1:
        raise SegmentMapError(f"Pieces stop at {expected}, not at 1")
    covered = ZERO
    for lo, hi in sorted(piece.image() for piece in pieces):
        if lo != covered:
            raise SegmentMapError(f"Images do not tile [0,1]: gap or overlap at {covered}")
        covered = hi
    if covered != 1:
        raise SegmentMapError(f"Images stop at {covered}, not at 1")


@dataclass(frozen=True)
class KernelSupport(SupportMeasure):
    """
    Weighted branches of a Markov kernel with finitely many atoms per point.

    Over every point of (0, 1) the weights of the covering branches sum to one.
    """
    branches: Tuple[Branch, ...]  # type: ignore[misc]

    def __post_init__(self) -> None:
        branches = tuple(sorted(self.branches, key=lambda b: (b.x_lo, b.x_hi, b.slope, b.intercept)))
        object.__setattr__(self, "branches", branches)
        if not branches:
            raise KernelSupportError("A kernel support needs at least one branch")
        for branch in branches:
            if not 0 <= branch.x_lo < branch.x_hi <= 1:
                raise KernelSupportError(f"Bad branch interval ({branch.x_lo}, {branch.x_hi})")
            if not 0 < branch.weight <= 1:
                raise KernelSupportError(f"Branch weight {branch.weight} outside (0,1]")
            lo, hi = branch.image()
            if lo < 0 or hi > 1:
                raise KernelSupportError(f"Branch over ({branch.x_lo}, {branch.x_hi}) maps outside [0,1]")
        cuts = sorted({ZERO, ONE} | {b.x_lo for b in branches} | {b.x_hi for b in branches})
        for lo, hi in zip(cuts, cuts[1:]):
            mass = sum((b.weight for b in branches if b.x_lo <= lo and hi <= b.x_hi), ZERO)
            if mass != 1:
                raise KernelSupportError(f"Weights sum to {mass} on ({lo}, {hi})")


def from_permutation(permutation: Permutation) -> SegmentMap:
    """The shuffle S_pi: piece i is ((i-1)/N, i/N) shifted by (pi(i) - i)/N."""
    n = permutation.n
    return SegmentMap(tuple(
        Branch(Fraction(i - 1, n), Fraction(i, n), ONE, Fraction(value - i, n))
        for i, value in enumerate(permutation.pi, 1)
    ))


def cdf(support: SupportMeasure, u: RationalLike, v: RationalLike) -> Fraction:
    """C(u, v) = mass of {x <= u : h(x) <= v}."""
    return support.cdf(u, v)


def phi_exact(support: SupportMeasure) -> Fraction:
    """Spearman's footrule 6 * integral of min(u, h(u)) - 2."""
    return 6 * sum((branch.integral_min_identity() for branch in support.branches), ZERO) - 2


def rho_exact(support: SupportMeasure) -> Fraction:
    """Spearman's rho 12 * integral of u h(u) - 3."""
    return 12 * sum((branch.integral_u_times_branch() for branch in support.branches), ZERO) - 3


@dataclass(frozen=True)
class GridOracleConfig:
    """
    Midpoint-rule quadrature on an n-cell grid per axis.

    The footrule error is at most 3/n (the diagonal section is 2-Lipschitz);
    the rho error is bounded conservatively by 24/n.
    """
    resolution: int
    row_block: int = 256

    def __post_init__(self) -> None:
        if self.resolution < 1:
            raise ValueError(f"Grid resolution must be positive, got {self.resolution}")

    @property
    def phi_bound(self) -> Fraction:
        return Fraction(3, self.resolution)

    @property
    def rho_bound(self) -> Fraction:
        return Fraction(24, self.resolution)

    def midpoints(self) -> np.ndarray:
        return (np.arange(self.resolution) + 0.5) / self.resolution


@dataclass(frozen=True)
class OracleEstimate:
    value: float
    bound: Fraction

    def contains(self, exact: Fraction) -> bool:
        return abs(self.value - float(exact)) <= float(self.bound)


def phi_numeric(cdf_callable: ArrayCDF, config: GridOracleConfig) -> OracleEstimate:
    t = config.midpoints()
    value = 6.0 * float(np.mean(cdf_callable(t, t))) - 2.0
    return OracleEstimate(value, config.phi_bound)


def rho_numeric(cdf_callable: ArrayCDF, config: GridOracleConfig) -> OracleEstimate:
    """2-D midpoint rule, accumulated row block by row block."""
    t = config.midpoints()
    n = config.resolution
    partial_sums = []
    for start in range(0, n, config.row_block):
        rows = t[start:start + config.row_block, None]
        partial_sums.append(float(np.sum(cdf_callable(rows, t[None, :]))))
    value = 12.0 * math.fsum(partial_sums) / (n * n) - 3.0
    return OracleEstimate(value, config.rho_bound)


def m_cdf(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.minimum(u, v)


def pi_cdf(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.asarray(u, dtype=float) * np.asarray(v, dtype=float)


def w_cdf(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.maximum(np.asarray(u, dtype=float) + v - 1.0, 0.0)
