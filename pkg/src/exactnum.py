"""
Exact Numbers

Rational arithmetic helpers, exact comparators for expressions containing
3/2-powers, and the step functions used by the rearrangement inequality.
Rationals are fractions.Fraction throughout; nothing in this module ever
rounds.
"""

import math
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from .errors import (
    CellCountMismatchError,
    MonotonicityError,
    NonZeroIntegralError,
    RationalFormatError,
    StepFunctionError,
)

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")

ZERO = Fraction(0)
ONE = Fraction(1)


class Ordering(Enum):
    """Order of a left-hand side relative to a right-hand side."""
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"

    @classmethod
    def of_sign(cls, sign: int) -> "Ordering":
        if sign < 0:
            return cls.LESS
        if sign > 0:
            return cls.GREATER
        return cls.EQUAL


def sign(value: Fraction) -> int:
    """Return -1, 0 or 1."""
    return (value > 0) - (value < 0)


def parse_rational(text: str) -> Fraction:
    """
    Parse a rational written as "num/den" or as a plain integer.

    Args:
        text: The string to parse

    Returns:
        The canonical Fraction

    Raises:
        RationalFormatError: If the text is not a rational literal
    """
    match = _RATIONAL_PATTERN.match(text)
    if match is None:
        raise RationalFormatError(f"Not a rational literal: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise RationalFormatError(f"Zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and rational strings; floats are refused."""
    if isinstance(value, bool):
        raise RationalFormatError(f"Booleans are not rationals: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise RationalFormatError(
        f"Expected an int, Fraction or 'num/den' string, got {type(value).__name__}"
    )


def format_rational(value: Fraction) -> str:
    """Serialize as "num/den" (the denominator is always written)."""
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Union[Fraction, float], digits: int = 17) -> str:
    """Decimal rendering with the given number of significant digits."""
    return f"{float(value):.{digits}g}"


def compare(lhs: Fraction, rhs: Fraction) -> Ordering:
    return Ordering.of_sign(sign(lhs - rhs))


def rational_sqrt(value: Fraction) -> Union[Fraction, None]:
    """Exact square root if value is the square of a rational, else None."""
    if value < 0:
        return None
    num_root = math.isqrt(value.numerator)
    den_root = math.isqrt(value.denominator)
    if num_root * num_root == value.numerator and den_root * den_root == value.denominator:
        return Fraction(num_root, den_root)
    return None


def cmp_pow32(c_squared: Fraction, x: Fraction, y: Fraction) -> Ordering:
    """
    Order of c * x**(3/2) relative to y, decided exactly.

    c is passed through its square so that irrational constants such as
    sqrt(3)/9 never materialize.

    Args:
        c_squared: The square of the non-negative coefficient c
        x: Non-negative base
        y: Right-hand side

    Returns:
        Ordering of the left-hand side against y
    """
    if c_squared < 0 or x < 0:
        raise ValueError("cmp_pow32 needs c >= 0 and x >= 0")
    if y < 0:
        return Ordering.GREATER
    return compare(c_squared * x ** 3, y * y)


def _sign_single_surd(rational: Fraction, coefficient: Fraction, radicand: Fraction) -> int:
    # sign of rational + coefficient * sqrt(radicand), radicand >= 0
    if coefficient == 0 or radicand == 0:
        return sign(rational)
    coefficient_sign = sign(coefficient)
    rational_sign = sign(rational)
    if rational_sign == 0 or rational_sign == coefficient_sign:
        return coefficient_sign
    squared_gap = rational * rational - coefficient * coefficient * radicand
    if squared_gap > 0:
        return rational_sign
    if squared_gap == 0:
        return 0
    return coefficient_sign


SurdTerm = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class SurdSum:
    """
    An exact real number rational + sum(coefficient * sqrt(radicand)).

    Terms whose radicands differ by a rational square factor are merged on
    construction, and square radicands are folded into the rational part,
    so two values built from the same bases compare exactly. Signs are
    decidable for up to two independent surds, which covers every bound
    curve of the region.
    """
    rational: Fraction = ZERO
    terms: Tuple[SurdTerm, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        rational = to_rational(self.rational)
        merged: List[List[Fraction]] = []
        for coefficient, radicand in self.terms:
            coefficient = to_rational(coefficient)
            radicand = to_rational(radicand)
            if radicand < 0:
                raise ValueError(f"Negative radicand {radicand}")
            if coefficient == 0 or radicand == 0:
                continue
            root = rational_sqrt(radicand)
            if root is not None:
                rational += coefficient * root
                continue
            for slot in merged:
                ratio = rational_sqrt(radicand / slot[1])
                if ratio is not None:
                    slot[0] += coefficient * ratio
                    break
            else:
                merged.append([coefficient, radicand])
        object.__setattr__(self, "rational", rational)
        object.__setattr__(
            self, "terms", tuple((c, r) for c, r in merged if c != 0)
        )

    @classmethod
    def of(cls, value: Union["SurdSum", RationalLike]) -> "SurdSum":
        if isinstance(value, SurdSum):
            return value
        return cls(to_rational(value))

    @classmethod
    def power_term(cls, coefficient_squared: Fraction, base: Fraction,
                   negative: bool = False) -> "SurdSum":
        """The value +-sqrt(coefficient_squared) * base**(3/2)."""
        if base < 0:
            raise ValueError(f"3/2-power of a negative base {base}")
        coefficient = Fraction(-1) if negative else ONE
        return cls(ZERO, ((coefficient, coefficient_squared * base ** 3),))

    @property
    def is_rational(self) -> bool:
        return not self.terms

    def exact(self) -> Fraction:
        """The value as a Fraction; only valid when is_rational."""
        if self.terms:
            raise ValueError(f"{self} is irrational")
        return self.rational

    def __add__(self, other: Union["SurdSum", RationalLike]) -> "SurdSum":
        other = SurdSum.of(other)
        return SurdSum(self.rational + other.rational, self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> "SurdSum":
        return SurdSum(-self.rational, tuple((-c, r) for c, r in self.terms))

    def __sub__(self, other: Union["SurdSum", RationalLike]) -> "SurdSum":
        return self + (-SurdSum.of(other))

    def __rsub__(self, other: RationalLike) -> "SurdSum":
        return SurdSum.of(other) - self

    def scaled(self, factor: RationalLike) -> "SurdSum":
        factor = to_rational(factor)
        return SurdSum(self.rational * factor, tuple((c * factor, r) for c, r in self.terms))

    def sign(self) -> int:
        """Exact sign of the value."""
        if not self.terms:
            return sign(self.rational)
        if len(self.terms) == 1:
            coefficient, radicand = self.terms[0]
            return _sign_single_surd(self.rational, coefficient, radicand)
        if len(self.terms) == 2:
            (c1, r1), (c2, r2) = self.terms
            head = _sign_single_surd(self.rational, c1, r1)
            tail = sign(c2)
            if head == 0 or head == tail:
                return tail if head == 0 else head
            # |rational + c1 sqrt(r1)|^2 - c2^2 r2 decides which side dominates
            gap = _sign_single_surd(
                self.rational * self.rational + c1 * c1 * r1 - c2 * c2 * r2,
                2 * self.rational * c1,
                r1,
            )
            if gap > 0:
                return head
            if gap == 0:
                return 0
            return tail
        raise NotImplementedError(
            f"Sign decision supports at most two independent surds, got {len(self.terms)}"
        )

    def compare(self, other: Union["SurdSum", RationalLike]) -> Ordering:
        return Ordering.of_sign((self - other).sign())

    def __float__(self) -> float:
        total = float(self.rational)
        for coefficient, radicand in self.terms:
            total += float(coefficient) * math.sqrt(float(radicand))
        return total

    def __str__(self) -> str:
        parts = [format_rational(self.rational)]
        for coefficient, radicand in self.terms:
            parts.append(f"{format_rational(coefficient)}*sqrt({format_rational(radicand)})")
        return " + ".join(parts)


@dataclass(frozen=True)
class StepFunction:
    """A step function on the uniform partition of [0, 1] into len(values) cells."""
    values: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        values = tuple(to_rational(v) for v in self.values)
        if not values:
            raise StepFunctionError("A step function needs at least one cell")
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, values: Iterable[RationalLike], scale: RationalLike = 1) -> "StepFunction":
        factor = to_rational(scale)
        return cls(tuple(to_rational(v) * factor for v in values))

    @classmethod
    def zeros(cls, cells: int) -> "StepFunction":
        return cls(tuple(ZERO for _ in range(cells)))

    @property
    def cells(self) -> int:
        return len(self.values)

    def integral(self) -> Fraction:
        return sum(self.values, ZERO) / self.cells

    def norm_squared(self) -> Fraction:
        return sum((v * v for v in self.values), ZERO) / self.cells

    def inner(self, other: "StepFunction") -> Fraction:
        self._require_same_cells(other)
        return sum((a * b for a, b in zip(self.values, other.values)), ZERO) / self.cells

    def __add__(self, other: "StepFunction") -> "StepFunction":
        self._require_same_cells(other)
        return StepFunction(tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "StepFunction") -> "StepFunction":
        self._require_same_cells(other)
        return StepFunction(tuple(a - b for a, b in zip(self.values, other.values)))

    def scaled(self, factor: RationalLike) -> "StepFunction":
        return StepFunction.of(self.values, factor)

    def is_non_negative(self) -> bool:
        return all(v >= 0 for v in self.values)

    def is_non_decreasing(self) -> bool:
        return all(a <= b for a, b in zip(self.values, self.values[1:]))

    def has_decreasing_block_structure(self) -> bool:
        """Non-negative up to some cell and non-positive after it."""
        seen_negative = False
        for value in self.values:
            if value < 0:
                seen_negative = True
            elif value > 0 and seen_negative:
                return False
        return True

    def prefix_sums(self) -> Tuple[Fraction, ...]:
        running = ZERO
        sums = []
        for value in self.values:
            running += value
            sums.append(running)
        return tuple(sums)

    def restricted(self, start: int, stop: int) -> "StepFunction":
        """Copy that keeps cells [start, stop) and is zero elsewhere."""
        return StepFunction(tuple(
            v if start <= i < stop else ZERO for i, v in enumerate(self.values)
        ))

    def _require_same_cells(self, other: "StepFunction") -> None:
        if self.cells != other.cells:
            raise CellCountMismatchError(
                f"Cell counts differ: {self.cells} vs {other.cells}"
            )


def greedy_blocks(values: Sequence[Fraction]) -> List[Tuple[int, int]]:
    """
    Split a sequence into consecutive (non-negative run, non-positive run) blocks.

    A block ends at the last cell of a non-positive run before the sign
    returns to strictly positive. Zeros are absorbed by the run in progress.

    Returns:
        Half-open index ranges [start, stop)
    """
    blocks = []
    start = 0
    count = len(values)
    while start < count:
        stop = start
        while stop < count and values[stop] >= 0:
            stop += 1
        while stop < count and values[stop] <= 0:
            stop += 1
        blocks.append((start, stop))
        start = stop
    return blocks


@dataclass(frozen=True)
class RearrangementReport:
    """Exact outcome of a step-function rearrangement check."""
    norm_difference_squared: Fraction
    norm_f_squared: Fraction
    norm_g_squared: Fraction
    inner_product: Fraction
    blocks: Tuple[StepFunction, ...]
    block_inner_products: Tuple[Fraction, ...]
    block_decomposable: bool
    prefix_sums_non_negative: bool
    inequality_holds: bool

    @property
    def polarization_gap(self) -> Fraction:
        """||f-g||^2 - ||f||^2 - ||g||^2, which equals -2<f,g>."""
        return self.norm_difference_squared - self.norm_f_squared - self.norm_g_squared


def step_rearrange_check(f: StepFunction, g: StepFunction) -> RearrangementReport:
    """
    Check ||f - g||^2 >= ||f||^2 + ||g||^2 for a monotone f and a zero-mean g.

    g is decomposed greedily into blocks with decreasing block structure;
    when some block does not integrate to zero the report says so and keeps
    the norms.

    Args:
        f: Non-negative, non-decreasing step function
        g: Step function with zero integral on the same partition

    Returns:
        RearrangementReport with exact norms and the block decomposition

    Raises:
        CellCountMismatchError: If f and g use different partitions
        MonotonicityError: If f is negative somewhere or decreases
        NonZeroIntegralError: If g does not integrate to zero
    """
    if f.cells != g.cells:
        raise CellCountMismatchError(f"Cell counts differ: {f.cells} vs {g.cells}")
    if not f.is_non_negative() or not f.is_non_decreasing():
        raise MonotonicityError(f"f must be non-negative and non-decreasing: {f.values}")
    if g.integral() != 0:
        raise NonZeroIntegralError(f"g integrates to {format_rational(g.integral())}")

    ranges = greedy_blocks(g.values)
    pieces = tuple(g.restricted(start, stop) for start, stop in ranges)
    decomposable = all(
        piece.integral() == 0 and piece.has_decreasing_block_structure()
        for piece in pieces
    )

    norm_difference = (f - g).norm_squared()
    norm_f = f.norm_squared()
    norm_g = g.norm_squared()
    inner = f.inner(g)
    return RearrangementReport(
        norm_difference_squared=norm_difference,
        norm_f_squared=norm_f,
        norm_g_squared=norm_g,
        inner_product=inner,
        blocks=pieces if decomposable else (),
        block_inner_products=tuple(f.inner(piece) for piece in pieces) if decomposable else (),
        block_decomposable=decomposable,
        prefix_sums_non_negative=all(s >= 0 for s in g.prefix_sums()),
        inequality_holds=norm_difference >= norm_f + norm_g and inner <= 0,
    )
