"""
Shuffles

Permutation-encoded equidistant even shuffles of the minimum copula M:
validation, index classification, closed-form footrule and rho, the
upper-bound equality condition, star shuffles and involution enumeration.
All permutations are 1-indexed.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import (
    NotAnInvolutionError,
    PermutationDefect,
    PermutationError,
    StarShuffleError,
)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., n} stored as its value sequence."""
    n: int
    pi: Tuple[int, ...]

    def __post_init__(self) -> None:
        _check_bijection(self.n, self.pi)
        object.__setattr__(self, "pi", tuple(self.pi))

    def __call__(self, i: int) -> int:
        return self.pi[i - 1]

    def __len__(self) -> int:
        return self.n

    def is_involution(self) -> bool:
        return all(self.pi[value - 1] == index for index, value in enumerate(self.pi, 1))

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.pi) + ")"


@dataclass(frozen=True)
class Involution(Permutation):
    """A self-inverse permutation; its shuffle copula is symmetric."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.is_involution():
            raise NotAnInvolutionError(f"{self} is not self-inverse")

    @property
    def base(self) -> Permutation:
        return Permutation(self.n, self.pi)

    @classmethod
    def from_permutation(cls, permutation: Permutation) -> "Involution":
        return cls(permutation.n, permutation.pi)


@dataclass(frozen=True)
class IndexClasses:
    """Indices moved left, fixed, and moved right by a permutation."""
    i_minus: Tuple[int, ...]
    i_zero: Tuple[int, ...]
    i_plus: Tuple[int, ...]


def _check_bijection(n: int, sequence: Sequence[int]) -> None:
    if len(sequence) != n:
        raise PermutationError(
            PermutationDefect.WRONG_LENGTH, detail=f"expected {n} entries, got {len(sequence)}"
        )
    seen = set()
    for position, value in enumerate(sequence, 1):
        if not isinstance(value, int) or isinstance(value, bool) or not 1 <= value <= n:
            raise PermutationError(
                PermutationDefect.OUT_OF_RANGE, position, f"{value!r} not in 1..{n}"
            )
        if value in seen:
            raise PermutationError(PermutationDefect.DUPLICATE, position, f"{value} repeated")
        seen.add(value)


def validate(n: int, sequence: Iterable[int]) -> Permutation:
    """
    Build a Permutation, rejecting the first violated bijection condition.

    Args:
        n: Size of the ground set
        sequence: Values pi(1), ..., pi(n)

    Returns:
        The validated Permutation (an Involution when it is self-inverse)

    Raises:
        PermutationError: Wrong length, out-of-range or duplicate entry
    """
    if n < 1:
        raise PermutationError(PermutationDefect.WRONG_LENGTH, detail=f"n = {n} is not positive")
    values = tuple(sequence)
    permutation = Permutation(n, values)
    if permutation.is_involution():
        return Involution(n, values)
    return permutation


def identity(n: int) -> Involution:
    return Involution(n, tuple(range(1, n + 1)))


def classify(permutation: Permutation) -> IndexClasses:
    minus: List[int] = []
    zero: List[int] = []
    plus: List[int] = []
    for index, value in enumerate(permutation.pi, 1):
        if value < index:
            minus.append(index)
        elif value == index:
            zero.append(index)
        else:
            plus.append(index)
    return IndexClasses(tuple(minus), tuple(zero), tuple(plus))


def shuffle_phi(permutation: Permutation) -> Fraction:
    """Footrule of the shuffle: 1 - (6/N) * sum over I- of (i - pi(i))/N."""
    n = permutation.n
    displacement = sum(index - value for index, value in enumerate(permutation.pi, 1) if value < index)
    return 1 - Fraction(6 * displacement, n * n)


def shuffle_rho_general(permutation: Permutation) -> Fraction:
    """Spearman's rho for any permutation: 1 - (12/N) * sum i (i - pi(i)) / N^2."""
    n = permutation.n
    moment = sum(index * (index - value) for index, value in enumerate(permutation.pi, 1))
    return 1 - Fraction(12 * moment, n ** 3)


def shuffle_rho_symmetric(involution: Involution) -> Fraction:
    """Spearman's rho for involutions: 1 - (12/N) * sum over I- of ((i - pi(i))/N)^2."""
    n = involution.n
    squares = sum((index - value) ** 2 for index, value in enumerate(involution.pi, 1) if value < index)
    return 1 - Fraction(12 * squares, n ** 3)


def shuffle_rho(permutation: Permutation) -> Fraction:
    if isinstance(permutation, Involution):
        return shuffle_rho_symmetric(permutation)
    return shuffle_rho_general(permutation)


def upper_bound_value(phi: Fraction) -> Fraction:
    return 1 - Fraction(2, 3) * (1 - phi) ** 2


def equality_condition(involution: Involution) -> bool:
    """True iff i - pi(i) is constant on I- and #I- = N/2."""
    displacements = {index - value for index, value in enumerate(involution.pi, 1) if value < index}
    count = sum(1 for index, value in enumerate(involution.pi, 1) if value < index)
    return 2 * count == involution.n and len(displacements) == 1


def star_shuffle(n: int) -> Involution:
    """The involution swapping (2j-1, 2j) for every j."""
    if n < 2 or n % 2:
        raise StarShuffleError(f"Star shuffles need an even n >= 2, got {n}")
    values: List[int] = []
    for j in range(1, n // 2 + 1):
        values.extend((2 * j, 2 * j - 1))
    return Involution(n, tuple(values))


def star_shuffle_stats(n: int) -> Tuple[Fraction, Fraction]:
    """Closed-form (phi, rho) of star_shuffle(n): (1 - 3/n, 1 - 6/n^2)."""
    if n < 2 or n % 2:
        raise StarShuffleError(f"Star shuffles need an even n >= 2, got {n}")
    return 1 - Fraction(3, n), 1 - Fraction(6, n * n)


def involution_count(n: int) -> int:
    """a(n) = a(n-1) + (n-1) a(n-2) with a(0) = a(1) = 1."""
    previous, current = 1, 1
    for size in range(2, n + 1):
        previous, current = current, current + (size - 1) * previous
    return current


def enumerate_involutions(n: int, first_partner: Optional[int] = None) -> Iterator[Involution]:
    """
    Yield every involution of {1, ..., n} once, in lexicographic order.

    The smallest unmatched index is paired with itself or with a larger
    unmatched index, in increasing order of the partner.

    Args:
        n: Size of the ground set
        first_partner: If given, only involutions with pi(1) = first_partner

    Yields:
        Involution instances
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    values = [0] * (n + 1)

    def extend(start: int) -> Iterator[Involution]:
        index = start
        while index <= n and values[index]:
            index += 1
        if index > n:
            yield Involution(n, tuple(values[1:]))
            return
        for partner in range(index, n + 1):
            if values[partner]:
                continue
            if index == 1 and first_partner is not None and partner != first_partner:
                continue
            values[index] = partner
            values[partner] = index
            yield from extend(index + 1)
            values[index] = 0
            values[partner] = 0

    yield from extend(1)


def partition_keys(n: int) -> List[int]:
    """The values of pi(1) that split the involution stream into disjoint parts."""
    return list(range(1, n + 1))
