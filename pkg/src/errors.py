"""
Error types for the phi-rho region toolkit

Every rejection raised by the toolkit derives from PhiRhoError so that the
command line front door can report it in one place. Rejections that name a
specific violated condition carry it as an Enum member.
"""

from enum import Enum
from typing import Optional


class PhiRhoError(ValueError):
    """Base class for all input rejections."""


class RationalFormatError(PhiRhoError):
    """A rational string or value could not be parsed."""


class DomainError(PhiRhoError):
    """An argument lies outside the domain of the operation."""


# Permutations and shuffles

class PermutationDefect(Enum):
    """First violated bijection condition."""
    WRONG_LENGTH = "wrong length"
    OUT_OF_RANGE = "out-of-range entry"
    DUPLICATE = "duplicate entry"


class PermutationError(PhiRhoError):
    """A sequence is not a permutation of {1, ..., n}."""

    def __init__(self, reason: PermutationDefect, index: Optional[int] = None,
                 detail: str = ""):
        self.reason = reason
        self.index = index
        where = f" at position {index}" if index is not None else ""
        message = f"{reason.value}{where}"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class NotAnInvolutionError(PhiRhoError):
    """A permutation is not self-inverse."""


class StarShuffleError(PhiRhoError):
    """Star shuffles need an even positive size."""


# Supports and measures

class SegmentMapError(PhiRhoError):
    """A piece list does not describe a measure-preserving map."""


class KernelSupportError(PhiRhoError):
    """A weighted branch family does not carry unit mass everywhere."""


# Diagonals

class DiagonalAxiom(Enum):
    """Diagonal axioms in the order they are checked."""
    BREAKPOINTS = "breakpoints"
    ENDPOINT = "endpoint"
    MONOTONICITY = "monotonicity"
    LIPSCHITZ = "Lipschitz"
    BELOW_IDENTITY = "delta <= id"


class DiagonalError(PhiRhoError):
    """A breakpoint/value table violates a diagonal axiom."""

    def __init__(self, axiom: DiagonalAxiom, detail: str = ""):
        self.axiom = axiom
        message = f"{axiom.value} violation"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class Diagonal02Error(PhiRhoError):
    """A slope pattern is not in the 0/2 class."""


class KernelBreakpointError(PhiRhoError):
    """The kernel is requested at a breakpoint where the slope is undefined."""


class ShuffleDefect(Enum):
    FIXED_POINTS = "fixed points present"
    NOT_BIMONOTONE = "bi-monotonicity violated"


class ShuffleDiagonalError(PhiRhoError):
    """An involution has no 0/2 diagonal counterpart."""

    def __init__(self, reason: ShuffleDefect, detail: str = ""):
        self.reason = reason
        message = reason.value
        if detail:
            message += f": {detail}"
        super().__init__(message)


# Step functions and rearrangements

class StepFunctionError(PhiRhoError):
    """Base class for step function rejections."""


class CellCountMismatchError(StepFunctionError):
    """Step functions live on different partitions."""


class MonotonicityError(StepFunctionError):
    """f must be non-negative and non-decreasing."""


class NonZeroIntegralError(StepFunctionError):
    """g must integrate to zero."""


class MPreconditionError(PhiRhoError):
    """(4/N) * sum(p) exceeds one."""


class RearrangementInvariantError(RuntimeError):
    """The mass rearrangement produced an index outside its admissible range.

    Raised for defects of the construction itself, never for user input.
    """


# Families

class FamilyParameterError(PhiRhoError):
    """A family parameter lies outside its admissible range."""


class OrdinalSpecError(PhiRhoError):
    """Ordinal sum blocks overlap, are degenerate or leave [0, 1]."""


# Files and command line

class FormatError(PhiRhoError):
    """A data file could not be parsed."""

    def __init__(self, source: str, message: str, line: Optional[int] = None,
                 field: Optional[str] = None):
        self.source = source
        self.line = line
        self.field = field
        location = source
        if line is not None:
            location += f":{line}"
        if field is not None:
            location += f" [{field}]"
        super().__init__(f"{location}: {message}")


class RunConfigError(PhiRhoError):
    """Command line settings violate the configured limits."""


class UnknownSuiteError(PhiRhoError):
    """The requested verification suite does not exist."""
