"""
phi-rho region toolkit - Source Package

This package contains the exact-arithmetic core (shuffles, segment measures,
diagonals, rearrangements, bound curves and copula families) and the
command line built on top of it.
"""

__version__ = "1.0.0"
__author__ = "Donekulda"

# Import main classes for easier access
from .boundsregion import Curve, RegionPoint, Verdict, check_lower, check_upper, r_of, region_verdict, s_of
from .config_manager import ConfigManager
from .diagonals import Diagonal, Diagonal02, kernel_support
from .errors import PhiRhoError
from .exactnum import StepFunction, SurdSum, parse_rational, step_rearrange_check
from .families import FamilyMember, OrdinalSumSpec, family_member, o_star, ordinal_stats
from .rearrange import HatClass, rearrange_hat
from .segmeasures import KernelSupport, SegmentMap, phi_exact, rho_exact
from .shuffles import Involution, Permutation, enumerate_involutions, shuffle_phi, shuffle_rho

__all__ = [
    # Main classes
    "ConfigManager",
    "Diagonal",
    "Diagonal02",
    "Involution",
    "KernelSupport",
    "Permutation",
    "SegmentMap",
    "StepFunction",
    "SurdSum",

    # Data classes and types
    "Curve",
    "FamilyMember",
    "HatClass",
    "OrdinalSumSpec",
    "PhiRhoError",
    "RegionPoint",
    "Verdict",

    # Operations
    "check_lower",
    "check_upper",
    "enumerate_involutions",
    "family_member",
    "kernel_support",
    "o_star",
    "ordinal_stats",
    "parse_rational",
    "phi_exact",
    "r_of",
    "rearrange_hat",
    "region_verdict",
    "rho_exact",
    "s_of",
    "shuffle_phi",
    "shuffle_rho",
    "step_rearrange_check",
]
