"""Equitable colourings of complete multipartite graphs."""

from .core import (
    ClassProfile,
    EquitableColoring,
    EquitableError,
    FeasibilityReport,
    InfeasibleError,
    Instance,
    InvalidInstance,
    InvalidProfile,
    ThresholdResult,
    ceil_div,
    make_instance,
)
from .feasibility import feasible, min_equitable, spectrum
from .threshold import equitable_chromatic_threshold, find_d, p_of_q
from .construction import (
    Case,
    DownshiftTrace,
    NoApplicableCase,
    UnreachableCase,
    canonical_profile,
    coloring_from_profile,
    coloring_problems,
    construct_coloring,
    downshift,
    profile_from_coloring,
    verify_coloring,
)
from .oracle import OracleBudgetExceeded, oracle_feasible, oracle_threshold

__version__ = "0.1.0"
