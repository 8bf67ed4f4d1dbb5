"""Exact calculator for strongly positive representation data.

The package validates classification tuples, expands Jacquet modules,
and computes Aubert duals by two independent algorithms that are
cross-checked by a built-in verification suite.  All exponent
arithmetic is exact rational; floats never appear.
"""

from __future__ import annotations

from .classify import (
    ValidationError,
    ValidationReport,
    Violation,
    cuspidal_support,
    enumerate_sp,
    validate_sp,
    validate_tuple,
)
from .core import (
    EMPTY,
    CuspidalLine,
    GroupFamily,
    LanglandsData,
    Rational,
    Segment,
    SPRep,
    SPTuple,
    all_empty_tuple,
    cuspidal_rep,
    rational_parse,
    rational_str,
    segment,
    segment_e,
)
from .documents import DocumentError, document_to_rep, rep_to_document
from .dual import DualTrace, check_trace, dual, dual_closed_line, dual_iterative_line
from .jacquet import MuStarTerm, mu_star, mu_star_line
from .verify import SuiteConfig, SuiteReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "CuspidalLine",
    "DocumentError",
    "DualTrace",
    "GroupFamily",
    "LanglandsData",
    "MuStarTerm",
    "Rational",
    "SPRep",
    "SPTuple",
    "Segment",
    "SuiteConfig",
    "SuiteReport",
    "ValidationError",
    "ValidationReport",
    "Violation",
    "__version__",
    "all_empty_tuple",
    "check_trace",
    "cuspidal_rep",
    "cuspidal_support",
    "document_to_rep",
    "dual",
    "dual_closed_line",
    "dual_iterative_line",
    "enumerate_sp",
    "mu_star",
    "mu_star_line",
    "rational_parse",
    "rational_str",
    "rep_to_document",
    "run_suite",
    "segment",
    "segment_e",
    "validate_sp",
    "validate_tuple",
]
