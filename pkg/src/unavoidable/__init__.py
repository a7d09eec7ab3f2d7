"""Unavoidable substructures of large strong digraphs, with checkable certificates."""

from .certificates import (
    BelowThreshold,
    LongDicycle,
    NarrowSemiChain,
    PathSystem,
    SemiChain,
    ShortSystem,
    verify_certificate,
)
from .digraph import Digraph, DigraphError, is_strong
from .extract import (
    Fan,
    LongDipath,
    NotStrongError,
    OutStar,
    ProofInvariantViolation,
    dipath_or_fan,
    long_dipath_or_out_star,
    semi_chain_along,
    system_from_fan,
    unavoidable,
    unavoidable_threshold,
)

__all__ = [
    "BelowThreshold",
    "Digraph",
    "DigraphError",
    "Fan",
    "LongDicycle",
    "LongDipath",
    "NarrowSemiChain",
    "NotStrongError",
    "OutStar",
    "PathSystem",
    "ProofInvariantViolation",
    "SemiChain",
    "ShortSystem",
    "dipath_or_fan",
    "is_strong",
    "long_dipath_or_out_star",
    "semi_chain_along",
    "system_from_fan",
    "unavoidable",
    "unavoidable_threshold",
    "verify_certificate",
]
