"""Affine tangles, annular crossingless matchings and the annular arc algebra."""

from .errors import (
    ArityMismatch,
    BoundaryMismatch,
    ConjectureViolation,
    GeometryDegenerate,
    InternalInvariant,
    InvalidGenerator,
    MixedContext,
    NoMatch,
    NoSupport,
    ParseError,
    RuleGap,
    TangleError,
)
from .matchings import Matching, SignSequence, cup_decomposition, enumerate_matchings, from_signs, to_signs
from .tangles import GenSym, Kind, TangleWord, compose, format_word, parse_word

__all__ = [
    "ArityMismatch",
    "BoundaryMismatch",
    "ConjectureViolation",
    "GenSym",
    "GeometryDegenerate",
    "InternalInvariant",
    "InvalidGenerator",
    "Kind",
    "Matching",
    "MixedContext",
    "NoMatch",
    "NoSupport",
    "ParseError",
    "RuleGap",
    "SignSequence",
    "TangleError",
    "TangleWord",
    "compose",
    "cup_decomposition",
    "enumerate_matchings",
    "format_word",
    "from_signs",
    "parse_word",
    "to_signs",
]
