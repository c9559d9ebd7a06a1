"""
knotcosmetic - knot invariants and purely cosmetic surgery obstructions
"""

__version__ = "1.0.0"
__author__ = "knotcosmetic developers"

from .core import (
    HalfIntLaurent,
    KnotInvariants,
    PlanarDiagram,
    alexander,
    invariants,
    jones,
    parse_pd,
    resolve,
)
from .cosmetic import Verdict, VerdictStatus, admissible_slopes, verdict

__all__ = [
    "HalfIntLaurent",
    "KnotInvariants",
    "PlanarDiagram",
    "Verdict",
    "VerdictStatus",
    "admissible_slopes",
    "alexander",
    "invariants",
    "jones",
    "parse_pd",
    "resolve",
    "verdict",
]
