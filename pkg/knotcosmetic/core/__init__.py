"""
Core invariant engine: polynomials, diagrams, Jones, Alexander, finite-type invariants
"""

from .alexander import AlexanderData, alexander, conway_a2
from .diagram import (
    PlanarDiagram,
    SkeinTriple,
    component_subdiagram,
    components,
    crossing_sign,
    flip_crossing,
    linking_number,
    mirror,
    parse_pd,
    resolve,
    to_pd_text,
    writhe,
)
from .ftinv import (
    KnotInvariants,
    crossing_change_report,
    invariants,
    murakami_link_checks,
    w3_crossing_change_check,
)
from .jones import BracketEvaluator, BracketPoly, jones, jones_derivatives, kauffman_bracket
from .poly import ExactRational, HalfIntLaurent, derivative_at_one, format_rational

__all__ = [
    "AlexanderData",
    "BracketEvaluator",
    "BracketPoly",
    "ExactRational",
    "HalfIntLaurent",
    "KnotInvariants",
    "PlanarDiagram",
    "SkeinTriple",
    "alexander",
    "component_subdiagram",
    "components",
    "conway_a2",
    "crossing_change_report",
    "crossing_sign",
    "derivative_at_one",
    "flip_crossing",
    "format_rational",
    "invariants",
    "jones",
    "jones_derivatives",
    "kauffman_bracket",
    "linking_number",
    "mirror",
    "murakami_link_checks",
    "parse_pd",
    "resolve",
    "to_pd_text",
    "w3_crossing_change_check",
    "writhe",
]
