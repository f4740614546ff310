"""Seifert circuit analysis and flattening of knot diagrams.

The core is functional: parse a diagram, :func:`analyze` its Seifert circuits,
:func:`flatten` it until the Seifert disks are pairwise disjoint, and check the
result with the invariant oracles.  :mod:`.estimators` wraps the same calls in
scikit-learn style transformers.
"""

from .braids import BraidWord, closure, random_braid_diagram, random_braid_word
from .diagram import (
    Diagram,
    Face,
    flip_crossings,
    from_json,
    load_diagram,
    parse_pd,
    reflect,
    serialize,
    shift_labels,
    to_json,
)
from .errors import (
    AlreadyFlatError,
    CrossingLimitError,
    DiagramError,
    GeneratorBudgetError,
    InternalIdentityError,
    NotRealizableError,
    ParseError,
    RenderError,
    ValidationError,
)
from .estimators import SeifertAnalyzer, SeifertFlattener, check_diagrams
from .flatten import FlattenReport, TransformStep, flatten, plan_removal, remove_nested_circuit
from .gauss import format_gauss, gauss_of, parse_gauss
from .invariants import compare_diagrams, jones_polynomial, kauffman_bracket, writhe
from .laurent import LaurentPolynomial
from .seifert import analyze, band_surface, disks_pairwise_disjoint, seifert_circuits
from .table import TABLE, bundled

__version__ = "0.1.0"

__all__ = [
    "AlreadyFlatError", "BraidWord", "CrossingLimitError", "Diagram", "DiagramError", "Face",
    "FlattenReport", "GeneratorBudgetError", "InternalIdentityError", "LaurentPolynomial",
    "NotRealizableError", "ParseError", "RenderError", "SeifertAnalyzer", "SeifertFlattener",
    "TABLE", "TransformStep", "ValidationError", "analyze", "band_surface", "bundled",
    "check_diagrams", "closure", "compare_diagrams", "disks_pairwise_disjoint", "flatten",
    "flip_crossings", "format_gauss", "from_json", "gauss_of", "jones_polynomial",
    "kauffman_bracket", "load_diagram", "parse_gauss", "parse_pd", "plan_removal",
    "random_braid_diagram", "random_braid_word", "reflect", "remove_nested_circuit",
    "seifert_circuits", "serialize", "shift_labels", "to_json", "writhe",
]
