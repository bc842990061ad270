"""Contiguous pattern avoidance in strict m-ary (mostly ternary) trees."""

from .bijections import (
    ColoredBinaryTree,
    LetterPermutation,
    cut_forward,
    cut_inverse,
    relabel,
    schroder_to_ternary,
    ternary_to_schroder,
)
from .classify import ClassifyOptions, WilfClassReport, avoidance_sequence, classify_patterns, read_report, write_report
from .genfunc import (
    build_system,
    eliminate,
    fit_algebraic_equation,
    fit_minimal_equation,
    intersect,
    reference_sequence,
    series_from_system,
)
from .polys import BivariatePoly, MultiPoly, PowerSeries
from .trees import MAryTree, avoid_count, contains, count_trees, enumerate_trees, reflect
from .words import WordSet, lift_arity, parse_wordset, tree_to_wordset, word_contains, wordset_to_tree

__version__ = "0.1.0"

__all__ = [
    "BivariatePoly", "ClassifyOptions", "ColoredBinaryTree", "LetterPermutation", "MAryTree", "MultiPoly",
    "PowerSeries", "WilfClassReport", "WordSet", "avoid_count", "avoidance_sequence", "build_system",
    "classify_patterns", "contains", "count_trees", "cut_forward", "cut_inverse", "eliminate",
    "enumerate_trees", "fit_algebraic_equation", "fit_minimal_equation", "intersect", "lift_arity",
    "parse_wordset", "read_report", "reference_sequence", "reflect", "relabel", "schroder_to_ternary",
    "series_from_system", "ternary_to_schroder", "tree_to_wordset", "word_contains", "wordset_to_tree",
    "write_report",
]
