"""Occurrences of a word along the lines of a d-dimensional grid.

Counting, explicit grid constructions, upper and lower bounds, and an exact
branch-and-bound solver for the maximum number of lines of an n^d grid that
read a given word forward or backward.
"""

from .bounds import (
    BoundReport,
    F1Result,
    bracket,
    exact_formula,
    exact_formula_d,
    f1_exact,
    f1_subadditivity_check,
    sandwich_2d,
    upper_bound_2d,
    upper_bound_d,
)
from .constructions import (
    ConstructionResult,
    CounterpointParams,
    PointProfile,
    best_construction,
    classify_point,
    counterpoint_grid,
    cross_grid,
    few_letter_word,
    flip_line_points,
    is_counter_point,
    parity_grid,
    product_grid,
    quad_grid,
    rows_grid,
    sample_counter_point,
    sample_odd_flip_set,
    sigma_parity_check,
    stripe_grid,
)
from .core import (
    Alphabet,
    Grid,
    GridFormatError,
    GridSymmetry,
    Point,
    Word,
    WordStats,
    all_points,
    all_symmetries,
    apply_symmetry,
    index_point,
    infer_alphabet,
    parse_grid,
    point_index,
    serialize_grid,
    word_stats,
)
from .lines import (
    CanonicalLine,
    Segment,
    canonicalize,
    count_lines,
    count_segments,
    enumerate_lines,
    enumerate_segments,
    format_line,
    line_points,
    sample_line,
    segment_points,
)
from .occurrence import (
    OccurrenceReport,
    count_segments_word,
    count_word,
    count_word_set,
    estimate_fraction,
    hoeffding_radius,
    is_diagonal_latin,
)
from .solver import (
    SolveConfig,
    SolveResult,
    SolveStats,
    solve,
    solve_oracle,
    solve_set,
)

__all__ = [
    "Alphabet",
    "BoundReport",
    "CanonicalLine",
    "ConstructionResult",
    "CounterpointParams",
    "F1Result",
    "Grid",
    "GridFormatError",
    "GridSymmetry",
    "OccurrenceReport",
    "Point",
    "PointProfile",
    "Segment",
    "SolveConfig",
    "SolveResult",
    "SolveStats",
    "Word",
    "WordStats",
    "all_points",
    "all_symmetries",
    "apply_symmetry",
    "best_construction",
    "bracket",
    "canonicalize",
    "classify_point",
    "count_lines",
    "count_segments",
    "count_segments_word",
    "count_word",
    "count_word_set",
    "counterpoint_grid",
    "cross_grid",
    "enumerate_lines",
    "enumerate_segments",
    "estimate_fraction",
    "exact_formula",
    "exact_formula_d",
    "f1_exact",
    "f1_subadditivity_check",
    "few_letter_word",
    "flip_line_points",
    "format_line",
    "hoeffding_radius",
    "index_point",
    "infer_alphabet",
    "is_counter_point",
    "is_diagonal_latin",
    "line_points",
    "parity_grid",
    "parse_grid",
    "point_index",
    "product_grid",
    "quad_grid",
    "rows_grid",
    "sample_counter_point",
    "sample_line",
    "sample_odd_flip_set",
    "sandwich_2d",
    "segment_points",
    "serialize_grid",
    "sigma_parity_check",
    "solve",
    "solve_oracle",
    "solve_set",
    "stripe_grid",
    "upper_bound_2d",
    "upper_bound_d",
    "word_stats",
]

__version__ = "0.1.0"
