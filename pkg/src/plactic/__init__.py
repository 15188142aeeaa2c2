"""Plactic monoid centralizers: tableaux, insertion, jeu de taquin,
Knuth equivalence, membership tests, exact counts, and conjecture sweeps.
"""

from ._kernels import BACKEND
from .centralizer import (
    centralizer_words,
    count_centralizer_words,
    default_budget,
    in_centralizer,
    is_yamanouchi,
    test_c1_lwi,
    test_c12,
    test_c212,
    test_power,
    test_single_letter_cols,
    test_single_letter_rows,
    test_staircase,
)
from .enumeration import (
    BinomialPoly,
    DescentPoly,
    Family,
    LabeledPoset,
    count_by_shapes,
    count_centralizer,
    descent_poly,
    expand_binomial,
    f_lambda,
    family_of_word,
    iter_partitions,
    iter_ssyt,
    linear_extensions,
    order_poly_count,
    shape_poset,
    single,
    ssyt_count,
    staircase,
    word12,
)
from .errors import (
    BadShapeError,
    BoundExceededError,
    BudgetExceededError,
    ColumnNotStrictlyIncreasingError,
    MaxEntryExceedsMError,
    NotAnInnerCornerError,
    PlacticError,
    QNotStandardError,
    RowNotWeaklyIncreasingError,
    ShapeMismatchError,
    TableauError,
    UnsupportedFamilyError,
    ValidationFailedError,
)
from .harness import (
    SweepConfig,
    SweepReport,
    check_coefficients,
    check_max_ri,
    check_rc,
    check_rc_sweep,
    check_stability,
)
from .involutions import bender_knuth, evacuation_m, rc_m, split_at, tau_m
from .jdt import (
    inner_corners,
    jdt_slide,
    p_via_jdt,
    rectify,
    rectify_steps,
    southwest_concat,
)
from .knuth import knuth_class, knuth_equivalent, knuth_neighbors
from .rsk import inverse_rsk, lwi, lwi_ending_at, p_tableau, row_insert, rsk_pair
from .tableau import (
    SkewTableau,
    Tableau,
    dominates,
    format_tableau,
    format_word,
    parse_tableau,
    parse_word,
    word,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BadShapeError",
    "BinomialPoly",
    "BoundExceededError",
    "BudgetExceededError",
    "ColumnNotStrictlyIncreasingError",
    "DescentPoly",
    "Family",
    "LabeledPoset",
    "MaxEntryExceedsMError",
    "NotAnInnerCornerError",
    "PlacticError",
    "QNotStandardError",
    "RowNotWeaklyIncreasingError",
    "ShapeMismatchError",
    "SkewTableau",
    "SweepConfig",
    "SweepReport",
    "Tableau",
    "TableauError",
    "UnsupportedFamilyError",
    "ValidationFailedError",
    "bender_knuth",
    "centralizer_words",
    "check_coefficients",
    "check_max_ri",
    "check_rc",
    "check_rc_sweep",
    "check_stability",
    "count_by_shapes",
    "count_centralizer",
    "count_centralizer_words",
    "default_budget",
    "descent_poly",
    "dominates",
    "evacuation_m",
    "expand_binomial",
    "f_lambda",
    "family_of_word",
    "format_tableau",
    "format_word",
    "in_centralizer",
    "inner_corners",
    "inverse_rsk",
    "is_yamanouchi",
    "iter_partitions",
    "iter_ssyt",
    "jdt_slide",
    "knuth_class",
    "knuth_equivalent",
    "knuth_neighbors",
    "linear_extensions",
    "lwi",
    "lwi_ending_at",
    "order_poly_count",
    "p_tableau",
    "p_via_jdt",
    "parse_tableau",
    "parse_word",
    "rc_m",
    "rectify",
    "rectify_steps",
    "row_insert",
    "rsk_pair",
    "shape_poset",
    "single",
    "split_at",
    "ssyt_count",
    "southwest_concat",
    "staircase",
    "tau_m",
    "test_c1_lwi",
    "test_c12",
    "test_c212",
    "test_power",
    "test_single_letter_cols",
    "test_single_letter_rows",
    "test_staircase",
    "word",
    "word12",
]
