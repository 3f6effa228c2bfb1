"""tanglekit: exact calculus for rational tangles.

Parse tangle expressions, compute their fractions exactly, reduce to the
unique canonical form, decide isotopy, verify the continued-fraction value
independently through integral colorings, and solve or play the
two-generator turn/add generation game — through a library API, a CLI,
and an HTTP service.
"""

from .cf import (
    Mat2,
    canonicalize_by_rewrite,
    collapse_zeros,
    eval_cf,
    expand_fraction,
    is_canonical,
    make_odd,
    matrix_form,
    subtractive_expand,
    transfer_step,
)
from .coloring import (
    ColorMatrix,
    ColoredTangle,
    affine_recolor,
    closure_coloring_mod,
    closure_determinant,
    color_tangle,
    f_of_matrix,
    harary_check,
    j_map,
    rotate_matrix,
    vertical_reflect_matrix,
)
from .dance import (
    ADD,
    TURN,
    DanceState,
    Move,
    apply_move,
    hint,
    replay,
    solve_target,
    subtract_macro,
    word_to_matrix,
)
from .errors import TangleError
from .fraction import INF, ONE, ZERO, Fraction, star
from .tangle import (
    INFINITY_TANGLE,
    Infinity,
    IntTangle,
    Invert,
    Mirror,
    Prod,
    Rotate,
    StandardFormTangle,
    Sum,
    TangleExpr,
    Zero,
    canonical_form,
    crossing_count,
    equivalent,
    flype_step,
    fraction_of,
    is_rational,
    standard_form_vector,
    standard_to_cf,
    to_standard_form,
    truncations,
    twist_absorb,
    vector_add_right,
    vector_invert,
    vector_mirror,
)
from .textio import format_cf_tangle, parse_fraction, parse_tangle, print_tangle

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
