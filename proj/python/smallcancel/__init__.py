"""Python access to the smallcancel library.

Complexes are loaded from the text format or generated from a family name;
checks return a Report with a verdict string and a list of witnesses.
"""

from ._smallcancel import (
    Complex,
    NumberingError,
    OutOfPatch,
    ParseError,
    Report,
    ValidationError,
    check_C,
    check_T,
    check_dual,
    check_embedding,
    check_helly,
    check_piece_length_bound,
    check_strong_helly,
    detect_flat,
    dual_distance,
    gallery_distance,
    generate,
    longest_piece,
    nerve,
    numbering,
    quadrization,
    quotient,
    reverify,
    run_cli,
    translate,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
