"""Regular simplices from Hadamard matrices.

Exact projector norms over cube vertices, mu-vertex censuses, absorption
indices with verified bounds, ball norms, and maximal-determinant bounds.
Matrices are nested lists of +-1 ints; reports are dicts matching the CLI's
JSON output (exact rationals as "p/q" strings).
"""

from ._core import (
    __version__,
    absorption,
    ball_norm,
    ball_sweep,
    bounds_row,
    is_hadamard,
    maxdet_bruteforce,
    normalize_last_column,
    paley,
    parse_matrix,
    projector_norm,
    serialize_matrix,
    split_point,
    sylvester,
    try_construct,
)

__all__ = [
    "__version__",
    "absorption",
    "ball_norm",
    "ball_sweep",
    "bounds_row",
    "is_hadamard",
    "maxdet_bruteforce",
    "normalize_last_column",
    "paley",
    "parse_matrix",
    "projector_norm",
    "serialize_matrix",
    "split_point",
    "sylvester",
    "try_construct",
]
