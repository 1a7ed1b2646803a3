"""Exact genus-1 quasimap and Gromov-Witten potentials of local Calabi-Yau
complete intersections in projective space.

All rational values cross the boundary as canonical ``p/q`` strings; use
:func:`fractions` to lift a list of them to ``fractions.Fraction``.
"""

from fractions import Fraction

from qgw._core import (
    __version__,
    compute,
    gw_invariants,
    i_function,
    initial_constants,
    mirror_map_series,
    pf_check,
    verify,
)

__all__ = [
    "__version__",
    "compute",
    "fractions",
    "gw_invariants",
    "i_function",
    "initial_constants",
    "mirror_map_series",
    "pf_check",
    "verify",
]


def fractions(strings):
    """Convert a list of canonical rational strings to ``Fraction`` values."""
    return [Fraction(s) for s in strings]
