"""Exact minimax/infimax words, simplex itineraries, and regularity evidence.

The heavy lifting happens in the compiled extension; this package re-exports
its operations under friendlier names.
"""

from ._core import (
    CapExceeded,
    InternalError,
    MalformedInput,
    count_chain,
    infimax,
    is_maximal,
    itinerary,
    minimax,
    minimax_length,
    minimax_power_form,
    point_from_itinerary,
    regularity,
    vertices,
)

__all__ = [
    "CapExceeded",
    "InternalError",
    "MalformedInput",
    "count_chain",
    "infimax",
    "is_maximal",
    "itinerary",
    "minimax",
    "minimax_length",
    "minimax_power_form",
    "point_from_itinerary",
    "regularity",
    "vertices",
]
