"""Exact 4-dimensional dissection certificates for Heron's formula.

Every function returns the same report document the command line tool
emits as JSON: a dict with "schema", "verdict", "results" and
"certificates" keys.  Exact values are strings ("num/den" rationals or
sums of sqrt terms); decimal fields are 12-digit advisory renderings.
"""

from ._core import (
    cube,
    heron,
    heron_expand,
    multinomial,
    nicomachus,
    pyramids,
    pythag,
    quarter,
)

__all__ = [
    "cube",
    "heron",
    "heron_expand",
    "multinomial",
    "nicomachus",
    "pyramids",
    "pythag",
    "quarter",
]
