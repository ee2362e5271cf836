"""Exact a,b-expansions: greedy digits, expansion counting, uniqueness, dimension.

All exact rational values cross the boundary as "p/q" strings; use
``to_fraction`` to lift them into :class:`fractions.Fraction`.
"""

from fractions import Fraction

from ._abexp import *  # noqa: F401,F403
from ._abexp import __version__  # noqa: F401


def to_fraction(value):
    """Parse an exact "p/q" string produced by this package."""
    return Fraction(value)
