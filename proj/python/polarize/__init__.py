"""Bezier control points and control nets from monomial-form polynomial
and rational maps, computed in exact rational arithmetic.

Everything is re-exported from the compiled extension; `to_fraction`
bridges Ratio values into the standard library."""

from fractions import Fraction

from ._polarize import *  # noqa: F401,F403
from ._polarize import Ratio

__version__ = "0.1.0"


def to_fraction(r: Ratio) -> Fraction:
    """Exact conversion of a Ratio to fractions.Fraction."""
    return Fraction(r.numerator, r.denominator)


def from_fraction(f: Fraction) -> Ratio:
    """Exact conversion of a fractions.Fraction to a Ratio."""
    return Ratio(f.numerator, f.denominator)
