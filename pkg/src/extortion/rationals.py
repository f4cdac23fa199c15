"""Exact rational values: parsing, validation and canonical formatting.

Every payoff, fee and payment in this package is a ``fractions.Fraction``.
Floating-point values are rejected at every boundary because the whole
analysis rests on strict inequalities between exact quantities.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import FileFormatError

__all__ = ["as_rational", "format_rational"]

# integer or p/q with a positive denominator; no decimals, no exponents
_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")


def as_rational(value: int | str | Fraction) -> Fraction:
    """Convert an exact numeric input to a ``Fraction``.

    Accepts integers, ``Fraction`` instances and strings of the form
    ``"n"`` or ``"p/q"``.  Floats and float-like strings (``"0.5"``,
    ``"1e3"``) are rejected so no rounding can sneak in.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise FileFormatError(f"boolean is not a rational value: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise FileFormatError(f"floating-point literal {value!r}; use p/q")
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_RE.match(text):
            raise FileFormatError(f"floating-point or malformed literal {value!r}; use p/q")
        return Fraction(text)
    raise FileFormatError(f"cannot interpret {value!r} as a rational value")


def format_rational(value: Fraction) -> str:
    """Canonical string form: ``"n"`` for integers, ``"p/q"`` otherwise."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
