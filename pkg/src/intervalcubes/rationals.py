"""Exact rational parsing and formatting for interchange documents."""

from __future__ import annotations

from fractions import Fraction


def parse_rational(value) -> Fraction:
    """Parse "p/q", decimal strings like "2.5", or integers, exactly.

    Floats are rejected: callers must hand us a string if the value is not
    integral, so nothing is blurred by binary floating point.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise ValueError(f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Format as "p/q", or plain "p" when integral."""
    return str(value)
