"""Numerical rings and cones of cycles of P(E1) x_C P(E2) over a curve."""

from fractions import Fraction

from ._fibcones import Bundle, FibconesError, HNQuotient, Space, run_cli

__all__ = ["Bundle", "FibconesError", "HNQuotient", "Space", "run_cli", "to_fractions"]


def to_fractions(values):
    """Turn the nested "p/q" strings returned by Space methods into Fractions."""
    if isinstance(values, str):
        return Fraction(values)
    return [to_fractions(v) for v in values]
