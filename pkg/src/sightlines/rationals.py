"""Exact rational scalars.

All geometry in this package is exact: coordinates, interval endpoints and
intermediate products are rationals, never floats. gmpy2.mpq is used when
available (it is several times faster than fractions.Fraction on the
predicate-heavy workloads here); the stdlib Fraction is the fallback.

rat() is the single coercion point. It accepts ints, rationals and "p/q"
strings and rejects floats outright, so a NaN or a rounding artifact can
never leak into a scene.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

try:
    from gmpy2 import mpq as Q

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Q = Fraction
    HAVE_GMPY2 = False

Rational = Union[int, Fraction]


def rat(value) -> "Q":
    """Coerce value to an exact rational.

    Accepts int, Fraction, mpq, and strings like "3" or "-7/2".
    Rejects bool, float, and anything else with TypeError.
    """
    if type(value) is bool:
        raise TypeError("bool is not a rational coordinate")
    if isinstance(value, int):
        return Q(value)
    if isinstance(value, (Fraction, type(Q(0)))):
        return Q(value)
    if isinstance(value, str):
        try:
            return Q(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise TypeError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"not a rational: {value!r} (floats are rejected)")


def qstr(value) -> str:
    """Render a rational as a compact JSON-safe string or int.

    Integers come back as ints (JSON numbers); everything else as "p/q".
    """
    f = Fraction(value)
    if f.denominator == 1:
        return int(f.numerator)
    return f"{int(f.numerator)}/{int(f.denominator)}"
