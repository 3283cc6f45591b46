"""Numeric values for distances and derived quantities.

Exact mode keeps everything as ``int``/``fractions.Fraction`` so results are
bit-reproducible; float mode carries plain floats together with an explicit
tolerance used wherever a zero test is needed.  ``math.inf`` serves as the
"no finite ratio exists" sentinel and compares correctly against both kinds.
"""

from __future__ import annotations

import math
from fractions import Fraction

Number = int | Fraction | float

INF = math.inf

EXACT = "exact"
FLOAT = "float"

DEFAULT_TOLERANCE = 1e-9


def parse_value(raw, mode: str = EXACT) -> Number:
    """Turn a JSON scalar (int, float, or "p/q" / decimal string) into a Number.

    In exact mode non-integer inputs become Fractions; a bare JSON float is
    read through its decimal literal (``0.1`` means 1/10, not the nearest
    binary float).  In float mode everything becomes a float.
    """
    if isinstance(raw, bool):
        raise ValueError(f"not a numeric value: {raw!r}")
    if mode == FLOAT:
        if isinstance(raw, str):
            if "/" in raw:
                return float(Fraction(raw))
            return float(raw)
        if isinstance(raw, (int, float)):
            return float(raw)
        raise ValueError(f"not a numeric value: {raw!r}")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, float):
        f = Fraction(str(raw))
        return normalize(f)
    if isinstance(raw, str):
        f = Fraction(raw)
        return normalize(f)
    raise ValueError(f"not a numeric value: {raw!r}")


def normalize(v: Number) -> Number:
    """Collapse integral Fractions back to int; leave everything else alone."""
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


def div(num: Number, den: Number) -> Number:
    """Exact division for exact operands, float division otherwise."""
    if isinstance(num, float) or isinstance(den, float):
        return num / den
    return normalize(Fraction(num) / Fraction(den))


def render(v: Number) -> str:
    """Canonical text form: ints plain, fractions as "p/q", floats via repr."""
    if v == INF:
        return "inf"
    if isinstance(v, Fraction):
        return str(normalize(v))
    if isinstance(v, float):
        return repr(v)
    return str(v)
