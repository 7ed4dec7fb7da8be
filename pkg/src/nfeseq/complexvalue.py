"""Validation for double-precision complex inputs."""

from __future__ import annotations

import cmath

from .errors import ParseError

#: Complex values on the numeric path are plain Python ``complex``.
ComplexValue = complex


def as_complex(value) -> complex:
    """Coerce ``value`` to a finite ``complex``; NaN and infinities are rejected."""
    if isinstance(value, str):
        value = parse_complex(value)
    try:
        z = complex(value)
    except TypeError:
        raise TypeError(f"cannot interpret {value!r} as a complex number") from None
    if not cmath.isfinite(z):
        raise ValueError(f"complex value must be finite, got {z!r}")
    return z


def parse_complex(text: str) -> complex:
    """Parse a literal such as ``"0.5+0.5i"``, ``"-2i"``, ``"3"`` or ``"1-2j"``."""
    s = "".join(text.split())
    if not s or s.count("i") + s.count("j") > 1:
        raise ParseError(f"invalid complex literal {text!r}")
    s = s.replace("i", "j")
    if s.lower() in {"nan", "inf", "infinity"}:
        raise ParseError(f"complex literal must be finite: {text!r}")
    try:
        z = complex(s)
    except ValueError:
        raise ParseError(f"invalid complex literal {text!r}") from None
    if not cmath.isfinite(z):
        raise ParseError(f"complex literal must be finite: {text!r}")
    return z
