"""Lossless integer encoding for JSON documents: numbers below 2**53, decimal strings above."""

import re

SAFE_LIMIT = 2**53
_DECIMAL = re.compile(r"^[+-]?\d+$")


def encode_int(value: int):
    return value if abs(value) < SAFE_LIMIT else str(value)


def decode_int(value) -> int:
    """Return the integer held by ``value`` or raise ``ValueError``.

    Accepts Python ints (not bools) and decimal strings. Floats are refused
    even when integral, since a float in an exact field means precision may
    already have been lost upstream.
    """
    if isinstance(value, bool):
        raise ValueError("boolean is not an integer")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and _DECIMAL.match(value.strip()):
        return int(value.strip())
    raise ValueError(f"not an integer: {value!r}")
