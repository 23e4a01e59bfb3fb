"""Lossless JSON encoding of the report types.

Integers beyond the 53-bit float-safe range are emitted as decimal strings;
exact rationals as {"num": "...", "den": "..."} string pairs, so any JSON
consumer can reconstruct the values without precision loss.
"""

import dataclasses
import json
from fractions import Fraction

SAFE_INT = 2**53 - 1


def encode_int(n: int):
    return n if -SAFE_INT <= n <= SAFE_INT else str(n)


def encode_fraction(fr: Fraction):
    return {"num": str(fr.numerator), "den": str(fr.denominator)}


def decode_int(v) -> int:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ValueError(f"not an encoded integer: {v!r}")
    return int(v)


def decode_fraction(v) -> Fraction:
    if isinstance(v, dict) and set(v) == {"num", "den"}:
        return Fraction(int(v["num"]), int(v["den"]))
    raise ValueError(f"not an encoded rational: {v!r}")


def to_jsonable(x):
    """Recursively convert reports, dataclasses, tuples, Fractions, and big
    ints into plain JSON-serializable structures."""
    if isinstance(x, bool) or x is None or isinstance(x, (float, str)):
        return x
    if isinstance(x, int):
        return encode_int(x)
    if isinstance(x, Fraction):
        return encode_fraction(x)
    if dataclasses.is_dataclass(x) and not isinstance(x, type):
        return {f.name: to_jsonable(getattr(x, f.name))
                for f in dataclasses.fields(x)}
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        seq = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [to_jsonable(v) for v in seq]
    raise TypeError(f"cannot encode {type(x).__name__}")


def dumps(x) -> str:
    return json.dumps(to_jsonable(x), sort_keys=True)
