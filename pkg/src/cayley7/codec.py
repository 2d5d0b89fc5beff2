"""Byte-stable JSON forms for multivectors and 8x8 rational matrices.

The document layout is frozen: keys appear in construction order, terms
are sorted by grade then blade mask, and coefficients are always
"numerator/denominator" strings, so serializing the same value twice
yields identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .clifford import CL07, CL80, Multivector, Signature

__all__ = [
    "dumps",
    "from_doc",
    "loads",
    "matrix_from_doc",
    "matrix_to_doc",
    "to_doc",
]

_SIG_NAMES = {(0, 7): "0,7", (8, 0): "8,0"}
_SIG_BY_NAME = {"0,7": CL07, "8,0": CL80}


def _coeff_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _coeff_parse(s: str) -> Fraction:
    if not isinstance(s, str) or "/" not in s:
        raise ValueError(f"coefficient must be a 'num/den' string, got {s!r}")
    num, _, den = s.partition("/")
    try:
        return Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad coefficient {s!r}: {exc}") from None


def _mask_to_indices(mask: int) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def to_doc(a: Multivector) -> dict:
    """Plain-data document for a multivector; term order is canonical."""
    return {
        "sig": _SIG_NAMES[(a.signature.p, a.signature.q)],
        "terms": [
            {"indices": _mask_to_indices(mask), "coeff": _coeff_str(c)}
            for mask, c in a.terms()
        ],
    }


def from_doc(doc: dict) -> Multivector:
    """Rebuild a multivector, rejecting malformed or non-canonical input."""
    if not isinstance(doc, dict):
        raise ValueError("multivector document must be an object")
    try:
        sig = _SIG_BY_NAME[doc["sig"]]
    except KeyError:
        raise ValueError(f"unknown or missing signature {doc.get('sig')!r}") from None
    terms = doc.get("terms")
    if not isinstance(terms, list):
        raise ValueError("multivector document needs a 'terms' list")
    seen: set[int] = set()
    out: dict[int, Fraction] = {}
    for entry in terms:
        if not isinstance(entry, dict) or set(entry) != {"indices", "coeff"}:
            raise ValueError(f"bad term entry {entry!r}")
        indices = entry["indices"]
        if not isinstance(indices, list) or not all(isinstance(i, int) for i in indices):
            raise ValueError(f"indices must be a list of ints, got {indices!r}")
        if any(not 1 <= i <= sig.dimension for i in indices):
            raise ValueError(f"index out of range in {indices!r}")
        if indices != sorted(set(indices)):
            raise ValueError(f"indices must be strictly ascending, got {indices!r}")
        mask = 0
        for i in indices:
            mask |= 1 << (i - 1)
        if mask in seen:
            raise ValueError(f"duplicate blade {indices!r}")
        seen.add(mask)
        c = _coeff_parse(entry["coeff"])
        if c:
            out[mask] = c
    return Multivector(out, sig)


def dumps(a: Multivector) -> str:
    return json.dumps(to_doc(a), separators=(",", ":"))


def loads(s: str) -> Multivector:
    return from_doc(json.loads(s))


def matrix_to_doc(matrix: Sequence[Sequence[Fraction]]) -> list[list[str]]:
    """8 rows of 8 'num/den' strings."""
    if len(matrix) != 8 or any(len(row) != 8 for row in matrix):
        raise ValueError("matrix documents are exactly 8x8")
    return [[_coeff_str(Fraction(v)) for v in row] for row in matrix]


def matrix_from_doc(rows: Sequence[Sequence[str]]) -> tuple[tuple[Fraction, ...], ...]:
    if len(rows) != 8 or any(len(row) != 8 for row in rows):
        raise ValueError("matrix documents are exactly 8x8")
    return tuple(tuple(_coeff_parse(v) for v in row) for row in rows)
