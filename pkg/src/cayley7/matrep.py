"""Matrix representation of left folds acting on octonions.

A multivector u acts linearly on octonions by a right fold (u applied
from the left factor by factor), so it has an 8x8 rational matrix in the
basis (1, e1..e7).  For basis blades these are signed permutation
matrices; the bundled fixture file stores an independently transcribed
copy of all 63 matrices of grades one to three, which the verifier diffs
cell by cell against the computed ones.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from .clifford import CL07, Multivector, hodge_dual
from .codec import matrix_from_doc
from .octonion import Octonion
from .products import bullet

__all__ = [
    "blade_mask",
    "blade_names",
    "bundled_fixture_path",
    "factor_matrix_product",
    "fixture_differences",
    "hodge_partner_signs",
    "left_action_matrix",
    "load_fixture_matrices",
    "span_rank",
]

Matrix8 = tuple[tuple[Fraction, ...], ...]


def left_action_matrix(u: Multivector) -> Matrix8:
    """Matrix of A -> u bullet-right A; column j is the fold of unit j."""
    cols = [bullet(u, Octonion.unit(j), "right").coefficients for j in range(8)]
    return tuple(tuple(cols[j][i] for j in range(8)) for i in range(8))


def blade_names() -> list[str]:
    """The 63 grade-1..3 blade names in (grade, mask) order: e1 .. e567."""
    masks = sorted((m for m in range(1, 128) if m.bit_count() <= 3), key=lambda m: (m.bit_count(), m))
    return [_name(m) for m in masks]


def _name(mask: int) -> str:
    return "e" + "".join(str(i + 1) for i in range(7) if mask >> i & 1)


def blade_mask(name: str) -> int:
    """Mask for a canonical blade name like 'e126'; strict about order."""
    if not name.startswith("e") or len(name) < 2:
        raise ValueError(f"bad blade name {name!r}")
    digits = [int(ch) for ch in name[1:]]
    if any(not 1 <= d <= 7 for d in digits) or digits != sorted(set(digits)):
        raise ValueError(f"blade name must list ascending indices 1..7, got {name!r}")
    mask = 0
    for d in digits:
        mask |= 1 << (d - 1)
    return mask


def bundled_fixture_path() -> Path:
    return Path(str(resources.files("cayley7").joinpath("fixtures/left_action_matrices.json")))


def load_fixture_matrices(path: "Optional[str | Path]" = None) -> dict[str, Matrix8]:
    """Read the transcribed matrices; values are kept exactly as printed."""
    p = Path(path) if path is not None else bundled_fixture_path()
    with open(p) as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ValueError("fixture file must map blade names to 8x8 matrices")
    out: dict[str, Matrix8] = {}
    for name, rows in doc.items():
        blade_mask(name)  # validates the key
        out[name] = matrix_from_doc(rows)
    return out


def fixture_differences(
    fixtures: "Optional[dict[str, Matrix8]]" = None,
) -> list[tuple[str, int, int, Fraction, Fraction]]:
    """(name, row, col, stored, computed) for every disagreeing cell."""
    if fixtures is None:
        fixtures = load_fixture_matrices()
    diffs = []
    for name in sorted(fixtures, key=lambda n: (len(n), n)):
        computed = left_action_matrix(Multivector.basis(blade_mask(name), CL07))
        stored = fixtures[name]
        for i in range(8):
            for j in range(8):
                if stored[i][j] != computed[i][j]:
                    diffs.append((name, i, j, stored[i][j], computed[i][j]))
    return diffs


def factor_matrix_product(name: str) -> Matrix8:
    """Product of the generator matrices of the blade's ascending factors."""
    total = None
    for ch in name[1:]:
        m = left_action_matrix(Multivector.basis(1 << (int(ch) - 1), CL07))
        total = m if total is None else _matmul(total, m)
    if total is None:
        raise ValueError("need at least one factor")
    return total


def _matmul(a: Matrix8, b: Matrix8) -> Matrix8:
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(8)), Fraction(0)) for j in range(8))
        for i in range(8)
    )


def span_rank(matrices: "Optional[Sequence[Matrix8]]" = None) -> int:
    """Rank of the flattened span; defaults to all 64 blades of grade 0..3."""
    if matrices is None:
        masks = sorted((m for m in range(128) if m.bit_count() <= 3), key=lambda m: (m.bit_count(), m))
        matrices = [left_action_matrix(Multivector.basis(m, CL07)) for m in masks]
    rows = [[mat[i][j] for i in range(8) for j in range(8)] for mat in matrices]
    rank = 0
    ncols = 64
    pivot_col = 0
    r = 0
    while r < len(rows) and pivot_col < ncols:
        pivot = next((k for k in range(r, len(rows)) if rows[k][pivot_col]), None)
        if pivot is None:
            pivot_col += 1
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][pivot_col]
        for k in range(r + 1, len(rows)):
            if rows[k][pivot_col]:
                f = rows[k][pivot_col] / lead
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        rank += 1
        r += 1
        pivot_col += 1
    return rank


def hodge_partner_signs() -> tuple[dict[int, Optional[int]], list[tuple[str, Optional[int]]]]:
    """Relative sign between M(w) and M(dual of w) for grades 4..7.

    Returns (per-grade sign or None when inconsistent/not proportional,
    per-blade detail).  The matrices of a blade and of its dual can only
    differ by an overall sign; this measures it instead of assuming it.
    """
    per_blade: list[tuple[str, Optional[int]]] = []
    per_grade: dict[int, Optional[int]] = {}
    masks = sorted((m for m in range(128) if m.bit_count() >= 4), key=lambda m: (m.bit_count(), m))
    for mask in masks:
        w = Multivector.basis(mask, CL07)
        mw = left_action_matrix(w)
        md = left_action_matrix(hodge_dual(w))
        sign: Optional[int] = None
        for i in range(8):
            for j in range(8):
                if md[i][j]:
                    ratio = mw[i][j] / md[i][j] if mw[i][j] else None
                    sign = int(ratio) if ratio in (1, -1) else None
                    break
            if sign is not None or any(md[i]):
                break
        if sign is not None:
            ok = all(mw[i][j] == sign * md[i][j] for i in range(8) for j in range(8))
            if not ok:
                sign = None
        per_blade.append((_name(mask), sign))
        g = mask.bit_count()
        if g not in per_grade:
            per_grade[g] = sign
        elif per_grade[g] != sign:
            per_grade[g] = None
    return per_grade, per_blade
