"""Exact Clifford-algebra kernel over the rationals.

Basis blades are encoded as bitmasks (bit ``i`` set means the generator
``e_{i+1}`` is a factor of the blade) and coefficients are
:class:`fractions.Fraction`, so every product, contraction, and duality
below is exact.  Only the two signatures the octonion construction needs,
(0,7) and (8,0), can be instantiated; that keeps the sign bookkeeping
small enough to audit by hand.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "CL07",
    "CL80",
    "Multivector",
    "Signature",
    "blade_from_indices",
    "hodge_dual",
    "involution",
    "left_contraction",
    "metric_pairing",
    "right_contraction",
    "wedge",
]

Scalar = Union[int, Fraction]


class Signature:
    """Metric signature of the algebra, restricted to (0,7) and (8,0)."""

    __slots__ = ("p", "q", "neg_mask")

    _ALLOWED = {(0, 7), (8, 0)}

    def __init__(self, p: int, q: int) -> None:
        if (p, q) not in self._ALLOWED:
            raise ValueError(f"unsupported signature ({p},{q}); only (0,7) and (8,0) are available")
        self.p = p
        self.q = q
        # Bit i is set when generator e_{i+1} squares to -1.
        self.neg_mask = (1 << q) - 1 if q else 0

    @property
    def dimension(self) -> int:
        return self.p + self.q

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Signature) and (self.p, self.q) == (other.p, other.q)

    def __hash__(self) -> int:
        return hash((self.p, self.q))

    def __repr__(self) -> str:
        return f"Signature({self.p},{self.q})"


CL07 = Signature(0, 7)
CL80 = Signature(8, 0)


def _reorder_swaps(m1: int, m2: int) -> int:
    """Count the generator transpositions needed to merge two blade masks."""
    swaps = 0
    a = m1 >> 1
    while a:
        swaps += (a & m2).bit_count()
        a >>= 1
    return swaps


def _blade_mul(m1: int, m2: int, neg_mask: int) -> tuple[int, int]:
    """Multiply basis blades given as masks; return (result mask, sign)."""
    sign = -1 if _reorder_swaps(m1, m2) & 1 else 1
    if (m1 & m2 & neg_mask).bit_count() & 1:
        sign = -sign
    return m1 ^ m2, sign


def _indices_of(mask: int) -> Iterator[int]:
    i = 1
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _blade_name(mask: int) -> str:
    return "e" + "".join(str(i) for i in _indices_of(mask))


# Per-grade signs of the three canonical involutions.
def _reversion_sign(k: int) -> int:
    return -1 if (k * (k - 1) // 2) & 1 else 1


def _grade_sign(k: int) -> int:
    return -1 if k & 1 else 1


def _conjugation_sign(k: int) -> int:
    return -1 if (k * (k + 1) // 2) & 1 else 1


class Multivector:
    """An exact multivector: a finite Fraction-weighted sum of basis blades."""

    __slots__ = ("signature", "_terms")

    def __init__(self, terms: Mapping[int, Scalar] | None = None, signature: Signature = CL07) -> None:
        self.signature = signature
        cleaned: dict[int, Fraction] = {}
        if terms:
            limit = 1 << signature.dimension
            for mask, coeff in terms.items():
                if not 0 <= mask < limit:
                    raise ValueError(f"blade mask {mask} out of range for {signature!r}")
                c = Fraction(coeff)
                if c:
                    cleaned[mask] = cleaned.get(mask, Fraction(0)) + c
                    if not cleaned[mask]:
                        del cleaned[mask]
        self._terms = cleaned

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, signature: Signature = CL07) -> "Multivector":
        return cls({}, signature)

    @classmethod
    def scalar(cls, value: Scalar, signature: Signature = CL07) -> "Multivector":
        return cls({0: Fraction(value)}, signature)

    @classmethod
    def basis(cls, mask: int, signature: Signature = CL07) -> "Multivector":
        return cls({mask: Fraction(1)}, signature)

    # -- inspection ---------------------------------------------------

    def terms(self) -> list[tuple[int, Fraction]]:
        """Terms as (mask, coefficient), sorted by grade then mask."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0].bit_count(), kv[0]))

    def coefficient(self, mask: int) -> Fraction:
        return self._terms.get(mask, Fraction(0))

    def scalar_part(self) -> Fraction:
        return self._terms.get(0, Fraction(0))

    def grades(self) -> set[int]:
        return {mask.bit_count() for mask in self._terms}

    def is_zero(self) -> bool:
        return not self._terms

    def project(self, *grades: int) -> "Multivector":
        """Keep only the terms whose grade is listed."""
        keep = set(grades)
        return Multivector(
            {m: c for m, c in self._terms.items() if m.bit_count() in keep},
            self.signature,
        )

    # -- ring structure -----------------------------------------------

    def _check_compatible(self, other: "Multivector") -> None:
        if self.signature != other.signature:
            raise ValueError("cannot combine multivectors from different signatures")

    def __add__(self, other: "Multivector | Scalar") -> "Multivector":
        if isinstance(other, (int, Fraction)):
            other = Multivector.scalar(other, self.signature)
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self._terms)
        for mask, c in other._terms.items():
            s = out.get(mask, Fraction(0)) + c
            if s:
                out[mask] = s
            else:
                out.pop(mask, None)
        result = Multivector.zero(self.signature)
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "Multivector":
        result = Multivector.zero(self.signature)
        result._terms = {m: -c for m, c in self._terms.items()}
        return result

    def __sub__(self, other: "Multivector | Scalar") -> "Multivector":
        if isinstance(other, (int, Fraction)):
            other = Multivector.scalar(other, self.signature)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Multivector":
        return Multivector.scalar(other, self.signature) - self

    def __mul__(self, other: "Multivector | Scalar") -> "Multivector":
        """Geometric product (or scalar scaling)."""
        if isinstance(other, (int, Fraction)):
            result = Multivector.zero(self.signature)
            if other:
                f = Fraction(other)
                result._terms = {m: c * f for m, c in self._terms.items()}
            return result
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_compatible(other)
        neg_mask = self.signature.neg_mask
        out: dict[int, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mask, sign = _blade_mul(m1, m2, neg_mask)
                s = out.get(mask, Fraction(0)) + (c1 * c2 if sign > 0 else -c1 * c2)
                if s:
                    out[mask] = s
                else:
                    out.pop(mask, None)
        result = Multivector.zero(self.signature)
        result._terms = out
        return result

    def __rmul__(self, other: Scalar) -> "Multivector":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __xor__(self, other: "Multivector") -> "Multivector":
        return wedge(self, other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Multivector.scalar(other, self.signature)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.signature == other.signature and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    # -- involutions ----------------------------------------------------

    def _graded_signs(self, sign_of_grade) -> "Multivector":
        result = Multivector.zero(self.signature)
        result._terms = {
            m: (c if sign_of_grade(m.bit_count()) > 0 else -c) for m, c in self._terms.items()
        }
        return result

    def reversion(self) -> "Multivector":
        """Reverse the order of generator factors in every blade."""
        return self._graded_signs(_reversion_sign)

    def grade_involution(self) -> "Multivector":
        """Flip the sign of every odd-grade term."""
        return self._graded_signs(_grade_sign)

    def clifford_conjugation(self) -> "Multivector":
        """Composite of reversion and grade involution."""
        return self._graded_signs(_conjugation_sign)

    # -- formatting -----------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for mask, c in self.terms():
            if mask == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = _blade_name(mask)
            else:
                body = f"{abs(c)}*{_blade_name(mask)}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        sig = f"({self.signature.p},{self.signature.q})"
        return f"<Multivector {self} | {sig}>"


def blade_from_indices(indices: Sequence[int] | Iterable[int], signature: Signature = CL07) -> Multivector:
    """Product of generators in the written order, e.g. [2,1] -> -e12.

    Repeated indices contract through the metric, so [1,2,2] -> -e1 in
    signature (0,7).
    """
    result_mask = 0
    sign = 1
    for i in indices:
        if not 1 <= i <= signature.dimension:
            raise ValueError(f"generator index {i} out of range for {signature!r}")
        mask, s = _blade_mul(result_mask, 1 << (i - 1), signature.neg_mask)
        result_mask = mask
        sign *= s
    return Multivector({result_mask: Fraction(sign)}, signature)


def involution(a: Multivector, kind: str) -> Multivector:
    """Dispatch to one of the three canonical involutions by name."""
    if kind == "reversion":
        return a.reversion()
    if kind == "grade":
        return a.grade_involution()
    if kind == "conjugation":
        return a.clifford_conjugation()
    raise ValueError(f"unknown involution {kind!r}; expected reversion, grade, or conjugation")


def wedge(a: Multivector, b: Multivector) -> Multivector:
    """Exterior product: the grade-|S|+|T| part of each blade product."""
    a._check_compatible(b)
    out: dict[int, Fraction] = {}
    neg_mask = a.signature.neg_mask
    for m1, c1 in a._terms.items():
        for m2, c2 in b._terms.items():
            if m1 & m2:
                continue
            mask, sign = _blade_mul(m1, m2, neg_mask)
            s = out.get(mask, Fraction(0)) + (c1 * c2 if sign > 0 else -c1 * c2)
            if s:
                out[mask] = s
            else:
                out.pop(mask, None)
    result = Multivector.zero(a.signature)
    result._terms = out
    return result


def left_contraction(a: Multivector, b: Multivector) -> Multivector:
    """Contraction of a onto b: blade pairs survive only when a divides b."""
    a._check_compatible(b)
    out: dict[int, Fraction] = {}
    neg_mask = a.signature.neg_mask
    for m1, c1 in a._terms.items():
        for m2, c2 in b._terms.items():
            if m1 & ~m2:
                continue
            mask, sign = _blade_mul(m1, m2, neg_mask)
            s = out.get(mask, Fraction(0)) + (c1 * c2 if sign > 0 else -c1 * c2)
            if s:
                out[mask] = s
            else:
                out.pop(mask, None)
    result = Multivector.zero(a.signature)
    result._terms = out
    return result


def right_contraction(a: Multivector, b: Multivector) -> Multivector:
    """Contraction of b onto a: blade pairs survive only when b divides a."""
    a._check_compatible(b)
    out: dict[int, Fraction] = {}
    neg_mask = a.signature.neg_mask
    for m1, c1 in a._terms.items():
        for m2, c2 in b._terms.items():
            if m2 & ~m1:
                continue
            mask, sign = _blade_mul(m1, m2, neg_mask)
            s = out.get(mask, Fraction(0)) + (c1 * c2 if sign > 0 else -c1 * c2)
            if s:
                out[mask] = s
            else:
                out.pop(mask, None)
    result = Multivector.zero(a.signature)
    result._terms = out
    return result


def metric_pairing(a: Multivector, b: Multivector) -> Fraction:
    """Diagonal blade pairing <rev(e_S) e_S> extended bilinearly.

    In signature (0,7) a grade-k blade pairs with itself to (-1)^k; in
    (8,0) every blade pairs to +1.  Distinct blades pair to zero.
    """
    a._check_compatible(b)
    total = Fraction(0)
    neg_mask = a.signature.neg_mask
    for mask, c1 in a._terms.items():
        c2 = b._terms.get(mask)
        if c2 is None:
            continue
        k = mask.bit_count()
        _, square_sign = _blade_mul(mask, mask, neg_mask)
        sign = square_sign * _reversion_sign(k)
        total += c1 * c2 if sign > 0 else -c1 * c2
    return total


_PSEUDOSCALAR_MASK = (1 << 7) - 1


def hodge_dual(a: Multivector) -> Multivector:
    """Dual against the grade-7 pseudoscalar: rev(a) times e1..e7.

    Only defined in signature (0,7).
    """
    if a.signature != CL07:
        raise ValueError("the dual is only defined in signature (0,7)")
    return a.reversion() * Multivector.basis(_PSEUDOSCALAR_MASK, CL07)
