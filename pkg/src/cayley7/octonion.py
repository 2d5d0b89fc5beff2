"""Octonions with exact rational coefficients.

The multiplication table is generated from the seven oriented lines of
the Fano plane, and the same product is exposed through two independent
Clifford-algebra routes (a grade-0/1 projection in signature (0,7) and a
grade-1 projection in signature (8,0)) so each implementation can act as
an oracle for the others.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence, Union

from .clifford import CL07, CL80, Multivector, Signature, blade_from_indices

__all__ = [
    "FANO_LINES",
    "Octonion",
    "STRUCTURE_TRIVECTOR",
    "epsilon3",
    "epsilon4",
    "is_quaternion_triple",
    "octonion_product",
    "scalar_product",
    "unit_product",
]

Scalar = Union[int, Fraction]

# Oriented index triples (a, b, c) with e_a e_b = e_c; cyclic rotations
# keep the orientation, transpositions flip it.
FANO_LINES: tuple[tuple[int, int, int], ...] = (
    (1, 2, 6),
    (2, 3, 7),
    (3, 4, 1),
    (4, 5, 2),
    (5, 6, 3),
    (6, 7, 4),
    (7, 1, 5),
)

_LINE_SETS = tuple(frozenset(line) for line in FANO_LINES)


def is_quaternion_triple(a: int, b: int, c: int) -> bool:
    """True when the three indices are distinct and span a Fano line."""
    if len({a, b, c}) != 3:
        return False
    return frozenset((a, b, c)) in _LINE_SETS


def epsilon3(a: int, b: int, c: int) -> int:
    """Totally antisymmetric structure constant on indices 1..7."""
    if not is_quaternion_triple(a, b, c):
        return 0
    for line in FANO_LINES:
        if frozenset(line) == frozenset((a, b, c)):
            rotations = {line, (line[1], line[2], line[0]), (line[2], line[0], line[1])}
            return 1 if (a, b, c) in rotations else -1
    raise AssertionError("unreachable")


def epsilon4(i: int, j: int, k: int, l: int) -> int:
    """Grade-4 companion constant, defined through the grade-3 one."""
    total = -sum(epsilon3(m, i, j) * epsilon3(m, k, l) for m in range(1, 8))
    total -= (i == l) * (j == k)
    total += (i == k) * (j == l)
    return total


# unit_product table: _UNIT[i][j] = (k, sign) with e_i e_j = sign * e_k,
# where index 0 stands for the real unit.
def _build_unit_table() -> tuple[tuple[tuple[int, int], ...], ...]:
    eps: dict[tuple[int, int], tuple[int, int]] = {}
    for a, b, c in FANO_LINES:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            eps[(x, y)] = (z, 1)
            eps[(y, x)] = (z, -1)
    rows = []
    for i in range(8):
        row = []
        for j in range(8):
            if i == 0:
                row.append((j, 1))
            elif j == 0:
                row.append((i, 1))
            elif i == j:
                row.append((0, -1))
            else:
                row.append(eps[(i, j)])
        rows.append(tuple(row))
    return tuple(rows)


_UNIT = _build_unit_table()


def unit_product(i: int, j: int) -> tuple[int, int]:
    """(index, sign) of the product of two units; index 0 is the real unit."""
    return _UNIT[i][j]


class Octonion:
    """An octonion stored as eight exact rational coefficients.

    ``coefficients[0]`` is the real part; ``coefficients[i]`` multiplies
    the imaginary unit ``e_i`` for ``i`` in 1..7.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence[Scalar]) -> None:
        if len(coefficients) != 8:
            raise ValueError("an octonion needs exactly 8 coefficients")
        self.coefficients = tuple(
            c if type(c) is Fraction else Fraction(c) for c in coefficients
        )

    @classmethod
    def zero(cls) -> "Octonion":
        return cls((0,) * 8)

    @classmethod
    def one(cls) -> "Octonion":
        return cls.unit(0)

    @classmethod
    def unit(cls, i: int) -> "Octonion":
        if not 0 <= i <= 7:
            raise ValueError("unit index must be 0..7 (0 is the real unit)")
        return _UNIT_OCTONIONS[i]

    @classmethod
    def scalar(cls, value: Scalar) -> "Octonion":
        coeffs = [Fraction(0)] * 8
        coeffs[0] = Fraction(value)
        return cls(coeffs)

    # -- conversions ----------------------------------------------------

    def to_multivector(self, signature: Signature = CL07) -> Multivector:
        """Image as scalar plus vector (a paravector) in the given algebra."""
        terms = {}
        if self.coefficients[0]:
            terms[0] = self.coefficients[0]
        for i in range(1, 8):
            if self.coefficients[i]:
                terms[1 << (i - 1)] = self.coefficients[i]
        return Multivector(terms, signature)

    @classmethod
    def from_multivector(cls, a: Multivector) -> "Octonion":
        coeffs = [Fraction(0)] * 8
        for mask, c in a.terms():
            if mask == 0:
                coeffs[0] = c
            elif mask.bit_count() == 1:
                coeffs[mask.bit_length()] = c
            else:
                raise ValueError(f"{a} has grade-{mask.bit_count()} terms, not a paravector")
        return cls(coeffs)

    # -- algebra --------------------------------------------------------

    def __add__(self, other: "Octonion | Scalar") -> "Octonion":
        if isinstance(other, (int, Fraction)):
            other = Octonion.scalar(other)
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion([x + y for x, y in zip(self.coefficients, other.coefficients)])

    __radd__ = __add__

    def __sub__(self, other: "Octonion | Scalar") -> "Octonion":
        if isinstance(other, (int, Fraction)):
            other = Octonion.scalar(other)
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion([x - y for x, y in zip(self.coefficients, other.coefficients)])

    def __rsub__(self, other: Scalar) -> "Octonion":
        return Octonion.scalar(other) - self

    def __neg__(self) -> "Octonion":
        return Octonion([-x for x in self.coefficients])

    def __mul__(self, other: "Octonion | Scalar") -> "Octonion":
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return Octonion([x * f for x in self.coefficients])
        if not isinstance(other, Octonion):
            return NotImplemented
        # Clear denominators once so the 64-term accumulation runs on
        # plain integers; normalization happens per component at the end.
        dx = dy = 1
        for c in self.coefficients:
            dx = dx * c.denominator // gcd(dx, c.denominator)
        for c in other.coefficients:
            dy = dy * c.denominator // gcd(dy, c.denominator)
        xs = [c.numerator * (dx // c.denominator) for c in self.coefficients]
        ys = [c.numerator * (dy // c.denominator) for c in other.coefficients]
        out = [0] * 8
        for i, x in enumerate(xs):
            if not x:
                continue
            row = _UNIT[i]
            for j, y in enumerate(ys):
                if not y:
                    continue
                k, sign = row[j]
                out[k] += x * y if sign > 0 else -x * y
        den = dx * dy
        return Octonion([Fraction(n, den) for n in out])

    def __rmul__(self, other: Scalar) -> "Octonion":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Octonion.scalar(other)
        if not isinstance(other, Octonion):
            return NotImplemented
        return self.coefficients == other.coefficients

    __hash__ = None  # type: ignore[assignment]

    def conjugate(self) -> "Octonion":
        """Negate the imaginary part."""
        return Octonion((self.coefficients[0],) + tuple(-c for c in self.coefficients[1:]))

    def scalar_part(self) -> Fraction:
        return self.coefficients[0]

    def norm_squared(self) -> Fraction:
        return sum((c * c for c in self.coefficients), Fraction(0))

    def inverse(self) -> "Octonion":
        n = self.norm_squared()
        if not n:
            raise ZeroDivisionError("zero octonion has no inverse")
        return self.conjugate() * (Fraction(1) / n)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __str__(self) -> str:
        return str(self.to_multivector())

    def __repr__(self) -> str:
        return f"<Octonion {self}>"


# Shared instances for the basis units; safe because coefficients are an
# immutable tuple.
_UNIT_OCTONIONS = tuple(
    Octonion([Fraction(1) if k == i else Fraction(0) for k in range(8)]) for i in range(8)
)


def _sum_of_line_blades(signature: Signature) -> Multivector:
    total = Multivector.zero(signature)
    for line in FANO_LINES:
        total = total + blade_from_indices(line, signature)
    return total


# Sum of the seven oriented line trivectors; the element that deforms the
# geometric product of signature (0,7) into the octonion product.
STRUCTURE_TRIVECTOR = _sum_of_line_blades(CL07)

# The same seven oriented lines as a trivector of (8,0).
STRUCTURE_TRIVECTOR_80 = _sum_of_line_blades(CL80)

_E8 = Multivector.basis(1 << 7, CL80)
_TOP_80 = Multivector.basis((1 << 8) - 1, CL80)

# Transformer of the (8,0) route.  A bare grade-3 line sum can never reach
# grade 1 from e_i e8 e_j (the grades it produces from a trivector are all
# even), so the line blades enter wedged with e8; with that grade-4 element
# the 1/16 multiple below is idempotent and the route reproduces the unit
# table.  The verifier records the failure of the grade-3 variant.
_LINE4_80 = STRUCTURE_TRIVECTOR_80 * _E8
_TRANSFORMER_80 = (1 - _LINE4_80) * (1 - _TOP_80)


def _check_projector() -> None:
    p = _TRANSFORMER_80 * Fraction(1, 16)
    if p * p != p:
        raise AssertionError("the rank-one projector behind the (8,0) route is not idempotent")


_check_projector()


def _product_eps(x: Octonion, y: Octonion) -> Octonion:
    return x * y


def _product_cl07(x: Octonion, y: Octonion) -> Octonion:
    a = x.to_multivector(CL07)
    b = y.to_multivector(CL07)
    full = a * b * (1 - STRUCTURE_TRIVECTOR)
    return Octonion.from_multivector(full.project(0, 1))


def _product_cl80(x: Octonion, y: Octonion) -> Octonion:
    def embed(o: Octonion) -> Multivector:
        terms = {}
        if o.coefficients[0]:
            terms[1 << 7] = o.coefficients[0]
        for i in range(1, 8):
            if o.coefficients[i]:
                terms[1 << (i - 1)] = o.coefficients[i]
        return Multivector(terms, CL80)

    big = embed(x) * _E8 * embed(y) * _TRANSFORMER_80
    vec = big.project(1)
    coeffs = [vec.coefficient(1 << 7)] + [vec.coefficient(1 << (i - 1)) for i in range(1, 8)]
    return Octonion(coeffs)


_ROUTES = {
    "eps": _product_eps,
    "cl07": _product_cl07,
    "cl80": _product_cl80,
}


def octonion_product(x: Octonion, y: Octonion, route: str = "eps") -> Octonion:
    """Multiply two octonions through one of three independent routes.

    ``eps``  -- the structure-constant table (the fast path, and the oracle
                the verifier trusts);
    ``cl07`` -- scalar-plus-vector projection of A B (1 - trivector sum)
                in signature (0,7);
    ``cl80`` -- grade-1 projection of A e8 B (1 - line4)(1 - top) in
                signature (8,0), where line4 is the line sum wedged with
                e8 and the real unit rides on e8.
    """
    try:
        impl = _ROUTES[route]
    except KeyError:
        raise ValueError(f"unknown route {route!r}; expected eps, cl07, or cl80") from None
    return impl(x, y)


def scalar_product(x: Octonion, y: Octonion) -> Fraction:
    """Symmetric pairing (conj(x) y + conj(y) x) / 2, returned as a scalar."""
    sym = x.conjugate() * y + y.conjugate() * x
    if any(sym.coefficients[1:]):
        raise AssertionError("symmetrized product has a nonzero imaginary part")
    return sym.coefficients[0] / 2
