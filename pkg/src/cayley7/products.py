"""Deformed octonion products over the exterior algebra of (0,7).

The octonion product only sees scalars and vectors, so folding a
multivector operand factor by factor is what extends the deformed
products to every grade.  This module implements the two folds (bullet
and odot), the registry of deformed products built from them, the
non-associative shear, the fold-induced involutions, and the torsion
tensor of a unit base point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence, Union

from .clifford import CL07, Multivector, blade_from_indices
from .octonion import Octonion

__all__ = [
    "PRODUCTS",
    "REVERSAL_ELEMENT",
    "FactorSequence",
    "ProductSpec",
    "TorsionTensor",
    "bullet",
    "bullet_seq",
    "deformed",
    "named_product",
    "odot",
    "shear",
    "torsion_tensor",
    "u_involution",
]

Side = Literal["left", "right"]


def as_octonion(x: "Octonion | Multivector | int | Fraction") -> Octonion:
    if isinstance(x, Octonion):
        return x
    if isinstance(x, Multivector):
        return Octonion.from_multivector(x)
    return Octonion.scalar(x)


def as_multivector(x: "Octonion | Multivector | int | Fraction") -> Multivector:
    if isinstance(x, Multivector):
        return x
    if isinstance(x, Octonion):
        return x.to_multivector(CL07)
    return Multivector.scalar(x, CL07)


def _factor_indices(mask: int) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def bullet(a, b, side: Side) -> Octonion:
    """Fold a multivector operand through the octonion product.

    side="left" computes a bullet-left b for an octonion a and a
    multivector b: each basis blade of b is factored in ascending index
    order and multiplied in from the right, ((a o u1) o u2) ... o uk.
    side="right" is the mirror image, u1 o (u2 o (... o (uk o b))),
    with the multivector on the left.  A scalar blade just scales the
    octonion operand.
    """
    if side == "left":
        oct_op = as_octonion(a)
        mv = b
        if not isinstance(mv, Multivector):
            raise TypeError("bullet left expects a multivector second operand")
        total = Octonion.zero()
        for mask, coeff in mv.terms():
            x = oct_op
            for i in _factor_indices(mask):
                x = x * Octonion.unit(i)
            total = total + x * coeff
        return total
    if side == "right":
        mv = a
        if not isinstance(mv, Multivector):
            raise TypeError("bullet right expects a multivector first operand")
        oct_op = as_octonion(b)
        total = Octonion.zero()
        for mask, coeff in mv.terms():
            x = oct_op
            for i in reversed(_factor_indices(mask)):
                x = Octonion.unit(i) * x
            total = total + x * coeff
        return total
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


@dataclass(frozen=True)
class FactorSequence:
    """An explicitly ordered factorization c * f1 f2 ... fk.

    Each factor must be a homogeneous octonion: purely imaginary or
    purely scalar.  The sequence remembers the written order so tests
    can confirm that canonical (ascending) factorization only changes
    results by the permutation sign.
    """

    factors: tuple[Octonion, ...]
    coefficient: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        for f in self.factors:
            scalar = f.coefficients[0]
            vector = any(f.coefficients[1:])
            if scalar and vector:
                raise ValueError("factors must be purely scalar or purely imaginary")

    def multivector(self) -> Multivector:
        """Clifford product of the factors, scaled by the coefficient."""
        total = Multivector.scalar(self.coefficient, CL07)
        for f in self.factors:
            total = total * f.to_multivector(CL07)
        return total


def bullet_seq(a: Octonion, seq: FactorSequence, side: Side) -> Octonion:
    """Fold through the factors exactly in their written order."""
    x = as_octonion(a)
    if side == "left":
        for f in seq.factors:
            x = x * f
    elif side == "right":
        for f in reversed(seq.factors):
            x = f * x
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return x * seq.coefficient


def odot(u: Multivector, v: Multivector, side: Side) -> Octonion:
    """Fold both multivector operands through the octonion product.

    side="left": u1 o (u2 o (... (uk bullet-left v))) per ascending-factor
    blade of u; a scalar blade of u contributes its coefficient times
    (1 bullet-left v).  side="right": ((u bullet-right v1) o v2) ... o vl
    per blade of v, with scalar blades of v scaling (u bullet-right 1).
    Linear in both operands.
    """
    if not isinstance(u, Multivector) or not isinstance(v, Multivector):
        raise TypeError("odot expects two multivectors")
    total = Octonion.zero()
    if side == "left":
        for mask, coeff in u.terms():
            factors = _factor_indices(mask)
            if factors:
                x = bullet(Octonion.unit(factors[-1]), v, "left")
                for i in reversed(factors[:-1]):
                    x = Octonion.unit(i) * x
            else:
                x = bullet(Octonion.one(), v, "left")
            total = total + x * coeff
        return total
    if side == "right":
        for mask, coeff in v.terms():
            factors = _factor_indices(mask)
            if factors:
                x = bullet(u, Octonion.unit(factors[0]), "right")
                for j in factors[1:]:
                    x = x * Octonion.unit(j)
            else:
                x = bullet(u, Octonion.one(), "right")
            total = total + x * coeff
        return total
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


# ---------------------------------------------------------------------------
# Deformed products


LeftMap = Literal["bullet_oct", "times_one", "bullet_one", "odot_L", "odot_R"]
RightMap = Literal["bullet_oct", "odot_L", "odot_R"]
Outer = Literal["circ", "bullet_right"]


@dataclass(frozen=True)
class ProductSpec:
    """How to deform the product: one map per entry plus the deformers.

    The right map always receives the involute of v (or of u when v is
    absent).  outer="bullet_right" folds the untouched first operand over
    the mapped second one instead of multiplying the two maps.
    """

    left_map: LeftMap
    right_map: RightMap
    outer: Outer
    u: Multivector
    v: Optional[Multivector] = None


def _deformer_bar(u: Multivector) -> Multivector:
    # On paravectors this is octonion conjugation; on higher grades the
    # worked deformed-product values pin it to the parity involution.
    return u.grade_involution()


def _apply_left(kind: LeftMap, a, u: Multivector) -> Octonion:
    if kind == "bullet_oct":
        return bullet(as_octonion(a), u, "left")
    if kind == "times_one":
        return as_octonion(a)
    if kind == "bullet_one":
        return bullet(as_multivector(a), Octonion.one(), "right")
    if kind == "odot_L":
        return odot(as_multivector(a), u, "left")
    if kind == "odot_R":
        return odot(as_multivector(a), u, "right")
    raise ValueError(f"unknown left map {kind!r}")


def _apply_right(kind: RightMap, ubar: Multivector, b) -> Octonion:
    if kind == "bullet_oct":
        return bullet(ubar, as_octonion(b), "right")
    if kind == "odot_L":
        return odot(ubar, as_multivector(b), "left")
    if kind == "odot_R":
        return odot(ubar, as_multivector(b), "right")
    raise ValueError(f"unknown right map {kind!r}")


def deformed(a, b, spec: ProductSpec) -> Octonion:
    """Evaluate a deformed product per its ProductSpec.

    The second slot of the conjugated deformer is v when present, u
    otherwise, so the one-deformer products are the diagonal v=u case.
    """
    ubar = _deformer_bar(spec.v if spec.v is not None else spec.u)
    right = _apply_right(spec.right_map, ubar, b)
    if spec.outer == "bullet_right":
        return bullet(as_multivector(a), right, "right")
    left = _apply_left(spec.left_map, a, spec.u)
    return left * right


# name -> (left_map, right_map, outer, v required)
PRODUCTS: dict[str, tuple[LeftMap, RightMap, Outer, bool]] = {
    # scalar-and-vector deformers (X-products) and their multivector forms
    "circ": ("times_one", "bullet_oct", "circ", False),
    "x": ("bullet_oct", "bullet_oct", "circ", False),
    "xy": ("bullet_oct", "bullet_oct", "circ", True),
    "onex": ("times_one", "bullet_oct", "circ", False),
    "u": ("bullet_oct", "bullet_oct", "circ", False),
    "uv": ("bullet_oct", "bullet_oct", "circ", True),
    "oneu": ("bullet_one", "bullet_oct", "circ", False),
    # one-sided fold on the second entry
    "oneu_l": ("bullet_one", "odot_L", "circ", False),
    "oneu_r": ("bullet_one", "odot_R", "circ", False),
    # fold-through (triangle) family: outer bullet_right ignores the left map
    "fold_oneu": ("bullet_one", "bullet_oct", "bullet_right", False),
    "fold_oneu_l": ("bullet_one", "odot_L", "bullet_right", False),
    "fold_oneu_r": ("bullet_one", "odot_R", "bullet_right", False),
    # directional products with odot on one entry
    "u_lb": ("odot_L", "bullet_oct", "circ", False),
    "u_rb": ("odot_R", "bullet_oct", "circ", False),
    "u_bl": ("bullet_oct", "odot_L", "circ", False),
    "u_br": ("bullet_oct", "odot_R", "circ", False),
    # directional products with odot on both entries
    "u_ll": ("odot_L", "odot_L", "circ", False),
    "u_lr": ("odot_L", "odot_R", "circ", False),
    "u_rl": ("odot_R", "odot_L", "circ", False),
    "u_rr": ("odot_R", "odot_R", "circ", False),
}


def named_product(name: str, u: "Multivector | None" = None, v: "Multivector | None" = None) -> ProductSpec:
    """Build the ProductSpec for a registry name.

    Names that pair two deformers (xy, uv) require v; every other name
    accepts an optional v for its two-deformer generalization.  The plain
    product is the name "circ" (u defaults to 1 and must stay a scalar).
    """
    try:
        left, right, outer, needs_v = PRODUCTS[name]
    except KeyError:
        raise ValueError(f"unknown product {name!r}; known: {', '.join(sorted(PRODUCTS))}") from None
    if u is None:
        u = Multivector.scalar(1, CL07)
    if needs_v and v is None:
        raise ValueError(f"product {name!r} needs both deformers u and v")
    if name == "circ" and (v is not None or u != Multivector.scalar(1, CL07)):
        raise ValueError("the undeformed product takes no deformers")
    return ProductSpec(left, right, outer, u, v)


# ---------------------------------------------------------------------------
# Shear products


def _blade_pivot_shear(
    u_mask: int,
    v_mask: int,
    side: Literal["rhd", "lhd"],
) -> Octonion:
    uf = _factor_indices(u_mask)
    vf = _factor_indices(v_mask)
    if side == "rhd":
        if not uf:
            raise ValueError("shear rhd needs a pivot vector: left operand has a scalar term")
        pivot = uf[-1]
        head = Multivector.basis(u_mask & ~(1 << (pivot - 1)), CL07)
        lhs = bullet(head, Octonion.unit(pivot), "right")
        rhs = bullet(-Octonion.unit(pivot), Multivector.basis(v_mask, CL07), "left")
    else:
        if not vf:
            raise ValueError("shear lhd needs a pivot vector: right operand has a scalar term")
        pivot = vf[0]
        tail = Multivector.basis(v_mask & ~(1 << (pivot - 1)), CL07)
        lhs = bullet(Multivector.basis(u_mask, CL07), Octonion.unit(pivot), "right")
        rhs = bullet(-Octonion.unit(pivot), tail, "left")
    return lhs * rhs


def shear(psi: Multivector, phi: Multivector, side: Literal["rhd", "lhd"]) -> Octonion:
    """Shear product: the pivot vector migrates across the o sign.

    rhd peels the last factor off psi and re-enters it conjugated in
    front of phi; lhd peels the first factor off phi symmetrically.
    Extended linearly over blade pairs.  The operand donating the pivot
    must have no scalar term.
    """
    if side not in ("rhd", "lhd"):
        raise ValueError(f"side must be 'rhd' or 'lhd', not {side!r}")
    total = Octonion.zero()
    for um, uc in psi.terms():
        for vm, vc in phi.terms():
            total = total + _blade_pivot_shear(um, vm, side) * (uc * vc)
    return total


# ---------------------------------------------------------------------------
# Fold-induced involutions


def u_involution(a: Octonion, u: Multivector, kind: Literal["dashv", "vdash"]) -> Octonion:
    """The involution a single invertible blade u induces on octonions.

    dashv folds a through u on the left and multiplies by the octonion
    conjugate of the folded unit of the reversed blade; vdash folds the
    Clifford conjugate of u through a from the right instead.
    """
    terms = u.terms()
    if len(terms) != 1:
        raise ValueError("the induced involution needs a single nonzero basis blade")
    a = as_octonion(a)
    unit_of_reversed = bullet(Octonion.one(), u.reversion(), "left")
    if kind == "dashv":
        return bullet(a, u, "left") * unit_of_reversed.conjugate()
    if kind == "vdash":
        return bullet(u.clifford_conjugation(), a, "right") * unit_of_reversed
    raise ValueError(f"kind must be 'dashv' or 'vdash', not {kind!r}")


# ---------------------------------------------------------------------------
# Torsion at a unit base point


@dataclass(frozen=True)
class TorsionTensor:
    """All 343 components T[i][j][k] at a unit octonion base point."""

    components: tuple[tuple[tuple[Fraction, ...], ...], ...]
    base_point: Octonion

    def component(self, i: int, j: int, k: int) -> Fraction:
        return self.components[i - 1][j - 1][k - 1]

    def nonzeros(self) -> list[tuple[int, int, int, Fraction]]:
        out = []
        for i in range(1, 8):
            for j in range(1, 8):
                for k in range(1, 8):
                    c = self.component(i, j, k)
                    if c:
                        out.append((i, j, k, c))
        return out


def torsion_tensor(x: Octonion) -> TorsionTensor:
    """Components [(conj(e_i) o conj(X)) o (X o e_j)] o e_k, scalar part.

    The base point must lie on the unit sphere so the inner bracket is a
    genuine deformed product.
    """
    x = as_octonion(x)
    if x.norm_squared() != 1:
        raise ValueError("torsion components are defined at unit base points only")
    xbar = x.conjugate()
    rows = []
    for i in range(1, 8):
        left = (-Octonion.unit(i)) * xbar
        cols = []
        for j in range(1, 8):
            bracket = left * (x * Octonion.unit(j))
            cols.append(tuple((bracket * Octonion.unit(k)).coefficients[0] for k in range(1, 8)))
        rows.append(tuple(cols))
    return TorsionTensor(tuple(rows), x)


# ---------------------------------------------------------------------------
# The reversal element (scalar plus seven trivectors)


def _reversal_element() -> Multivector:
    written = ((4, 7, 6), (5, 1, 7), (6, 2, 1), (7, 3, 2), (1, 4, 3), (2, 5, 4), (3, 6, 5))
    total = Multivector.scalar(-3, CL07)
    for triple in written:
        total = total + blade_from_indices(triple, CL07)
    return total * Fraction(1, 4)


# Right-folding this element through X o e_b terms rewrites two stacked
# left unit actions in reversed order; the geometry suite sweeps the
# identity.  Folds of the element itself: 1 -> 1 and e_a -> -e_a.
REVERSAL_ELEMENT = _reversal_element()
