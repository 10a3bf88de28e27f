"""Automorphism recognition and tame factorisation.

Rank-two automorphisms of both rings are tame, and an automorphism can be
peeled by elementary moves: whenever one image has degree at least the
other's and at least 2, its leading form is a scalar multiple of a power
of the other image's leading form, and subtracting that multiple strictly
drops its degree.  Iterating ends in an invertible affine pair.  Failure
of a peel step certifies that the input is not an automorphism.

The free-algebra case also has a closed-form test: a pair of images is an
automorphism exactly when its commutator is a nonzero scalar multiple of
x*y - y*x.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .algebra import (
    COMM,
    NONCOMM,
    CommPoly,
    NCPoly,
    Poly,
    UniPoly,
    as_scalar,
    commutator,
    eval_uni,
    proportionality,
)
from .endo import Endo, apply, compose, identity
from .errors import RingMismatch

Matrix2 = Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]
Vector2 = Tuple[Fraction, Fraction]

LINEAR = "linear"
TRIANGULAR_X = "triangular_x"
TRIANGULAR_Y = "triangular_y"


@dataclass(frozen=True)
class ElementaryAuto:
    """One elementary automorphism, shared between the two rings.

    kind "linear" uses ``matrix`` (invertible) and ``translation``:
    x -> m00*x + m01*y + t0, y -> m10*x + m11*y + t1.
    kind "triangular_x" maps x -> x + h(y); "triangular_y" maps
    y -> y + h(x); the other generator is fixed.
    """

    kind: str
    matrix: Optional[Matrix2] = None
    translation: Optional[Vector2] = None
    shift: Optional[UniPoly] = None

    def __post_init__(self):
        if self.kind == LINEAR:
            if self.matrix is None or self.translation is None:
                raise ValueError("linear factors need a matrix and a translation")
            if _det(self.matrix) == 0:
                raise ValueError("linear factor matrix must be invertible")
        elif self.kind in (TRIANGULAR_X, TRIANGULAR_Y):
            if self.shift is None:
                raise ValueError("triangular factors need a univariate shift")
        else:
            raise ValueError(f"unknown elementary kind {self.kind!r}")

    def as_endo(self, ring: str) -> Endo:
        gen_x, gen_y = _generators(ring)
        if self.kind == LINEAR:
            (a, b), (c, d) = self.matrix
            t0, t1 = self.translation
            return Endo(ring, gen_x * a + gen_y * b + t0, gen_x * c + gen_y * d + t1)
        if self.kind == TRIANGULAR_X:
            return Endo(ring, gen_x + eval_uni(self.shift, gen_y), gen_y)
        return Endo(ring, gen_x, gen_y + eval_uni(self.shift, gen_x))

    def inverse(self) -> "ElementaryAuto":
        if self.kind == LINEAR:
            inv = _invert_matrix(self.matrix)
            t0, t1 = self.translation
            (a, b), (c, d) = inv
            return ElementaryAuto(
                LINEAR,
                matrix=inv,
                translation=(-(a * t0 + b * t1), -(c * t0 + d * t1)),
            )
        return ElementaryAuto(self.kind, shift=-self.shift)


def _det(m: Matrix2) -> Fraction:
    (a, b), (c, d) = m
    return a * d - b * c


def _invert_matrix(m: Matrix2) -> Matrix2:
    (a, b), (c, d) = m
    det = a * d - b * c
    return ((d / det, -b / det), (-c / det, a / det))


def _generators(ring: str) -> Tuple[Poly, Poly]:
    if ring == COMM:
        return CommPoly.x(), CommPoly.y()
    if ring == NONCOMM:
        return NCPoly.x(), NCPoly.y()
    raise ValueError(f"unknown ring {ring!r}")


@dataclass(frozen=True)
class TameDecomposition:
    """Factors composing (left to right fold) to the decomposed map."""

    ring: str
    factors: Tuple[ElementaryAuto, ...]

    def compose(self) -> Endo:
        result = identity(self.ring)
        for factor in self.factors:
            result = compose(result, factor.as_endo(self.ring))
        return result

    def inverse(self) -> Endo:
        result = identity(self.ring)
        for factor in reversed(self.factors):
            result = compose(result, factor.inverse().as_endo(self.ring))
        return result


def compose_factors(ring: str, factors: Sequence[ElementaryAuto]) -> Endo:
    result = identity(ring)
    for factor in factors:
        result = compose(result, factor.as_endo(ring))
    return result


def invert_factors(ring: str, factors: Sequence[ElementaryAuto]) -> Endo:
    result = identity(ring)
    for factor in reversed(factors):
        result = compose(result, factor.inverse().as_endo(ring))
    return result


def _degree_or_zero(p: Poly) -> int:
    return 0 if p.is_zero() else p.degree()


def _affine_parts(p: Poly) -> Optional[Tuple[Fraction, Fraction, Fraction]]:
    """Coefficients (on x, on y, constant) when deg p <= 1, else None."""
    if isinstance(p, CommPoly):
        keys = {(1, 0), (0, 1), (0, 0)}
        if set(p.support()) - keys:
            return None
        return p.coeff((1, 0)), p.coeff((0, 1)), p.coeff((0, 0))
    keys = {"x", "y", ""}
    if set(p.support()) - keys:
        return None
    return p.coeff("x"), p.coeff("y"), p.coeff("")


def _reduction_scalar(u: Poly, v: Poly) -> Optional[Tuple[Fraction, int]]:
    """Scalar c and power k with leading_form(u) = c * leading_form(v)^k."""
    du, dv = u.degree(), v.degree()
    if dv == 0 or du % dv:
        return None
    k = du // dv
    c = proportionality(u.leading_form(), v.leading_form() ** k)
    if c is None or not c:
        return None
    return c, k


def tame_decompose(phi: Endo) -> Optional[TameDecomposition]:
    """Factor phi into elementary automorphisms, or None if it is not one.

    At each step the x-image is tried against the y-image first, so ties
    are broken deterministically.  The recorded triangular factors, read
    right to left under the final affine factor, recompose to phi exactly.
    """
    fx, fy = phi.fx, phi.fy
    recorded: List[ElementaryAuto] = []
    while True:
        dx, dy = _degree_or_zero(fx), _degree_or_zero(fy)
        if dx <= 1 and dy <= 1:
            ax = _affine_parts(fx)
            ay = _affine_parts(fy)
            matrix = ((ax[0], ax[1]), (ay[0], ay[1]))
            if _det(matrix) == 0:
                return None
            affine = ElementaryAuto(LINEAR, matrix=matrix, translation=(ax[2], ay[2]))
            return TameDecomposition(phi.ring, (affine, *reversed(recorded)))
        step = None
        if dx >= dy and dx >= 2 and not fy.is_zero():
            found = _reduction_scalar(fx, fy)
            if found is not None:
                c, k = found
                step = (TRIANGULAR_X, c, k)
                fx = fx - (fy ** k) * c
        if step is None and dy >= dx and dy >= 2 and not fx.is_zero():
            found = _reduction_scalar(fy, fx)
            if found is not None:
                c, k = found
                step = (TRIANGULAR_Y, c, k)
                fy = fy - (fx ** k) * c
        if step is None:
            return None
        kind, c, k = step
        shift = UniPoly.from_coeff_map({k: c})
        recorded.append(ElementaryAuto(kind, shift=shift))


def commutator_criterion(phi: Endo) -> bool:
    """Free-algebra automorphism test through the image commutator."""
    if phi.ring != NONCOMM:
        raise RingMismatch("the commutator criterion applies to the free algebra")
    comm = commutator(phi.fx, phi.fy)
    if comm.is_zero():
        return False
    c = comm.coeff("xy")
    if not c:
        return False
    target = NCPoly({"xy": c, "yx": -c})
    return comm == target


def is_automorphism(phi: Endo) -> bool:
    """Ring-appropriate automorphism test."""
    if phi.ring == NONCOMM:
        return commutator_criterion(phi)
    return tame_decompose(phi) is not None


def random_tame_factors(
    rng: random.Random,
    length: int,
    coeff_bound: int = 3,
    deg_bound: int = 3,
) -> List[ElementaryAuto]:
    """Seeded list of elementary factors; ring-independent."""
    factors: List[ElementaryAuto] = []
    for _ in range(length):
        kind = rng.choice((LINEAR, TRIANGULAR_X, TRIANGULAR_Y))
        if kind == LINEAR:
            while True:
                entries = [Fraction(rng.randint(-coeff_bound, coeff_bound)) for _ in range(4)]
                matrix = ((entries[0], entries[1]), (entries[2], entries[3]))
                if _det(matrix):
                    break
            if rng.random() < 0.5:
                translation = (Fraction(0), Fraction(0))
            else:
                translation = (
                    Fraction(rng.randint(-coeff_bound, coeff_bound)),
                    Fraction(rng.randint(-coeff_bound, coeff_bound)),
                )
            factors.append(ElementaryAuto(LINEAR, matrix=matrix, translation=translation))
        else:
            d = rng.randint(1, deg_bound)
            coeffs = [Fraction(rng.randint(-coeff_bound, coeff_bound)) for _ in range(d)]
            lead = rng.choice([c for c in range(-coeff_bound, coeff_bound + 1) if c])
            coeffs.append(Fraction(lead))
            factors.append(ElementaryAuto(kind, shift=UniPoly(coeffs)))
    return factors


def random_automorphism(
    seed: Union[int, random.Random],
    length: int,
    ring: str = COMM,
    coeff_bound: int = 3,
    deg_bound: int = 3,
) -> Endo:
    """Seeded tame automorphism, the composite of ``length`` random factors."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return compose_factors(ring, random_tame_factors(rng, length, coeff_bound, deg_bound))
