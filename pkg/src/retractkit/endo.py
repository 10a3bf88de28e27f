"""Endomorphisms of the two rings, given by the images of x and y."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .algebra import (
    COMM,
    NONCOMM,
    CommPoly,
    NCPoly,
    Poly,
    commutator,
    jacobian,
    ring_of,
    substitute,
)
from .errors import RingMismatch


@dataclass(frozen=True)
class Endo:
    """A K-algebra endomorphism, determined by where x and y go."""

    ring: str
    fx: Poly
    fy: Poly

    def __post_init__(self):
        if self.ring not in (COMM, NONCOMM):
            raise ValueError(f"unknown ring {self.ring!r}")
        if ring_of(self.fx) != self.ring or ring_of(self.fy) != self.ring:
            raise RingMismatch("endomorphism images must live in the declared ring")


def identity(ring: str) -> Endo:
    if ring == COMM:
        return Endo(COMM, CommPoly.x(), CommPoly.y())
    if ring == NONCOMM:
        return Endo(NONCOMM, NCPoly.x(), NCPoly.y())
    raise ValueError(f"unknown ring {ring!r}")


def apply(phi: Endo, p: Poly) -> Poly:
    """Image of p under phi."""
    if ring_of(p) != phi.ring:
        raise RingMismatch("element and endomorphism live in different rings")
    return substitute(p, phi.fx, phi.fy)


def compose(sigma: Endo, tau: Endo) -> Endo:
    """The composite sigma after tau: (sigma . tau)(p) = sigma(tau(p))."""
    if sigma.ring != tau.ring:
        raise RingMismatch("cannot compose endomorphisms of different rings")
    return Endo(sigma.ring, apply(sigma, tau.fx), apply(sigma, tau.fy))


def power(phi: Endo, k: int) -> Endo:
    """k-fold composite of phi with itself; k = 0 gives the identity."""
    if k < 0:
        raise ValueError("negative powers of an endomorphism are not defined")
    result = identity(phi.ring)
    for _ in range(k):
        result = compose(result, phi)
    return result


def is_idempotent(phi: Endo) -> bool:
    """Whether phi composed with itself equals phi."""
    square = compose(phi, phi)
    return square.fx == phi.fx and square.fy == phi.fy


def is_injective(phi: Endo) -> bool:
    """Injectivity test.

    Commutative: exactly when the Jacobian of the image pair is nonzero.
    Free algebra: exactly when the images do not commute; a commuting
    image pair lies in a univariate subalgebra, and conversely.
    """
    if phi.ring == COMM:
        return not jacobian(phi.fx, phi.fy).is_zero()
    return not commutator(phi.fx, phi.fy).is_zero()


def fixes(phi: Endo, p: Poly) -> bool:
    """Whether phi maps p to itself."""
    return apply(phi, p) == p


def is_identity(phi: Endo) -> bool:
    ident = identity(phi.ring)
    return phi.fx == ident.fx and phi.fy == ident.fy
