"""Automorphism recognition and tame factorization."""

import random
from fractions import Fraction

import pytest

from retractkit.algebra import COMM, NONCOMM, UniPoly
from retractkit.autorec import (
    LINEAR,
    TRIANGULAR_X,
    TRIANGULAR_Y,
    ElementaryAuto,
    compose_factors,
    commutator_criterion,
    invert_factors,
    is_automorphism,
    random_automorphism,
    random_tame_factors,
    tame_decompose,
)
from retractkit.endo import Endo, compose, is_identity
from retractkit.errors import RingMismatch
from retractkit.exprio import parse_poly


def E(ring: str, fx: str, fy: str) -> Endo:
    return Endo(ring, parse_poly(fx, ring), parse_poly(fy, ring))


IDENTITY_MATRIX = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
SWAP_MATRIX = ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0)))


class TestElementaryFactors:
    def test_validation(self):
        with pytest.raises(ValueError):
            ElementaryAuto(LINEAR)  # missing matrix and translation
        with pytest.raises(ValueError):
            ElementaryAuto(
                LINEAR,
                matrix=((Fraction(1), Fraction(2)), (Fraction(2), Fraction(4))),
                translation=(Fraction(0), Fraction(0)),
            )
        with pytest.raises(ValueError):
            ElementaryAuto(TRIANGULAR_X)
        with pytest.raises(ValueError):
            ElementaryAuto("scaling", shift=UniPoly.t())

    def test_as_endo(self):
        swap = ElementaryAuto(LINEAR, matrix=SWAP_MATRIX, translation=(Fraction(0), Fraction(0)))
        assert swap.as_endo(COMM) == E(COMM, "y", "x")

        shear = ElementaryAuto(TRIANGULAR_X, shift=UniPoly((0, 0, 1)))
        assert shear.as_endo(NONCOMM) == E(NONCOMM, "x + y^2", "y")

        other = ElementaryAuto(TRIANGULAR_Y, shift=UniPoly((1, -2)))
        assert other.as_endo(COMM) == E(COMM, "x", "y - 2*x + 1")

    @pytest.mark.parametrize("ring", [COMM, NONCOMM])
    def test_factor_inverse_cancels(self, ring):
        rng = random.Random(7)
        for factor in random_tame_factors(rng, 25):
            forward = factor.as_endo(ring)
            backward = factor.inverse().as_endo(ring)
            assert is_identity(compose(forward, backward))
            assert is_identity(compose(backward, forward))


class TestTameDecompose:
    def test_known_factorization(self):
        phi = E(COMM, "y + x^2", "x")
        decomposition = tame_decompose(phi)
        assert decomposition is not None
        kinds = [factor.kind for factor in decomposition.factors]
        assert kinds == [LINEAR, TRIANGULAR_X]
        assert decomposition.factors[1].shift == UniPoly((0, 0, 1))
        assert decomposition.compose() == phi

    def test_inverse_of_decomposition(self):
        phi = E(COMM, "y + x^2", "x")
        decomposition = tame_decompose(phi)
        assert is_identity(compose(decomposition.inverse(), phi))
        assert is_identity(compose(phi, decomposition.inverse()))

    def test_identity_and_affine(self):
        decomposition = tame_decompose(E(COMM, "x + 1", "x + y"))
        assert decomposition is not None
        assert len(decomposition.factors) == 1
        assert decomposition.factors[0].kind == LINEAR

    @pytest.mark.parametrize(
        "fx, fy",
        [
            ("x^2", "y"),  # not injective on the x-axis
            ("x", "x"),  # degenerate pair
            ("x + y", "2*x + 2*y"),  # singular linear part
            ("x + y^2", "y + x^2"),  # leading forms do not reduce
            ("x*y", "y"),
        ],
    )
    def test_rejects_non_automorphisms(self, fx, fy):
        assert tame_decompose(E(COMM, fx, fy)) is None

    @pytest.mark.parametrize("ring", [COMM, NONCOMM])
    @pytest.mark.parametrize("seed", range(12))
    def test_recompose_round_trip(self, ring, seed):
        phi = random_automorphism(seed, length=4, ring=ring)
        decomposition = tame_decompose(phi)
        assert decomposition is not None
        assert decomposition.compose() == phi

    # kept small: the inverse composite can be far larger than phi itself
    @pytest.mark.parametrize("ring", [COMM, NONCOMM])
    @pytest.mark.parametrize("seed", range(8))
    def test_inverse_round_trip(self, ring, seed):
        phi = random_automorphism(seed, length=3, ring=ring, deg_bound=2)
        decomposition = tame_decompose(phi)
        assert is_identity(compose(decomposition.inverse(), phi))
        assert is_identity(compose(phi, decomposition.inverse()))

    def test_compose_and_invert_factor_lists(self):
        rng = random.Random(3)
        factors = random_tame_factors(rng, 5)
        forward = compose_factors(COMM, factors)
        backward = invert_factors(COMM, factors)
        assert is_identity(compose(forward, backward))


class TestCommutatorCriterion:
    def test_accepts_automorphisms(self):
        assert commutator_criterion(E(NONCOMM, "y", "x"))
        assert commutator_criterion(E(NONCOMM, "x + y^2", "y"))
        assert commutator_criterion(E(NONCOMM, "2*x + 1", "3*y - x"))

    def test_rejects_non_automorphisms(self):
        assert not commutator_criterion(E(NONCOMM, "x^2", "y"))
        assert not commutator_criterion(E(NONCOMM, "x", "x*y"))
        assert not commutator_criterion(E(NONCOMM, "x", "x"))
        # injective but not onto
        assert not commutator_criterion(E(NONCOMM, "x", "y*x*y"))

    def test_wrong_ring(self):
        with pytest.raises(RingMismatch):
            commutator_criterion(E(COMM, "y", "x"))

    @pytest.mark.parametrize("seed", range(10))
    def test_agrees_with_tame_recognition(self, seed):
        phi = random_automorphism(seed, length=3, ring=NONCOMM)
        assert commutator_criterion(phi)
        assert tame_decompose(phi) is not None


class TestIsAutomorphism:
    def test_dispatch(self):
        assert is_automorphism(E(COMM, "y + x^2", "x"))
        assert not is_automorphism(E(COMM, "x^2", "y"))
        assert is_automorphism(E(NONCOMM, "y + x^2", "x"))
        assert not is_automorphism(E(NONCOMM, "x^2", "y"))


class TestRandomAutomorphism:
    def test_deterministic(self):
        assert random_automorphism(11, length=5) == random_automorphism(11, length=5)
        assert random_automorphism(11, length=5) != random_automorphism(12, length=5)

    def test_accepts_shared_rng(self):
        rng = random.Random(2)
        first = random_automorphism(rng, length=3)
        second = random_automorphism(rng, length=3)
        # the stream advances, so the two draws differ
        assert first != second

    @pytest.mark.parametrize("ring", [COMM, NONCOMM])
    def test_output_is_automorphism(self, ring):
        for seed in range(8):
            assert is_automorphism(random_automorphism(seed, length=4, ring=ring))
