"""Arithmetic core: exactness, canonical order, ring operations."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from retractkit.algebra import (
    CommPoly,
    NCPoly,
    UniPoly,
    abelianize,
    commutator,
    deg,
    divides,
    eval_uni,
    in_commutator_ideal,
    jacobian,
    leading_form,
    proportionality,
    same_ring,
    substitute,
    wdeg,
)
from retractkit.errors import (
    DegreeOfZero,
    DivisorZero,
    RingMismatch,
    TermBudgetExceeded,
)

scalars = st.fractions(min_value=-5, max_value=5, max_denominator=4)
comm_polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), scalars, max_size=4
).map(CommPoly)
nc_polys = st.dictionaries(st.text(alphabet="xy", max_size=3), scalars, max_size=4).map(
    NCPoly
)


def C(text):
    from retractkit.exprio import parse_poly

    return parse_poly(text, "comm")


def N(text):
    from retractkit.exprio import parse_poly

    return parse_poly(text, "noncomm")


class TestConstruction:
    def test_zero_coefficients_are_dropped(self):
        assert CommPoly({(1, 0): 0, (0, 1): 1}) == CommPoly.y()
        assert NCPoly({"x": 0}) == NCPoly.zero()

    def test_negative_exponents_rejected(self):
        with pytest.raises(ValueError):
            CommPoly({(-1, 0): 1})

    def test_bad_letters_rejected(self):
        with pytest.raises(ValueError):
            NCPoly({"xz": 1})

    def test_from_terms_accumulates(self):
        p = CommPoly.from_terms([((1, 1), 2), ((1, 1), -2), ((0, 0), 5)])
        assert p == CommPoly.constant(5)

    def test_equality_and_hash(self):
        assert C("x + y") == C("y + x")
        assert hash(C("x*y")) == hash(C("x*y"))
        assert C("x") != N("x")


class TestCanonicalOrder:
    def test_comm_graded_lex(self):
        p = C("1 + y + x + y^2 + x*y + x^2")
        monos = [m for m, _ in p.sorted_terms()]
        assert monos == [(2, 0), (1, 1), (0, 2), (1, 0), (0, 1), (0, 0)]

    def test_nc_length_then_lex(self):
        p = N("1 + y + x + y*x + x*y + y^2 + x^2")
        words = [w for w, _ in p.sorted_terms()]
        assert words == ["xx", "xy", "yx", "yy", "x", "y", ""]

    def test_leading_data(self):
        assert C("3*x*y^2 + x^2*y - y").leading_monomial() == (2, 1)
        assert N("2*y*x + x*y").leading_word() == "xy"
        assert N("2*y*x + x*y").leading_coeff() == 1
        assert C("x^2 + x*y + y").leading_form() == C("x^2 + x*y")


class TestDegrees:
    def test_zero_degree_raises(self):
        with pytest.raises(DegreeOfZero):
            deg(CommPoly.zero())
        with pytest.raises(DegreeOfZero):
            deg(NCPoly.zero())

    def test_total_degree(self):
        assert deg(C("x^3*y + y^2")) == 4
        assert deg(N("x*y*x + y")) == 3
        assert deg(C("5")) == 0

    def test_weighted_degree(self):
        assert wdeg(C("x*y"), 2, 3) == 5
        assert wdeg(N("x*y + y^3"), 2, 3) == 9
        with pytest.raises(ValueError):
            wdeg(C("x"), 0, 1)


class TestArithmetic:
    def test_noncommutativity_is_real(self):
        assert N("x") * N("y") != N("y") * N("x")
        assert C("x") * C("y") == C("y") * C("x")

    def test_commutator_instance(self):
        assert commutator(N("x"), N("y")) == N("x*y - y*x")
        assert commutator(N("x + y^2"), N("y + x^2")) == N(
            "x*y - y*x + y^2*x^2 - x^2*y^2"
        )
        with pytest.raises(RingMismatch):
            commutator(C("x"), C("y"))

    def test_jacobian_instance(self):
        assert jacobian(C("x^2"), C("y^3")) == C("6*x*y^2")
        assert jacobian(C("x"), C("y")) == C("1")
        with pytest.raises(RingMismatch):
            jacobian(N("x"), N("y"))

    @given(comm_polys, comm_polys, comm_polys)
    @settings(max_examples=40, deadline=None)
    def test_comm_distributivity(self, a, b, c):
        assert (a + b) * c == a * c + b * c

    @given(nc_polys, nc_polys, nc_polys)
    @settings(max_examples=40, deadline=None)
    def test_nc_associativity(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    def test_scalar_division(self):
        assert C("2*x") / 2 == C("x")
        assert (UniPoly((1, 2)) / Fraction(1, 2)).coeffs == (2, 4)

    def test_power_matches_repeated_product(self):
        p = N("x + y*x")
        assert p ** 3 == p * p * p
        assert p ** 0 == NCPoly.one()
        with pytest.raises(ValueError):
            p ** -1


class TestSubstitution:
    def test_order_preserved(self):
        # x -> y, y -> x transposes every word
        p = N("x*y^2")
        image = substitute(p, N("y"), N("x"))
        assert image == N("y*x^2")

    def test_substitution_instance(self):
        p = substitute(N("x*y"), N("x + y^2"), N("y + x^2"))
        assert p == N("x*y + x^3 + y^3 + y^2*x^2")

    @given(nc_polys, nc_polys)
    @settings(max_examples=30, deadline=None)
    def test_nc_homomorphism(self, p, q):
        f, g = N("x + y"), N("y*x")
        left = substitute(p * q, f, g)
        right = substitute(p, f, g) * substitute(q, f, g)
        assert left == right

    @given(comm_polys, comm_polys)
    @settings(max_examples=30, deadline=None)
    def test_comm_homomorphism(self, p, q):
        f, g = C("x - y"), C("x*y")
        assert substitute(p + q, f, g) == substitute(p, f, g) + substitute(q, f, g)

    def test_ring_mixing_rejected(self):
        with pytest.raises(RingMismatch):
            substitute(C("x"), N("x"), N("y"))
        with pytest.raises(RingMismatch):
            same_ring(C("x"), N("x"))


class TestAbelianize:
    def test_instance(self):
        assert abelianize(N("x*y - y*x")) == CommPoly.zero()
        assert abelianize(N("x*y*x + 2*y")) == C("x^2*y + 2*y")

    @given(nc_polys, nc_polys)
    @settings(max_examples=30, deadline=None)
    def test_multiplicative(self, p, q):
        assert abelianize(p * q) == abelianize(p) * abelianize(q)

    def test_commutator_ideal(self):
        assert in_commutator_ideal(N("x*y - y*x"))
        assert in_commutator_ideal(N("x*y*x - x^2*y"))
        assert not in_commutator_ideal(N("x*y"))


class TestDivision:
    def test_exact_division(self):
        ok, q = divides(C("x + y"), C("x^2 - y^2"))
        assert ok and q == C("x - y")

    def test_reject(self):
        ok, q = divides(C("x + y"), C("x^2 + y^2"))
        assert not ok and q is None

    def test_zero_dividend(self):
        ok, q = divides(C("x"), CommPoly.zero())
        assert ok and q == CommPoly.zero()

    def test_zero_divisor(self):
        with pytest.raises(DivisorZero):
            divides(CommPoly.zero(), C("x"))

    @given(comm_polys, comm_polys)
    @settings(max_examples=40, deadline=None)
    def test_product_always_divisible(self, a, b):
        if a.is_zero() or b.is_zero():
            return
        ok, q = divides(a, a * b)
        assert ok and q == b


class TestProportionality:
    def test_found(self):
        assert proportionality(C("2*x + 2*y"), C("x + y")) == 2
        assert proportionality(N("-x*y"), N("3*x*y")) == Fraction(-1, 3)
        assert proportionality(CommPoly.zero(), C("x")) == 0

    def test_absent(self):
        assert proportionality(C("x + y"), C("x")) is None
        with pytest.raises(DivisorZero):
            proportionality(C("x"), CommPoly.zero())


class TestUniPoly:
    def test_trim_and_degree(self):
        assert UniPoly((1, 2, 0, 0)).coeffs == (1, 2)
        assert UniPoly((0, 0, 3)).degree() == 2
        with pytest.raises(DegreeOfZero):
            UniPoly(()).degree()

    def test_compose(self):
        f = UniPoly((1, 0, 1))  # 1 + t^2
        g = UniPoly((0, 2))  # 2t
        assert f.compose(g) == UniPoly((1, 0, 4))

    def test_eval_matches_compose(self):
        f = UniPoly((2, -1, 3))
        assert f.eval_scalar(2) == 2 - 2 + 12

    def test_eval_uni_horner(self):
        f = UniPoly((1, 1, 1))
        r = C("x + y")
        assert eval_uni(f, r) == CommPoly.one() + r + r * r

    def test_eval_uni_nc_keeps_order(self):
        f = UniPoly((0, 0, 1))
        r = N("x + x*y")
        assert eval_uni(f, r) == r * r


class TestHomogeneous:
    def test_components(self):
        p = C("x^2 + x*y + x + 3")
        assert p.homogeneous_component(2) == C("x^2 + x*y")
        assert p.homogeneous_component(1) == C("x")
        assert p.homogeneous_component(5) == CommPoly.zero()
        assert leading_form(N("x*y - y*x + x")) == N("x*y - y*x")


class TestTermBudget:
    def test_budget_enforced(self, monkeypatch):
        monkeypatch.setenv("RETRACTKIT_MAX_TERMS", "4")
        dense = CommPoly({(i, 0): 1 for i in range(4)})
        with pytest.raises(TermBudgetExceeded):
            dense * dense

    def test_bad_budget_value_ignored(self, monkeypatch):
        monkeypatch.setenv("RETRACTKIT_MAX_TERMS", "garbage")
        p = C("x + y")
        assert p * p == C("x^2 + 2*x*y + y^2")
