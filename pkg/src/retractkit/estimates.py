"""Lower bounds for degrees of substituted polynomials.

Substituting a pair (f, g) into a two-variable element p can cancel
leading terms, but not arbitrarily: when f and g interact weakly enough,
deg p(f, g) is bounded below by a fraction of the weighted degree of p
with weights (deg f, deg g).  The two rings carry different interaction
measures, the commutator of the pair and the Jacobian determinant, and
the bound degrades as that measure drops below its generic degree.

Checks return a report with the computed bound next to the actual
degree, so a violated inequality is observable rather than asserted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple

from .algebra import (
    COMM,
    NONCOMM,
    CommPoly,
    NCPoly,
    Poly,
    commutator,
    jacobian,
    leading_form,
    ring_of,
    same_ring,
    substitute,
    wdeg,
)
from .endo import Endo, is_injective
from .errors import PreconditionViolated
from .exprio import print_poly

MIXED_MONOMIAL = "mixed_monomial"
PURE_POWERS = "pure_powers"

CASE_INDEPENDENT = "independent"
CASE_NONDIVISIBLE = "dependent_nondivisible"
CASE_REDUCED = "reduced"

# Test seam: added verbatim to every computed lower bound.  Nonzero values
# let a caller observe how a wrong bound surfaces as a failed report.
_bound_excess: Fraction = Fraction(0)


def _set_bound_excess(value) -> None:
    global _bound_excess
    _bound_excess = Fraction(value)


@dataclass(frozen=True)
class OrankWitness:
    """Syntactic evidence that p genuinely uses both variables.

    Either a single monomial containing x and y, or a pair of pure
    powers x^i, y^j with i, j >= 2.  Presence is required by the
    commutator-side check; it does not by itself rule out p being a
    one-variable element in disguise.
    """

    kind: str
    monomials: Tuple[str, ...]


def orank_witness(p: Poly) -> Optional[OrankWitness]:
    if isinstance(p, CommPoly):
        best_x = best_y = 0
        for (i, j) in p.support():
            if i and j:
                return OrankWitness(MIXED_MONOMIAL, (f"x^{i}*y^{j}",))
            best_x = max(best_x, i) if not j else best_x
            best_y = max(best_y, j) if not i else best_y
        if best_x >= 2 and best_y >= 2:
            return OrankWitness(PURE_POWERS, (f"x^{best_x}", f"y^{best_y}"))
        return None
    best_x = best_y = 0
    for word in p.support():
        if "x" in word and "y" in word:
            return OrankWitness(MIXED_MONOMIAL, (word,))
        if word and word[0] == "x":
            best_x = max(best_x, len(word))
        elif word:
            best_y = max(best_y, len(word))
    if best_x >= 2 and best_y >= 2:
        return OrankWitness(PURE_POWERS, ("x" * best_x, "y" * best_y))
    return None


@dataclass(frozen=True)
class EstimateReport:
    ring: str
    actual_degree: int
    lower_bound: Fraction
    precondition_case: str

    @property
    def excess(self) -> Fraction:
        return self.actual_degree - self.lower_bound

    @property
    def satisfied(self) -> bool:
        return self.actual_degree >= self.lower_bound

    @property
    def strict(self) -> bool:
        return self.actual_degree > self.lower_bound


def _noncomm_case(f: NCPoly, g: NCPoly) -> str:
    if not commutator(leading_form(f), leading_form(g)).is_zero():
        return CASE_INDEPENDENT
    m, n = f.degree(), g.degree()
    if m % n and n % m:
        return CASE_NONDIVISIBLE
    raise PreconditionViolated(
        "leading forms commute and one image degree divides the other"
    )


def bound_noncomm(f: NCPoly, g: NCPoly, p: NCPoly) -> Fraction:
    """Lower bound for deg p(f, g) in the free algebra.

    Needs [f, g] != 0 and either noncommuting leading forms or mutually
    nondividing image degrees, plus a two-variable witness in p.
    """
    return _bound_noncomm_cased(f, g, p)[0]


def _bound_noncomm_cased(f: NCPoly, g: NCPoly, p: NCPoly) -> Tuple[Fraction, str]:
    same_ring(f, g, p)
    if ring_of(p) != NONCOMM:
        raise PreconditionViolated("free-algebra inputs required")
    if orank_witness(p) is None:
        raise PreconditionViolated("p carries no two-variable witness")
    bracket = commutator(f, g)
    if bracket.is_zero():
        raise PreconditionViolated("f and g commute")
    case = _noncomm_case(f, g)
    m, n = f.degree(), g.degree()
    ratio = Fraction(bracket.degree(), m + n)
    return ratio * wdeg(p, m, n) + _bound_excess, case


def check_commutator_bound(f: NCPoly, g: NCPoly, p: NCPoly) -> EstimateReport:
    bound, case = _bound_noncomm_cased(f, g, p)
    actual = substitute(p, f, g).degree()
    return EstimateReport(NONCOMM, actual, bound, case)


def bound_comm(f: CommPoly, g: CommPoly, p: CommPoly) -> Fraction:
    """Lower bound for deg p(f, g) in the polynomial ring; needs J(f, g) != 0."""
    same_ring(f, g, p)
    if ring_of(p) != COMM:
        raise PreconditionViolated("polynomial-ring inputs required")
    jac = jacobian(f, g)
    if jac.is_zero():
        raise PreconditionViolated("f and g have vanishing Jacobian")
    m, n = f.degree(), g.degree()
    slack = m + n - jac.degree() - 2
    factor = 1 - Fraction(gcd(m, n) * slack, m * n)
    return factor * wdeg(p, m, n) + _bound_excess


def check_jacobian_bound(f: CommPoly, g: CommPoly, p: CommPoly) -> EstimateReport:
    bound = bound_comm(f, g, p)
    actual = substitute(p, f, g).degree()
    return EstimateReport(COMM, actual, bound, CASE_REDUCED)


def growth_noncomm(phi: Endo, k_max: int) -> List[Tuple[int, int]]:
    """Degrees of the image-pair commutator along iterates of phi.

    Entry k is (k, deg [phi^k(x), phi^k(y)]).  Injectivity keeps every
    commutator nonzero; for a non-automorphism the degrees must climb.
    """
    if phi.ring != NONCOMM:
        raise PreconditionViolated("free-algebra endomorphism required")
    if not is_injective(phi):
        raise PreconditionViolated("iterate commutators vanish for noninjective maps")
    if k_max < 0:
        raise PreconditionViolated("iteration count must be nonnegative")
    u, v = NCPoly.x(), NCPoly.y()
    out: List[Tuple[int, int]] = []
    for k in range(k_max + 1):
        out.append((k, commutator(u, v).degree()))
        if k < k_max:
            u = substitute(u, phi.fx, phi.fy)
            v = substitute(v, phi.fx, phi.fy)
    return out


def growth_comm(phi: Endo, k_max: int) -> List[Tuple[int, int]]:
    """Degrees of the image-pair Jacobian along iterates of phi."""
    if phi.ring != COMM:
        raise PreconditionViolated("polynomial-ring endomorphism required")
    if not is_injective(phi):
        raise PreconditionViolated("iterate Jacobians vanish for noninjective maps")
    if k_max < 0:
        raise PreconditionViolated("iteration count must be nonnegative")
    u, v = CommPoly.x(), CommPoly.y()
    out: List[Tuple[int, int]] = []
    for k in range(k_max + 1):
        out.append((k, jacobian(u, v).degree()))
        if k < k_max:
            u = substitute(u, phi.fx, phi.fy)
            v = substitute(v, phi.fx, phi.fy)
    return out


@dataclass(frozen=True)
class FuzzRecord:
    f: str
    g: str
    p: str
    case: str
    lower_bound: Fraction
    actual_degree: int

    @property
    def excess(self) -> Fraction:
        return self.actual_degree - self.lower_bound

    @property
    def satisfied(self) -> bool:
        return self.actual_degree >= self.lower_bound


@dataclass(frozen=True)
class FuzzSummary:
    ring: str
    completed: int
    rejected: int
    records: Tuple[FuzzRecord, ...]

    @property
    def failures(self) -> Tuple[FuzzRecord, ...]:
        return tuple(r for r in self.records if not r.satisfied)

    @property
    def all_satisfied(self) -> bool:
        return not self.failures

    @property
    def min_excess(self) -> Optional[Fraction]:
        if not self.records:
            return None
        return min(r.excess for r in self.records)

    @property
    def strict_count(self) -> int:
        return sum(1 for r in self.records if r.actual_degree > r.lower_bound)


def _random_comm(rng, max_deg, coeff_bound, max_support, mixed):
    monomials = [
        (i, j)
        for i in range(max_deg + 1)
        for j in range(max_deg + 1 - i)
        if i + j
    ]
    while True:
        size = rng.randint(1, max_support)
        terms = {}
        if mixed:
            pool = [(i, j) for (i, j) in monomials if i and j]
            terms[rng.choice(pool)] = Fraction(_nonzero(rng, coeff_bound))
        while len(terms) < size:
            terms[rng.choice(monomials)] = Fraction(_nonzero(rng, coeff_bound))
        p = CommPoly(terms)
        if not p.is_constant():
            return p


def _random_nc(rng, max_deg, coeff_bound, max_support, mixed):
    words = []
    frontier = [""]
    for _ in range(max_deg):
        frontier = [w + c for w in frontier for c in "xy"]
        words.extend(frontier)
    while True:
        size = rng.randint(1, max_support)
        terms = {}
        if mixed:
            pool = [w for w in words if "x" in w and "y" in w]
            terms[rng.choice(pool)] = Fraction(_nonzero(rng, coeff_bound))
        while len(terms) < size:
            terms[rng.choice(words)] = Fraction(_nonzero(rng, coeff_bound))
        p = NCPoly(terms)
        if not p.is_constant():
            return p


def _nonzero(rng, bound: int) -> int:
    value = rng.randint(1, bound)
    return value if rng.random() < 0.5 else -value

def fuzz_estimates(
    ring: str,
    trials: int,
    seed: int = 0,
    max_deg: int = 3,
    coeff_bound: int = 3,
    max_support: int = 5,
) -> FuzzSummary:
    """Run seeded bound checks on random instances meeting the preconditions.

    Draws that miss a precondition are counted as rejected and redrawn, so
    ``completed`` reports land in the summary; the attempt budget caps the
    redraws in case the precondition were to become unreachable.
    """
    rng = random.Random(seed)
    sampler = _random_comm if ring == COMM else _random_nc
    checker = check_jacobian_bound if ring == COMM else check_commutator_bound
    records: List[FuzzRecord] = []
    rejected = 0
    attempts = 0
    budget = max(50 * trials, 1000)
    while len(records) < trials and attempts < budget:
        attempts += 1
        f = sampler(rng, max_deg, coeff_bound, max_support, mixed=False)
        g = sampler(rng, max_deg, coeff_bound, max_support, mixed=False)
        p = sampler(rng, max_deg, coeff_bound, max_support, mixed=True)
        try:
            report = checker(f, g, p)
        except PreconditionViolated:
            rejected += 1
            continue
        records.append(
            FuzzRecord(
                print_poly(f),
                print_poly(g),
                print_poly(p),
                report.precondition_case,
                report.lower_bound,
                report.actual_degree,
            )
        )
    return FuzzSummary(ring, len(records), rejected, tuple(records))
