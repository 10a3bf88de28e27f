"""Retracts generated by a single element, and how to find them.

A proper retract in rank two is the scalars together with everything
generated by one element w, and a retraction onto it is determined by
univariate polynomials A, B through x -> A(w), y -> B(w); idempotence
collapses to the single equation w(A(t), B(t)) = t.  In the free algebra
A(w) and B(w) commute, so the same equation governs both rings once a
free generator is replaced by its commutative shadow.

The module supplies the pieces a certifier needs: exact membership of a
polynomial in the subring generated by one element, extraction of the
inner element of a functional decomposition at a prescribed degree, a
bounded search for (A, B), and verification that a claimed retraction
really is one, with its generator recovered rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import (
    COMM,
    NONCOMM,
    CommPoly,
    NCPoly,
    Poly,
    UniPoly,
    abelianize,
    comm_key,
    divides,
    eval_uni,
    one_like,
    ring_of,
    same_ring,
    word_key,
    zero_like,
)
from .endo import Endo, apply, compose, is_idempotent, is_identity, power
from .errors import (
    ConstantGenerator,
    GeneratorNotFound,
    IdentityImproper,
    InvalidDegree,
    NotFoundWithinBound,
    NotIdempotent,
    PreconditionViolated,
)

# Probe order for free constant choices; earlier entries win ties.
SCAN_VALUES: Tuple[Fraction, ...] = (
    Fraction(0),
    Fraction(1),
    Fraction(-1),
    Fraction(2),
    Fraction(-2),
    Fraction(3),
    Fraction(-3),
    Fraction(1, 2),
    Fraction(-1, 2),
)


def membership(p: Poly, r: Poly) -> Optional[UniPoly]:
    """Express p as u(r) for univariate u, or None if p is outside K[r].

    Peels leading forms: the top of u(r) is forced, so each step either
    pins one coefficient of u or rules the representation out.
    """
    same_ring(p, r)
    if r.is_constant():
        raise ConstantGenerator("membership needs a nonconstant generator")
    d = r.degree()
    coeffs: Dict[int, Fraction] = {}
    rest = p
    while not rest.is_zero():
        if rest.is_constant():
            coeffs[0] = rest.constant_coeff()
            break
        n = rest.degree()
        if n % d:
            return None
        k = n // d
        c = _leading_ratio(rest, r, k)
        if c is None:
            return None
        coeffs[k] = c
        rest = rest - (r ** k) * c
        if not rest.is_zero() and not rest.is_constant() and rest.degree() >= n:
            return None
    return UniPoly.from_coeff_map(coeffs)


def _leading_ratio(p: Poly, r: Poly, k: int) -> Optional[Fraction]:
    from .algebra import leading_form, proportionality

    return proportionality(leading_form(p), leading_form(r) ** k)


def homogeneous_root(h: Poly, k: int) -> Optional[Poly]:
    """Monic u with u^k = h, for monic homogeneous h; None if there is none.

    Works top down: the leading term of u is forced, and each further
    term of u is read off the leading term of the residual h - u^k.
    """
    if k < 1:
        raise InvalidDegree("root exponent must be positive")
    if h.is_zero() or h.leading_coeff() != 1:
        return None
    degrees = {sum(m) if isinstance(m, tuple) else len(m) for m in h.support()}
    if len(degrees) != 1:
        return None
    n = h.degree()
    if n % k:
        return None
    if k == 1:
        return h
    if ring_of(h) == COMM:
        return _root_comm(h, k)
    return _root_nc(h, k)


def _root_comm(h: CommPoly, k: int) -> Optional[CommPoly]:
    i0, j0 = h.leading_monomial()
    if i0 % k or j0 % k:
        return None
    lead = (i0 // k, j0 // k)
    u = CommPoly({lead: Fraction(1)})
    base = ((k - 1) * lead[0], (k - 1) * lead[1])
    last_key = comm_key(lead)
    while True:
        residual = h - u ** k
        if residual.is_zero():
            return u
        top = residual.leading_monomial()
        mono = (top[0] - base[0], top[1] - base[1])
        if mono[0] < 0 or mono[1] < 0:
            return None
        if comm_key(mono) <= last_key:
            return None
        last_key = comm_key(mono)
        u = u + CommPoly({mono: residual.leading_coeff() / k})


def _root_nc(h: NCPoly, k: int) -> Optional[NCPoly]:
    lead_word = h.leading_word()
    d = len(lead_word) // k
    block = lead_word[:d]
    if block * k != lead_word:
        return None
    u = NCPoly({block: Fraction(1)})
    prefix = block * (k - 1)
    last_key = word_key(block)
    while True:
        residual = h - u ** k
        if residual.is_zero():
            return u
        top = residual.leading_word()
        if not top.startswith(prefix):
            return None
        word = top[len(prefix):]
        if len(word) != d or word_key(word) <= last_key:
            return None
        last_key = word_key(word)
        u = u + NCPoly({word: residual.leading_coeff()})


@dataclass(frozen=True)
class DecompositionResult:
    """p = outer(inner) with the inner element normalized."""

    outer: UniPoly
    inner: Poly

    @property
    def ring(self) -> str:
        return ring_of(self.inner)


def decompose_inner(p: Poly, d: int) -> Optional[DecompositionResult]:
    """Find u, r with p = u(r), deg r = d, r monic with zero constant term.

    The inner element in that normalization is unique per degree, so a
    None return at every divisor of deg p is a proof of indecomposability
    rather than a search giving up.
    """
    if d < 1:
        raise InvalidDegree("inner degree must be positive")
    if p.is_constant():
        raise InvalidDegree("constant polynomials have no inner element")
    n = p.degree()
    if d > n:
        raise InvalidDegree("inner degree exceeds the degree of p")
    if n % d:
        return None
    k = n // d
    lead = p.leading_coeff()
    if k == 1:
        const = p.constant_coeff()
        inner = (p - const) / lead
        outer = UniPoly.from_coeff_map({1: lead, 0: const})
        return DecompositionResult(outer, inner)
    top = homogeneous_root(p.leading_form() / lead, k)
    if top is None:
        return None
    r = top
    coeffs: Dict[int, Fraction] = {k: lead}
    cutoff = d * (k - 1)
    for e in range(n - 1, -1, -1):
        target = _graded_gap(p, coeffs, r, e)
        if e > cutoff:
            if target.is_zero():
                continue
            rho = _solve_layer(top, k, target / lead, e - cutoff)
            if rho is None:
                return None
            r = r + rho
        elif e % d == 0:
            i = e // d
            if target.is_zero():
                continue
            if i == 0:
                if not target.is_constant():
                    return None
                coeffs[0] = target.constant_coeff()
                continue
            from .algebra import proportionality

            c = proportionality(target, top ** i)
            if c is None:
                return None
            coeffs[i] = c
        elif not target.is_zero():
            return None
    outer = UniPoly.from_coeff_map(coeffs)
    if eval_uni(outer, r) != p:
        return None
    return DecompositionResult(outer, r)


def _graded_gap(p: Poly, coeffs: Dict[int, Fraction], r: Poly, e: int) -> Poly:
    approx = zero_like(p)
    for i, c in coeffs.items():
        approx = approx + (r ** i) * c
    return (p - approx).homogeneous_component(e)


def _solve_layer(top: Poly, k: int, rhs: Poly, m: int) -> Optional[Poly]:
    """Homogeneous rho of degree m with sum_i top^i rho top^(k-1-i) = rhs."""
    if ring_of(top) == COMM:
        ok, quotient = divides(top ** (k - 1) * Fraction(k), rhs)
        return quotient if ok else None
    powers = [top ** i for i in range(k)]
    basis = _words_of_length(m)
    columns = []
    for word in basis:
        probe = NCPoly({word: Fraction(1)})
        image = zero_like(top)
        for i in range(k):
            image = image + powers[i] * probe * powers[k - 1 - i]
        columns.append(dict(image.items()))
    solution = _solve_linear(columns, dict(rhs.items()))
    if solution is None:
        return None
    return NCPoly({w: c for w, c in zip(basis, solution) if c})


def _words_of_length(m: int) -> List[str]:
    words = [""]
    for _ in range(m):
        words = [w + letter for w in words for letter in "xy"]
    return sorted(words)


def _solve_linear(
    columns: Sequence[Dict], rhs: Dict
) -> Optional[List[Fraction]]:
    """Exact solve of sum_j x_j * columns[j] = rhs; free unknowns go to zero."""
    rows = sorted(set().union(rhs, *columns))
    index = {row: t for t, row in enumerate(rows)}
    width = len(columns)
    matrix = [[Fraction(0)] * (width + 1) for _ in rows]
    for j, col in enumerate(columns):
        for row, value in col.items():
            matrix[index[row]][j] = value
    for row, value in rhs.items():
        matrix[index[row]][width] = value
    pivots: List[Tuple[int, int]] = []
    rank = 0
    for col in range(width):
        pivot = next(
            (t for t in range(rank, len(matrix)) if matrix[t][col]), None
        )
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        head = matrix[rank][col]
        matrix[rank] = [v / head for v in matrix[rank]]
        for t in range(len(matrix)):
            if t != rank and matrix[t][col]:
                factor = matrix[t][col]
                matrix[t] = [
                    v - factor * w for v, w in zip(matrix[t], matrix[rank])
                ]
        pivots.append((rank, col))
        rank += 1
    for t in range(rank, len(matrix)):
        if matrix[t][width]:
            return None
    result = [Fraction(0)] * width
    for row, col in pivots:
        result[col] = matrix[row][width]
    return result


@dataclass(frozen=True)
class RetractionPower:
    exponent: int
    retraction: Endo
    certificate: "RetractionCertificate"


def find_retraction_power(phi: Endo, p: Poly, m_max: int = 64) -> RetractionPower:
    """Smallest m <= m_max with phi^m idempotent, for phi fixing p.

    Constant p is rejected: every endomorphism fixes constants, so they
    carry no information about phi.
    """
    same_ring(phi.fx, p)
    if p.is_constant():
        raise PreconditionViolated("fixed element must be nonconstant")
    if apply(phi, p) != p:
        raise PreconditionViolated("phi does not fix the supplied element")
    current = phi
    for m in range(1, m_max + 1):
        if is_idempotent(current):
            return RetractionPower(m, current, verify_retraction(current))
        current = compose(current, phi)
    raise NotFoundWithinBound(f"no idempotent power with exponent <= {m_max}")


@dataclass(frozen=True)
class RetractionCertificate:
    """Verified shape of a retraction: both images inside K[generator]."""

    ring: str
    trivial: bool
    generator: Optional[Poly]
    image_x: Optional[UniPoly]
    image_y: Optional[UniPoly]


def verify_retraction(pi: Endo) -> RetractionCertificate:
    """Check idempotence and recover the single generator of the image."""
    if not is_idempotent(pi):
        raise NotIdempotent("the map is not equal to its own square")
    if is_identity(pi):
        raise IdentityImproper("the identity is not a proper retraction")
    u, v = pi.fx, pi.fy
    if u.is_constant() and v.is_constant():
        return RetractionCertificate(pi.ring, True, None, None, None)
    candidates = [w for w in (u, v) if not w.is_constant()]
    candidates.sort(key=lambda w: w.degree())
    w = candidates[0]
    for d in _divisors(w.degree()):
        found = decompose_inner(w, d)
        if found is None:
            continue
        r = found.inner
        if apply(pi, r) != r:
            continue
        ux = membership(u, r)
        uy = membership(v, r)
        if ux is None or uy is None:
            continue
        return RetractionCertificate(pi.ring, False, r, ux, uy)
    raise GeneratorNotFound("image is not generated by any inner element")


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class RetractionSearch:
    """Outcome of a bounded hunt for a retraction fixing one element.

    ``complete`` records whether every branch within the degree bound was
    decided; a False means a miss proves nothing.
    """

    retraction: Optional[Endo]
    image_x: Optional[UniPoly]
    image_y: Optional[UniPoly]
    complete: bool

    @property
    def found(self) -> bool:
        return self.retraction is not None


def search_retraction_for(w: Poly, deg_bound: int = 6) -> Optional[Endo]:
    return search_retraction_detailed(w, deg_bound).retraction


def search_retraction_detailed(w: Poly, deg_bound: int = 6) -> RetractionSearch:
    """Look for univariate A, B with w(A(t), B(t)) = t, up to deg_bound.

    Success yields the retraction x -> A(w), y -> B(w), which fixes w.
    In the free algebra the substituted images commute, so the equation
    only sees the commutative shadow of w.
    """
    if w.is_constant():
        raise ConstantGenerator("retraction targets must be nonconstant")
    if ring_of(w) == NONCOMM:
        shadow = abelianize(w)
        if shadow.is_constant():
            return RetractionSearch(None, None, None, True)
    else:
        shadow = w
    pair, complete = _search_pair(shadow, deg_bound)
    if pair is None:
        return RetractionSearch(None, None, None, complete)
    a_poly, b_poly = pair
    pi = Endo(ring_of(w), eval_uni(a_poly, w), eval_uni(b_poly, w))
    return RetractionSearch(pi, a_poly, b_poly, complete)


def _search_pair(
    w: CommPoly, deg_bound: int
) -> Tuple[Optional[Tuple[UniPoly, UniPoly]], bool]:
    complete = True
    for swapped in (False, True):
        pair, branch_complete = _constant_branch(w, swapped)
        complete = complete and branch_complete
        if pair is not None:
            return pair, complete
    cells = sorted(
        ((a, b) for a in range(1, deg_bound + 1) for b in range(1, deg_bound + 1)),
        key=lambda ab: (ab[0] + ab[1], ab[0]),
    )
    for a, b in cells:
        weighted = {(i, j): a * i + b * j for (i, j) in w.support()}
        top = max(weighted.values())
        if top > 1:
            tops = [m for m, value in weighted.items() if value == top]
            if len(tops) == 1:
                continue
            if not _top_has_rational_root(w, tops, a, b):
                continue
        pair, decided = _ansatz_cell(w, a, b)
        if pair is not None:
            return pair, complete
        complete = complete and decided
    return None, complete


def _coefficient_slices(w: CommPoly, on_second: bool) -> Dict[int, UniPoly]:
    slices: Dict[int, Dict[int, Fraction]] = {}
    for (i, j), c in w.items():
        outer, inner = (j, i) if on_second else (i, j)
        slices.setdefault(outer, {})[inner] = c
    return {k: UniPoly.from_coeff_map(v) for k, v in slices.items()}


def _constant_branch(
    w: CommPoly, swapped: bool
) -> Tuple[Optional[Tuple[UniPoly, UniPoly]], bool]:
    """Solutions with the second image constant (or the first, swapped).

    With y frozen at beta the equation collapses to w(A(t), beta) = t, so
    w(s, beta) must be affine in s; the conditions on beta are the
    vanishing of every higher slice, solvable exactly over the rationals.
    """
    slices = _coefficient_slices(w, on_second=swapped)
    linear = slices.get(1, UniPoly.zero())
    offset = slices.get(0, UniPoly.zero())
    if linear.is_zero():
        return None, True
    conditions = [
        poly for k, poly in slices.items() if k >= 2 and not poly.is_zero()
    ]
    if any(cond.degree() == 0 for cond in conditions):
        return None, True
    if conditions:
        candidates = [
            beta
            for beta in _rational_roots(conditions[0])
            if all(cond.eval_scalar(beta) == 0 for cond in conditions[1:])
            and linear.eval_scalar(beta) != 0
        ]
        if not candidates:
            return None, True
        beta = candidates[0]
    else:
        beta = next(
            (v for v in SCAN_VALUES if linear.eval_scalar(v) != 0), None
        )
        if beta is None:
            return None, False
    slope = linear.eval_scalar(beta)
    shift = offset.eval_scalar(beta)
    varying = (UniPoly.t() - shift) / slope
    fixed = UniPoly.constant(beta)
    return ((fixed, varying) if swapped else (varying, fixed)), True


def _top_has_rational_root(
    w: CommPoly, tops: List[Tuple[int, int]], a: int, b: int
) -> bool:
    """Can the weighted-top coefficients cancel for nonzero leading values?

    On the top line the leading coefficients enter only through the ratio
    u = lam^(b/g) / mu^(a/g), and any nonzero rational u lifts back to
    rational lam, mu because the reduced exponents are coprime.
    """
    from math import gcd

    g = gcd(a, b)
    a_red, b_red = a // g, b // g
    anchor = max(tops)
    coeffs: Dict[int, Fraction] = {}
    for (i, j) in tops:
        step, rem = divmod(anchor[0] - i, b_red)
        if rem:
            return False
        coeffs[step] = w.coeff((i, j))
    poly = UniPoly.from_coeff_map(coeffs)
    return any(root != 0 for root in _rational_roots(poly))


def _ansatz_cell(
    w: CommPoly, a: int, b: int
) -> Tuple[Optional[Tuple[UniPoly, UniPoly]], bool]:
    """Solve for A, B of exact shape (deg a, deg b) with a symbolic solver.

    Returns (pair, decided); decided is False when the solver failed or
    produced only branches this code cannot certify rational.
    """
    import sympy

    t = sympy.Symbol("t")
    a_syms = sympy.symbols(f"a0:{a + 1}")
    b_syms = sympy.symbols(f"b0:{b + 1}")
    a_expr = sum(s * t ** k for k, s in enumerate(a_syms))
    b_expr = sum(s * t ** k for k, s in enumerate(b_syms))
    expr = -t
    for (i, j), c in w.items():
        expr += sympy.Rational(c.numerator, c.denominator) * a_expr ** i * b_expr ** j
    equations = sympy.Poly(sympy.expand(expr), t).all_coeffs()
    unknowns = list(a_syms) + list(b_syms)
    try:
        solutions = sympy.solve(equations, unknowns, dict=True)
    except Exception:
        return None, False
    if not solutions:
        return None, True
    rejected = False
    for solution in solutions:
        values = []
        usable = True
        for sym in unknowns:
            value = sympy.simplify(solution.get(sym, sympy.Integer(0)))
            if value.free_symbols:
                value = value.subs({s: 0 for s in value.free_symbols})
                value = sympy.simplify(value)
            if not value.is_rational:
                usable = False
                break
            value = sympy.nsimplify(value, rational=True)
            values.append(Fraction(int(value.p), int(value.q)))
        if not usable:
            rejected = True
            continue
        a_poly = UniPoly(values[: a + 1])
        b_poly = UniPoly(values[a + 1:])
        if _eval_pair(w, a_poly, b_poly) == UniPoly.t():
            return (a_poly, b_poly), True
        rejected = True
    return None, not rejected


def _eval_pair(w: CommPoly, a_poly: UniPoly, b_poly: UniPoly) -> UniPoly:
    a_powers = {0: UniPoly.one()}
    b_powers = {0: UniPoly.one()}
    total = UniPoly.zero()
    for (i, j), c in w.items():
        if i not in a_powers:
            a_powers[i] = a_poly ** i
        if j not in b_powers:
            b_powers[j] = b_poly ** j
        total = total + a_powers[i] * b_powers[j] * c
    return total


def canonical_form_check(r: Poly) -> bool:
    """True when r = x + w with every term of w involving y."""
    if ring_of(r) == COMM:
        w = r - CommPoly.x()
        return all(j >= 1 for (_, j) in w.support())
    w = r - NCPoly.x()
    return all("y" in word for word in w.support())


def _rational_roots(u: UniPoly) -> List[Fraction]:
    """All rational roots of a nonzero univariate polynomial, sorted.

    Order is by magnitude with the positive root of a pair first, so
    probing candidates is deterministic.
    """
    coeffs = list(u.coeffs)
    if not coeffs:
        raise PreconditionViolated("the zero polynomial has every root")
    roots: List[Fraction] = []
    low = next(k for k, c in enumerate(coeffs) if c)
    if low:
        roots.append(Fraction(0))
        coeffs = coeffs[low:]
    if len(coeffs) > 1:
        scale = 1
        for c in coeffs:
            scale = scale * c.denominator // _gcd(scale, c.denominator)
        ints = [int(c * scale) for c in coeffs]
        first, last = abs(ints[0]), abs(ints[-1])
        seen = set()
        for num in _divisors_of(first):
            for den in _divisors_of(last):
                for sign in (1, -1):
                    cand = Fraction(sign * num, den)
                    if cand in seen:
                        continue
                    seen.add(cand)
                    if u.eval_scalar(cand) == 0:
                        roots.append(cand)
    roots.sort(key=lambda value: (abs(value), value < 0))
    return roots


def _gcd(a: int, b: int) -> int:
    from math import gcd

    return gcd(a, b)


def _divisors_of(n: int) -> List[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)
