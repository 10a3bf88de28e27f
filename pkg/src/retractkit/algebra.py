"""Exact sparse polynomial arithmetic in two variables over the rationals.

Two rings are supported: the commutative polynomial ring K[x, y] and the
free associative algebra K<x, y>, both with K the rationals.  Values are
immutable; every operation returns a fresh object.  Commutative monomials
are exponent pairs ``(i, j)``, noncommutative monomials are words over the
two-letter alphabet ``"x"``/``"y"`` stored as plain strings, so that word
concatenation is multiplication.

The canonical term order is graded lexicographic with x > y in the
commutative ring and length-then-lexicographic with x > y in the free
algebra.  Printing, leading forms and all deterministic choices in the
package refer to this order.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from .errors import (
    DegreeOfZero,
    DivisorZero,
    RingMismatch,
    TermBudgetExceeded,
)

Scalar = Fraction
CommMonomial = Tuple[int, int]
Word = str

COMM = "comm"
NONCOMM = "noncomm"

# Words compare through this table so that x ranks above y.
_WORD_ORDER = str.maketrans("xy", "ab")

_DEFAULT_TERM_BUDGET = 200_000


def term_budget() -> int:
    """Support-size cap for intermediate results, from RETRACTKIT_MAX_TERMS."""
    raw = os.environ.get("RETRACTKIT_MAX_TERMS")
    if raw is None:
        return _DEFAULT_TERM_BUDGET
    try:
        value = int(raw)
    except ValueError:
        return _DEFAULT_TERM_BUDGET
    return value if value > 0 else _DEFAULT_TERM_BUDGET


def _guard_support(size: int) -> None:
    cap = term_budget()
    if size > cap:
        raise TermBudgetExceeded(
            f"intermediate support of {size} terms exceeds the cap of {cap}"
        )


def as_scalar(value: Union[int, Fraction]) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not a rational scalar: {value!r}")


def comm_key(mono: CommMonomial) -> Tuple[int, int]:
    """Sort key putting canonically larger commutative monomials first."""
    i, j = mono
    return (-(i + j), -i)


def word_key(word: Word) -> Tuple[int, str]:
    """Sort key putting canonically larger words first."""
    return (-len(word), word.translate(_WORD_ORDER))


class CommPoly:
    """Sparse element of K[x, y] with Fraction coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Dict[CommMonomial, Union[int, Fraction]]] = None):
        clean: Dict[CommMonomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                i, j = mono
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in monomial {mono!r}")
                value = as_scalar(coeff)
                if value:
                    clean[(int(i), int(j))] = value
        self._terms = clean

    @classmethod
    def _raw(cls, terms: Dict[CommMonomial, Fraction]) -> "CommPoly":
        poly = object.__new__(cls)
        poly._terms = terms
        return poly

    @classmethod
    def from_terms(cls, items: Iterable[Tuple[CommMonomial, Union[int, Fraction]]]) -> "CommPoly":
        acc: Dict[CommMonomial, Fraction] = {}
        for mono, coeff in items:
            value = acc.get(mono, Fraction(0)) + as_scalar(coeff)
            if value:
                acc[mono] = value
            else:
                acc.pop(mono, None)
        return cls(acc)

    @classmethod
    def zero(cls) -> "CommPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "CommPoly":
        return cls.constant(1)

    @classmethod
    def constant(cls, value: Union[int, Fraction]) -> "CommPoly":
        value = as_scalar(value)
        return cls._raw({(0, 0): value} if value else {})

    @classmethod
    def x(cls) -> "CommPoly":
        return cls._raw({(1, 0): Fraction(1)})

    @classmethod
    def y(cls) -> "CommPoly":
        return cls._raw({(0, 1): Fraction(1)})

    @classmethod
    def monomial(cls, i: int, j: int, coeff: Union[int, Fraction] = 1) -> "CommPoly":
        return cls({(i, j): coeff})

    @property
    def ring(self) -> str:
        return COMM

    def terms(self) -> Dict[CommMonomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self):
        return self._terms.keys()

    def sorted_terms(self) -> List[Tuple[CommMonomial, Fraction]]:
        return [(m, self._terms[m]) for m in sorted(self._terms, key=comm_key)]

    def coeff(self, mono: CommMonomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant_coeff(self) -> Fraction:
        return self._terms.get((0, 0), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash((COMM, frozenset(self._terms.items())))

    def __neg__(self) -> "CommPoly":
        return CommPoly._raw({m: -c for m, c in self._terms.items()})

    def __add__(self, other) -> "CommPoly":
        if isinstance(other, (int, Fraction)):
            other = CommPoly.constant(other)
        if not isinstance(other, CommPoly):
            return NotImplemented
        acc = dict(self._terms)
        for mono, coeff in other._terms.items():
            value = acc.get(mono, Fraction(0)) + coeff
            if value:
                acc[mono] = value
            else:
                acc.pop(mono, None)
        return CommPoly._raw(acc)

    __radd__ = __add__

    def __sub__(self, other) -> "CommPoly":
        if isinstance(other, (int, Fraction)):
            other = CommPoly.constant(other)
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "CommPoly":
        return (-self) + other

    def __mul__(self, other) -> "CommPoly":
        if isinstance(other, (int, Fraction)):
            value = as_scalar(other)
            if not value:
                return CommPoly.zero()
            return CommPoly._raw({m: c * value for m, c in self._terms.items()})
        if not isinstance(other, CommPoly):
            return NotImplemented
        acc: Dict[CommMonomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                mono = (i1 + i2, j1 + j2)
                value = acc.get(mono, Fraction(0)) + c1 * c2
                if value:
                    acc[mono] = value
                else:
                    acc.pop(mono, None)
            _guard_support(len(acc))
        return CommPoly._raw(acc)

    def __rmul__(self, other) -> "CommPoly":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, scalar) -> "CommPoly":
        value = as_scalar(scalar)
        if not value:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (Fraction(1) / value)

    def __pow__(self, exponent: int) -> "CommPoly":
        return _power(self, exponent, CommPoly.one())

    def degree(self) -> int:
        if not self._terms:
            raise DegreeOfZero("the zero polynomial has no degree")
        return max(i + j for i, j in self._terms)

    def weighted_degree(self, a: int, b: int) -> int:
        if not self._terms:
            raise DegreeOfZero("the zero polynomial has no weighted degree")
        return max(i * a + j * b for i, j in self._terms)

    def leading_monomial(self) -> CommMonomial:
        if not self._terms:
            raise DegreeOfZero("the zero polynomial has no leading monomial")
        return min(self._terms, key=comm_key)

    def leading_coeff(self) -> Fraction:
        return self._terms[self.leading_monomial()]

    def leading_form(self) -> "CommPoly":
        d = self.degree()
        return CommPoly._raw({m: c for m, c in self._terms.items() if m[0] + m[1] == d})

    def homogeneous_component(self, d: int) -> "CommPoly":
        return CommPoly._raw({m: c for m, c in self._terms.items() if m[0] + m[1] == d})

    def partial_x(self) -> "CommPoly":
        acc: Dict[CommMonomial, Fraction] = {}
        for (i, j), c in self._terms.items():
            if i:
                acc[(i - 1, j)] = c * i
        return CommPoly._raw(acc)

    def partial_y(self) -> "CommPoly":
        acc: Dict[CommMonomial, Fraction] = {}
        for (i, j), c in self._terms.items():
            if j:
                acc[(i, j - 1)] = c * j
        return CommPoly._raw(acc)

    def __repr__(self) -> str:
        from .exprio import print_poly

        return f"CommPoly({print_poly(self)!r})"


class NCPoly:
    """Sparse element of the free associative algebra K<x, y>."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Dict[Word, Union[int, Fraction]]] = None):
        clean: Dict[Word, Fraction] = {}
        if terms:
            for word, coeff in terms.items():
                if any(ch not in "xy" for ch in word):
                    raise ValueError(f"word {word!r} uses letters outside x, y")
                value = as_scalar(coeff)
                if value:
                    clean[word] = value
        self._terms = clean

    @classmethod
    def _raw(cls, terms: Dict[Word, Fraction]) -> "NCPoly":
        poly = object.__new__(cls)
        poly._terms = terms
        return poly

    @classmethod
    def from_terms(cls, items: Iterable[Tuple[Word, Union[int, Fraction]]]) -> "NCPoly":
        acc: Dict[Word, Fraction] = {}
        for word, coeff in items:
            value = acc.get(word, Fraction(0)) + as_scalar(coeff)
            if value:
                acc[word] = value
            else:
                acc.pop(word, None)
        return cls(acc)

    @classmethod
    def zero(cls) -> "NCPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "NCPoly":
        return cls.constant(1)

    @classmethod
    def constant(cls, value: Union[int, Fraction]) -> "NCPoly":
        value = as_scalar(value)
        return cls._raw({"": value} if value else {})

    @classmethod
    def x(cls) -> "NCPoly":
        return cls._raw({"x": Fraction(1)})

    @classmethod
    def y(cls) -> "NCPoly":
        return cls._raw({"y": Fraction(1)})

    @classmethod
    def word(cls, word: Word, coeff: Union[int, Fraction] = 1) -> "NCPoly":
        return cls({word: coeff})

    @property
    def ring(self) -> str:
        return NONCOMM

    def terms(self) -> Dict[Word, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self):
        return self._terms.keys()

    def sorted_terms(self) -> List[Tuple[Word, Fraction]]:
        return [(w, self._terms[w]) for w in sorted(self._terms, key=word_key)]

    def coeff(self, word: Word) -> Fraction:
        return self._terms.get(word, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {""}

    def constant_coeff(self) -> Fraction:
        return self._terms.get("", Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash((NONCOMM, frozenset(self._terms.items())))

    def __neg__(self) -> "NCPoly":
        return NCPoly._raw({w: -c for w, c in self._terms.items()})

    def __add__(self, other) -> "NCPoly":
        if isinstance(other, (int, Fraction)):
            other = NCPoly.constant(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        acc = dict(self._terms)
        for word, coeff in other._terms.items():
            value = acc.get(word, Fraction(0)) + coeff
            if value:
                acc[word] = value
            else:
                acc.pop(word, None)
        return NCPoly._raw(acc)

    __radd__ = __add__

    def __sub__(self, other) -> "NCPoly":
        if isinstance(other, (int, Fraction)):
            other = NCPoly.constant(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "NCPoly":
        return (-self) + other

    def __mul__(self, other) -> "NCPoly":
        if isinstance(other, (int, Fraction)):
            value = as_scalar(other)
            if not value:
                return NCPoly.zero()
            return NCPoly._raw({w: c * value for w, c in self._terms.items()})
        if not isinstance(other, NCPoly):
            return NotImplemented
        acc: Dict[Word, Fraction] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                word = w1 + w2
                value = acc.get(word, Fraction(0)) + c1 * c2
                if value:
                    acc[word] = value
                else:
                    acc.pop(word, None)
            _guard_support(len(acc))
        return NCPoly._raw(acc)

    def __rmul__(self, other) -> "NCPoly":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, scalar) -> "NCPoly":
        value = as_scalar(scalar)
        if not value:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (Fraction(1) / value)

    def __pow__(self, exponent: int) -> "NCPoly":
        return _power(self, exponent, NCPoly.one())

    def degree(self) -> int:
        if not self._terms:
            raise DegreeOfZero("the zero polynomial has no degree")
        return max(len(w) for w in self._terms)

    def weighted_degree(self, a: int, b: int) -> int:
        if not self._terms:
            raise DegreeOfZero("the zero polynomial has no weighted degree")
        return max(w.count("x") * a + w.count("y") * b for w in self._terms)

    def leading_word(self) -> Word:
        if not self._terms:
            raise DegreeOfZero("the zero polynomial has no leading word")
        return min(self._terms, key=word_key)

    # Alias so generic code can ask for the leading monomial in either ring.
    leading_monomial = leading_word

    def leading_coeff(self) -> Fraction:
        return self._terms[self.leading_word()]

    def leading_form(self) -> "NCPoly":
        d = self.degree()
        return NCPoly._raw({w: c for w, c in self._terms.items() if len(w) == d})

    def homogeneous_component(self, d: int) -> "NCPoly":
        return NCPoly._raw({w: c for w, c in self._terms.items() if len(w) == d})

    def __repr__(self) -> str:
        from .exprio import print_poly

        return f"NCPoly({print_poly(self)!r})"


Poly = Union[CommPoly, NCPoly]


def _power(base, exponent: int, unit):
    if exponent < 0:
        raise ValueError("negative exponents are not defined here")
    result = unit
    square = base
    k = exponent
    while k:
        if k & 1:
            result = result * square
        k >>= 1
        if k:
            square = square * square
    return result


class UniPoly:
    """Univariate polynomial over the rationals, coefficients stored low to high."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Union[int, Fraction]] = ()):
        values = [as_scalar(c) for c in coeffs]
        while values and not values[-1]:
            values.pop()
        self._coeffs = tuple(values)

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def t(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, value: Union[int, Fraction]) -> "UniPoly":
        return cls((value,))

    @classmethod
    def from_coeff_map(cls, coeffs: Dict[int, Union[int, Fraction]]) -> "UniPoly":
        if not coeffs:
            return cls.zero()
        top = max(coeffs)
        dense = [Fraction(0)] * (top + 1)
        for k, c in coeffs.items():
            dense[k] = as_scalar(c)
        return cls(dense)

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def degree(self) -> int:
        if not self._coeffs:
            raise DegreeOfZero("the zero polynomial has no degree")
        return len(self._coeffs) - 1

    def leading_coeff(self) -> Fraction:
        if not self._coeffs:
            raise DegreeOfZero("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(("uni", self._coeffs))

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self._coeffs))

    def __add__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return UniPoly(tuple(self.coeff(k) + other.coeff(k) for k in range(n)))

    __radd__ = __add__

    def __sub__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "UniPoly":
        return (-self) + other

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            value = as_scalar(other)
            return UniPoly(tuple(c * value for c in self._coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                if b:
                    out[i + j] += a * b
        return UniPoly(out)

    def __rmul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other) -> "UniPoly":
        value = as_scalar(other)
        if not value:
            raise DivisorZero("division by zero scalar")
        return self * (1 / value)

    def __pow__(self, exponent: int) -> "UniPoly":
        return _power(self, exponent, UniPoly.one())

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """Return self evaluated at the univariate polynomial ``inner``."""
        result = UniPoly.zero()
        for c in reversed(self._coeffs):
            result = result * inner + c
        return result

    def eval_scalar(self, value: Union[int, Fraction]) -> Fraction:
        value = as_scalar(value)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def __repr__(self) -> str:
        from .exprio import print_uni

        return f"UniPoly({print_uni(self)!r})"


def ring_of(p: Poly) -> str:
    if isinstance(p, CommPoly):
        return COMM
    if isinstance(p, NCPoly):
        return NONCOMM
    raise TypeError(f"not a ring element: {p!r}")


def same_ring(*polys: Poly) -> str:
    rings = {ring_of(p) for p in polys}
    if len(rings) != 1:
        raise RingMismatch("operands live in different rings")
    return rings.pop()


def zero_like(p: Poly) -> Poly:
    return CommPoly.zero() if isinstance(p, CommPoly) else NCPoly.zero()


def one_like(p: Poly) -> Poly:
    return CommPoly.one() if isinstance(p, CommPoly) else NCPoly.one()


def deg(p: Poly) -> int:
    """Total degree.  Degree of the zero polynomial is an error, not a value."""
    return p.degree()


def wdeg(p: Poly, a: int, b: int) -> int:
    """Weighted degree with weight a on x and b on y; weights must be >= 1."""
    if a < 1 or b < 1:
        raise ValueError("weights must be positive integers")
    return p.weighted_degree(a, b)


def leading_form(p: Poly) -> Poly:
    """Top homogeneous component with respect to total degree."""
    return p.leading_form()


def commutator(f: NCPoly, g: NCPoly) -> NCPoly:
    """f*g - g*f in the free algebra."""
    if not isinstance(f, NCPoly) or not isinstance(g, NCPoly):
        raise RingMismatch("the commutator is a free-algebra operation")
    return f * g - g * f


def jacobian(f: CommPoly, g: CommPoly) -> CommPoly:
    """Determinant of the Jacobian matrix of (f, g) with respect to (x, y)."""
    if not isinstance(f, CommPoly) or not isinstance(g, CommPoly):
        raise RingMismatch("the Jacobian is a commutative-ring operation")
    return f.partial_x() * g.partial_y() - f.partial_y() * g.partial_x()


def substitute(p: Poly, f: Poly, g: Poly) -> Poly:
    """Image of p under the ring map x -> f, y -> g.

    In the free algebra the letters of each word are replaced in order, so
    the map is a homomorphism of the noncommutative ring.
    """
    ring = same_ring(p, f, g)
    if ring == COMM:
        return _substitute_comm(p, f, g)
    return _substitute_nc(p, f, g)


def _substitute_comm(p: CommPoly, f: CommPoly, g: CommPoly) -> CommPoly:
    fpow: Dict[int, CommPoly] = {0: CommPoly.one()}
    gpow: Dict[int, CommPoly] = {0: CommPoly.one()}

    def power_of(cache, base, k):
        if k not in cache:
            cache[k] = power_of(cache, base, k - 1) * base
        return cache[k]

    acc = CommPoly.zero()
    for (i, j), c in p.items():
        acc = acc + power_of(fpow, f, i) * power_of(gpow, g, j) * c
    return acc


def _substitute_nc(p: NCPoly, f: NCPoly, g: NCPoly) -> NCPoly:
    images = {"x": f, "y": g}
    cache: Dict[Word, NCPoly] = {"": NCPoly.one()}

    def image_of(word: Word) -> NCPoly:
        if word not in cache:
            cache[word] = image_of(word[:-1]) * images[word[-1]]
        return cache[word]

    acc = NCPoly.zero()
    for word, c in p.items():
        acc = acc + image_of(word) * c
    return acc


def abelianize(p: NCPoly) -> CommPoly:
    """Image of a free-algebra element in K[x, y] (letters made to commute)."""
    if not isinstance(p, NCPoly):
        raise RingMismatch("abelianize expects a free-algebra element")
    acc: Dict[CommMonomial, Fraction] = {}
    for word, c in p.items():
        mono = (word.count("x"), word.count("y"))
        value = acc.get(mono, Fraction(0)) + c
        if value:
            acc[mono] = value
        else:
            acc.pop(mono, None)
    return CommPoly._raw(acc)


def in_commutator_ideal(p: NCPoly) -> bool:
    """Whether p lies in the two-sided ideal generated by all commutators."""
    return abelianize(p).is_zero()


def divides(d: CommPoly, p: CommPoly) -> Tuple[bool, Optional[CommPoly]]:
    """Exact commutative division: returns (True, q) with p = d*q, or (False, None)."""
    if not isinstance(d, CommPoly) or not isinstance(p, CommPoly):
        raise RingMismatch("divisibility is tested in the commutative ring")
    if d.is_zero():
        raise DivisorZero("division by the zero polynomial")
    if p.is_zero():
        return True, CommPoly.zero()
    lead = d.leading_monomial()
    lead_c = d.leading_coeff()
    quotient: Dict[CommMonomial, Fraction] = {}
    rem = p
    while not rem.is_zero():
        (ri, rj) = rem.leading_monomial()
        qi, qj = ri - lead[0], rj - lead[1]
        if qi < 0 or qj < 0:
            return False, None
        c = rem.leading_coeff() / lead_c
        quotient[(qi, qj)] = c
        rem = rem - d * CommPoly._raw({(qi, qj): c})
    return True, CommPoly._raw(quotient)


def eval_uni(f: UniPoly, r: Poly) -> Poly:
    """Evaluate a univariate polynomial at a ring element (Horner scheme)."""
    acc = zero_like(r)
    for c in reversed(f.coeffs):
        acc = acc * r + c
    return acc


def proportionality(p: Poly, q: Poly) -> Optional[Fraction]:
    """Scalar c with p = c*q, or None.  q must be nonzero."""
    if q.is_zero():
        raise DivisorZero("proportionality against the zero polynomial")
    if p.is_zero():
        return Fraction(0)
    c = p.coeff(q.leading_monomial()) / q.leading_coeff()
    if (p - q * c).is_zero():
        return c
    return None
