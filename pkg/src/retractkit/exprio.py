"""Parsing and canonical printing of ring elements.

The accepted grammar is deliberately small:

    expr     := ['-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' nat)?
    base     := rational | variable | '(' expr ')'
    rational := nat ('/' posnat)?

There is no implicit multiplication and no general division; '/' only
occurs inside a rational literal.  A unary minus is allowed at the head of
an expression and directly after '(' and nowhere else.  Rejections raise
ParseError with the character offset.

Printing emits terms in the canonical monomial order, and parsing the
printed form always returns an equal polynomial.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .algebra import COMM, NONCOMM, CommPoly, NCPoly, Poly, UniPoly
from .errors import ParseError

_TOKEN_SINGLE = set("+-*^()/")


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind: str, text: str, pos: int):
        self.kind = kind
        self.text = text
        self.pos = pos


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("num", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            tokens.append(_Token("name", text[i:j], i))
            i = j
            continue
        if ch in _TOKEN_SINGLE:
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    """Recursive-descent evaluator over a fixed variable environment."""

    def __init__(self, tokens: List[_Token], env: Dict[str, object], const):
        self.tokens = tokens
        self.pos = 0
        self.env = env
        self.const = const

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text or 'end of input'!r}", tok.pos)
        return self.advance()

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return value

    def expr(self):
        negate = False
        if self.peek().kind == "-":
            self.advance()
            negate = True
        value = self.term()
        if negate:
            value = -value
        while True:
            tok = self.peek()
            if tok.kind == "+":
                self.advance()
                value = value + self.term()
            elif tok.kind == "-":
                self.advance()
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.factor()
        while self.peek().kind == "*":
            self.advance()
            value = value * self.factor()
        return value

    def factor(self):
        value = self.base()
        if self.peek().kind == "^":
            self.advance()
            tok = self.peek()
            if tok.kind != "num":
                raise ParseError("exponent must be a nonnegative integer literal", tok.pos)
            self.advance()
            value = value ** int(tok.text)
        return value

    def base(self):
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            numerator = int(tok.text)
            if self.peek().kind == "/":
                self.advance()
                den = self.peek()
                if den.kind != "num":
                    raise ParseError("denominator must be an integer literal", den.pos)
                self.advance()
                if int(den.text) == 0:
                    raise ParseError("denominator must be positive", den.pos)
                return self.const(Fraction(numerator, int(den.text)))
            return self.const(Fraction(numerator))
        if tok.kind == "name":
            if tok.text not in self.env:
                allowed = ", ".join(sorted(self.env))
                raise ParseError(f"unknown variable {tok.text!r} (allowed: {allowed})", tok.pos)
            self.advance()
            return self.env[tok.text]
        if tok.kind == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"expected a value, found {tok.text or 'end of input'!r}", tok.pos)


def parse_poly(text: str, ring: str) -> Poly:
    """Parse an expression in x and y into the requested ring."""
    if ring == COMM:
        env = {"x": CommPoly.x(), "y": CommPoly.y()}
        const = CommPoly.constant
    elif ring == NONCOMM:
        env = {"x": NCPoly.x(), "y": NCPoly.y()}
        const = NCPoly.constant
    else:
        raise ValueError(f"unknown ring {ring!r}")
    return _Parser(_tokenize(text), env, const).parse()


def parse_uni(text: str) -> UniPoly:
    """Parse an expression in the single variable t."""
    env = {"t": UniPoly.t()}
    return _Parser(_tokenize(text), env, UniPoly.constant).parse()


def _format_coeff(c: Fraction) -> str:
    return str(c)


def _join_terms(rendered: List[Tuple[Fraction, str]]) -> str:
    if not rendered:
        return "0"
    parts: List[str] = []
    for idx, (coeff, mono) in enumerate(rendered):
        sign = "-" if coeff < 0 else "+"
        mag = -coeff if coeff < 0 else coeff
        if mono:
            body = mono if mag == 1 else f"{_format_coeff(mag)}*{mono}"
        else:
            body = _format_coeff(mag)
        if idx == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def _comm_mono_str(mono: Tuple[int, int]) -> str:
    i, j = mono
    pieces = []
    if i:
        pieces.append("x" if i == 1 else f"x^{i}")
    if j:
        pieces.append("y" if j == 1 else f"y^{j}")
    return "*".join(pieces)


def _word_str(word: str) -> str:
    pieces = []
    k = 0
    while k < len(word):
        j = k
        while j < len(word) and word[j] == word[k]:
            j += 1
        run = j - k
        pieces.append(word[k] if run == 1 else f"{word[k]}^{run}")
        k = j
    return "*".join(pieces)


def print_poly(p: Poly) -> str:
    """Canonical text form; terms in decreasing canonical monomial order."""
    if isinstance(p, CommPoly):
        rendered = [(c, _comm_mono_str(m)) for m, c in p.sorted_terms()]
    elif isinstance(p, NCPoly):
        rendered = [(c, _word_str(w)) for w, c in p.sorted_terms()]
    else:
        raise TypeError(f"not a ring element: {p!r}")
    return _join_terms(rendered)


def print_uni(f: UniPoly) -> str:
    """Canonical text form of a univariate polynomial in t, highest power first."""
    rendered = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeff(k)
        if not c:
            continue
        if k == 0:
            mono = ""
        elif k == 1:
            mono = "t"
        else:
            mono = f"t^{k}"
        rendered.append((c, mono))
    return _join_terms(rendered)


def endo_to_dict(endo) -> Dict[str, str]:
    """JSON-ready form of an endomorphism (see endo.Endo)."""
    return {"ring": endo.ring, "x": print_poly(endo.fx), "y": print_poly(endo.fy)}


def endo_from_dict(data: Dict[str, str]):
    """Inverse of endo_to_dict; rejects unknown keys and bad ring tags."""
    from .endo import Endo

    if not isinstance(data, dict):
        raise ParseError("endomorphism spec must be a JSON object", 0)
    extra = set(data) - {"ring", "x", "y"}
    if extra:
        raise ParseError(f"unknown keys in endomorphism spec: {sorted(extra)}", 0)
    missing = {"ring", "x", "y"} - set(data)
    if missing:
        raise ParseError(f"missing keys in endomorphism spec: {sorted(missing)}", 0)
    ring = data["ring"]
    if ring not in (COMM, NONCOMM):
        raise ParseError(f"ring must be {COMM!r} or {NONCOMM!r}, found {ring!r}", 0)
    return Endo(ring, parse_poly(data["x"], ring), parse_poly(data["y"], ring))


def endo_from_json(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc
    return endo_from_dict(data)
