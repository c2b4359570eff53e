"""Text and JSON syntax for terms, polynomials and rule sets.

Grammar (whitespace is insignificant between tokens)::

    poly  := '0' | ['-'] term (('+' | '-') term)*
    term  := [coeff ['*']] mono
    coeff := INT ['/' INT]
    mono  := LETTER | '[' mono mono ']' | '(' mono mono ')'

Over an alphabet of single-character letters, adjacent letters need no
separator (``[ab]``); otherwise letters are separated by whitespace.
Parsed monomials are normalized, so input need not be in normal form.
"""

from __future__ import annotations

import json
import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .algebra import Polynomial
from .terms import Term, leaf, normalize, pair
from .words import Alphabet

__all__ = [
    "ParseError",
    "VanishingTermWarning",
    "parse_polynomial",
    "parse_rules",
    "parse_term",
    "polynomial_from_json",
]


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class VanishingTermWarning(UserWarning):
    """A parsed monomial is zero by anti-commutativity."""


_TOKEN = re.compile(
    r"(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/\[\]()])"
)


@dataclass
class _Tok:
    kind: str  # "int", "letter", or the operator character
    value: object
    offset: int


def _tokens(text: str, alphabet: Alphabet) -> Iterator[_Tok]:
    pos, n = 0, len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            return
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", _byte(text, pos))
        if m.lastgroup == "int":
            yield _Tok("int", int(m.group()), _byte(text, pos))
        elif m.lastgroup == "op":
            yield _Tok(m.group(), None, _byte(text, pos))
        else:
            name = m.group()
            if name in alphabet.letters:
                yield _Tok("letter", alphabet.index(name), _byte(text, pos))
            elif alphabet.single_char:
                for k, ch in enumerate(name):
                    if ch not in alphabet.letters:
                        raise ParseError(f"unknown letter {ch!r}", _byte(text, pos + k))
                    yield _Tok("letter", alphabet.index(ch), _byte(text, pos + k))
            else:
                raise ParseError(f"unknown letter {name!r}", _byte(text, pos))
        pos = m.end()


def _byte(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.alphabet = alphabet
        self.toks = list(_tokens(text, alphabet))
        self.i = 0

    def peek(self) -> _Tok | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self) -> _Tok:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text.encode("utf-8")))
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Tok:
        tok = self.take()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.kind!r}", tok.offset)
        return tok

    def done(self) -> None:
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok.kind!r}", tok.offset)

    def mono(self) -> Term:
        tok = self.take()
        if tok.kind == "letter":
            return leaf(self.alphabet, tok.value)
        if tok.kind in "[(":
            closer = "]" if tok.kind == "[" else ")"
            left = self.mono()
            right = self.mono()
            self.expect(closer)
            return pair(left, right)
        raise ParseError(f"expected a monomial, found {tok.kind!r}", tok.offset)

    def coeff(self) -> Fraction | None:
        tok = self.peek()
        if tok is None or tok.kind != "int":
            return None
        self.take()
        num = tok.value
        nxt = self.peek()
        if nxt is not None and nxt.kind == "/":
            self.take()
            den = self.expect("int")
            if den.value == 0:
                raise ParseError("zero denominator", den.offset)
            return Fraction(num, den.value)
        return Fraction(num)

    def term(self) -> tuple[Fraction, Term, int]:
        start = self.peek()
        c = self.coeff()
        if c is not None:
            tok = self.peek()
            if tok is not None and tok.kind == "*":
                self.take()
        else:
            c = Fraction(1)
        return c, self.mono(), (start.offset if start else 0)

    def poly(self) -> Polynomial:
        toks = self.toks
        if len(toks) == 1 and toks[0].kind == "int" and toks[0].value == 0:
            self.i = 1
            return Polynomial.zero(self.alphabet)
        sign = 1
        tok = self.peek()
        if tok is not None and tok.kind == "-":
            self.take()
            sign = -1
        items = []
        while True:
            c, t, offset = self.term()
            if normalize(t)[0] == 0:
                warnings.warn(
                    f"monomial at offset {offset} vanishes by anti-commutativity",
                    VanishingTermWarning,
                    stacklevel=4,
                )
            items.append((sign * c, t))
            tok = self.peek()
            if tok is None:
                break
            if tok.kind not in "+-":
                raise ParseError(f"expected '+' or '-', found {tok.kind!r}", tok.offset)
            self.take()
            sign = 1 if tok.kind == "+" else -1
        return Polynomial.from_terms(self.alphabet, items)


def parse_term(text: str, alphabet: Alphabet) -> Term:
    """Parse a single bracketed monomial without normalizing it."""
    p = _Parser(text, alphabet)
    t = p.mono()
    p.done()
    return t


def parse_polynomial(text: str, alphabet: Alphabet) -> Polynomial:
    p = _Parser(text, alphabet)
    f = p.poly()
    p.done()
    return f


def polynomial_from_json(data: list, alphabet: Alphabet) -> Polynomial:
    """Inverse of :meth:`Polynomial.to_json`."""
    items = []
    for entry in data:
        c = Fraction(entry["coeff"])
        items.append((c, parse_term(entry["monomial"], alphabet)))
    return Polynomial.from_terms(alphabet, items)


def parse_rules(text: str, alphabet: Alphabet) -> list[Polynomial]:
    """Read a rule file: a JSON array of polynomials, or one polynomial per
    line (blank lines and ``#`` comments ignored)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = None
    if isinstance(data, list):
        return [polynomial_from_json(entry, alphabet) for entry in data]
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse_polynomial(line, alphabet))
    return out
