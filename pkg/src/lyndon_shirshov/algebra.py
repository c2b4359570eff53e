"""Polynomials in the free anti-commutative algebra AC(X).

A :class:`Polynomial` is a finite linear combination of normal words with
:class:`fractions.Fraction` coefficients.  Iteration is always in
descending degree-lexicographic order, so the first item is the leading
monomial.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Union

from .terms import Term, normalize, product
from .words import Alphabet, check_same_alphabet

__all__ = [
    "Polynomial",
    "add",
    "leading_monomial",
    "make_monic",
    "multiply",
]

Scalar = Union[int, Fraction]


def _coeff(c) -> Fraction:
    if isinstance(c, bool) or not isinstance(c, (int, Rational)):
        raise TypeError(f"coefficients must be exact rationals, got {c!r}")
    return Fraction(c)


class Polynomial:
    __slots__ = ("alphabet", "_coeffs", "_sorted")

    def __init__(self, alphabet: Alphabet, coeffs: Mapping[Term, Scalar] | None = None):
        self.alphabet = alphabet
        clean = {}
        for t, c in (coeffs or {}).items():
            check_same_alphabet(alphabet, t.alphabet)
            if not t.is_normal:
                raise ValueError(f"{t} is not a normal word; use Polynomial.from_term")
            c = _coeff(c)
            if c:
                clean[t] = c
        self._coeffs = clean
        self._sorted = None

    @classmethod
    def _raw(cls, alphabet: Alphabet, coeffs: dict) -> Polynomial:
        # coeffs already validated, zero-free and owned by the new object
        p = object.__new__(cls)
        p.alphabet = alphabet
        p._coeffs = coeffs
        p._sorted = None
        return p

    @classmethod
    def zero(cls, alphabet: Alphabet) -> Polynomial:
        return cls._raw(alphabet, {})

    @classmethod
    def from_term(cls, t: Term, coeff: Scalar = 1) -> Polynomial:
        """``coeff * t`` with ``t`` normalized first (it need not be normal)."""
        sign, w = normalize(t)
        c = _coeff(coeff) * sign
        if not c:
            return cls._raw(t.alphabet, {})
        return cls._raw(t.alphabet, {w: c})

    @classmethod
    def from_terms(cls, alphabet: Alphabet, items: Iterable[tuple[Scalar, Term]]) -> Polynomial:
        acc: dict[Term, Fraction] = {}
        for c, t in items:
            check_same_alphabet(alphabet, t.alphabet)
            sign, w = normalize(t)
            if sign:
                acc[w] = acc.get(w, 0) + sign * _coeff(c)
        return cls._raw(alphabet, {t: c for t, c in acc.items() if c})

    def items(self) -> list[tuple[Term, Fraction]]:
        """``(monomial, coefficient)`` pairs, leading monomial first."""
        if self._sorted is None:
            self._sorted = sorted(
                self._coeffs.items(), key=lambda kv: kv[0].deg_lex_key, reverse=True
            )
        return self._sorted

    def __iter__(self) -> Iterator[tuple[Term, Fraction]]:
        return iter(self.items())

    def monomials(self) -> list[Term]:
        return [t for t, _ in self.items()]

    def coefficient(self, t: Term) -> Fraction:
        return self._coeffs.get(t, Fraction(0))

    def __contains__(self, t: Term) -> bool:
        return t in self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degrees(self) -> set[int]:
        return {t.degree for t in self._coeffs}

    def leading(self) -> tuple[Term, Fraction]:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no leading monomial")
        return self.items()[0]

    def _combine(self, other: Polynomial, scale: Fraction) -> Polynomial:
        check_same_alphabet(self.alphabet, other.alphabet)
        acc = dict(self._coeffs)
        for t, c in other._coeffs.items():
            v = acc.get(t, 0) + scale * c
            if v:
                acc[t] = v
            else:
                acc.pop(t, None)
        return Polynomial._raw(self.alphabet, acc)

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._combine(other, Fraction(1))

    def __sub__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._combine(other, Fraction(-1))

    def add_scaled(self, other: Polynomial, scale: Scalar) -> Polynomial:
        """``self + scale * other`` in one pass."""
        return self._combine(other, _coeff(scale))

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.alphabet, {t: -c for t, c in self._coeffs.items()})

    def scale(self, c: Scalar) -> Polynomial:
        c = _coeff(c)
        if not c:
            return Polynomial.zero(self.alphabet)
        return Polynomial._raw(self.alphabet, {t: c * v for t, v in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return multiply(self, other)
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.alphabet == other.alphabet and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"

    def to_json(self) -> list[dict]:
        return [{"coeff": str(c), "monomial": str(t)} for t, c in self.items()]


def format_polynomial(f: Polynomial) -> str:
    """Text form, e.g. ``[[ab]c] - [[ac]b] - 1/3*[a[bc]]``; zero is ``0``."""
    if not f:
        return "0"
    parts = []
    for i, (t, c) in enumerate(f.items()):
        mag = abs(c)
        body = str(t) if mag == 1 else f"{mag}*{t}"
        if i == 0:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(parts)


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def multiply(f: Polynomial, g: Polynomial) -> Polynomial:
    """Bilinear anti-commutative product of two polynomials."""
    check_same_alphabet(f.alphabet, g.alphabet)
    acc: dict[Term, Fraction] = {}
    for u, a in f._coeffs.items():
        for v, b in g._coeffs.items():
            sign, w = product(u, v)
            if sign:
                acc[w] = acc.get(w, 0) + sign * a * b
    return Polynomial._raw(f.alphabet, {t: c for t, c in acc.items() if c})


def leading_monomial(f: Polynomial) -> tuple[Term, Fraction]:
    """The deg-lex greatest monomial of ``f`` and its coefficient."""
    return f.leading()


def make_monic(f: Polynomial) -> Polynomial:
    _, c = f.leading()
    return f if c == 1 else f.scale(1 / c)
