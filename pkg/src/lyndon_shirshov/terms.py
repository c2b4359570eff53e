"""Non-associative words (binary trees) and the normal words of AC(X).

A :class:`Term` is a leaf carrying a letter, or an ordered pair of terms.
Terms are interned, so structurally equal terms are usually the same object,
but equality and hashing are structural and never rely on that.

Two orders are defined on terms.  Both first compare the foliage (the
associative word read off the leaves), then the left children, then the
right children; ``term_lex_compare`` uses the lexicographic word order and
``term_deg_lex_compare`` the degree-lexicographic one.  A pair is *normal*
when both children are normal and the left child is strictly greater than
the right one under the lexicographic term order.
"""

from __future__ import annotations

import weakref
from functools import lru_cache
from typing import Iterator, Optional

from .words import (
    Alphabet,
    Ordering,
    Word,
    _deg_lex,
    _lex,
    check_same_alphabet,
    is_alsw,
    primitive_root,
)

__all__ = [
    "InvariantViolation",
    "Term",
    "graft",
    "is_normal",
    "leaf",
    "normal_words",
    "normalize",
    "pair",
    "product",
    "subterms",
    "support_root",
    "term_deg_lex_compare",
    "term_lex_compare",
]

LEFT, RIGHT = "L", "R"

Path = tuple  # sequence of LEFT/RIGHT steps from the root


class InvariantViolation(RuntimeError):
    """A mathematical invariant failed; this indicates a bug, not bad input."""


_interned: "weakref.WeakValueDictionary[tuple, Term]" = weakref.WeakValueDictionary()


class Term:
    __slots__ = (
        "alphabet",
        "letter",
        "left",
        "right",
        "foliage",
        "_hash",
        "_normal",
        "_key",
        "__weakref__",
    )

    def __init__(self):
        raise TypeError("build terms with leaf() and pair()")

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def degree(self) -> int:
        return len(self.foliage)

    @property
    def word(self) -> Word:
        return Word(self.alphabet, self.foliage)

    @property
    def is_normal(self) -> bool:
        if self._normal is None:
            self._normal = self.left is None or (
                self.left.is_normal
                and self.right.is_normal
                and _term_lex(self.left, self.right) > 0
            )
        return self._normal

    @property
    def deg_lex_key(self) -> tuple:
        """Sort key ascending in the degree-lexicographic term order."""
        if self._key is None:
            neg = tuple(-i for i in self.foliage)
            if self.left is None:
                self._key = (1, neg)
            else:
                self._key = (
                    len(self.foliage),
                    neg,
                    self.left.deg_lex_key,
                    self.right.deg_lex_key,
                )
        return self._key

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Term) or self._hash != other._hash:
            return False
        if self.left is None:
            return (
                other.left is None
                and self.letter == other.letter
                and self.alphabet == other.alphabet
            )
        return other.left is not None and self.left == other.left and self.right == other.right

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return format_term(self)

    def __repr__(self) -> str:
        return f"Term({format_term(self)!r})"

    def __reduce__(self):
        if self.left is None:
            return (leaf, (self.alphabet, self.letter))
        return (pair, (self.left, self.right))


def _new(alphabet, letter, left, right, foliage, h) -> Term:
    t = object.__new__(Term)
    t.alphabet = alphabet
    t.letter = letter
    t.left = left
    t.right = right
    t.foliage = foliage
    t._hash = h
    t._normal = None
    t._key = None
    return t


def leaf(alphabet: Alphabet, letter: int | str) -> Term:
    if isinstance(letter, str):
        letter = alphabet.index(letter)
    elif not 0 <= letter < len(alphabet):
        raise ValueError(f"letter index {letter} outside alphabet {alphabet}")
    key = (alphabet, letter)
    t = _interned.get(key)
    if t is None:
        t = _new(alphabet, letter, None, None, (letter,), hash(key))
        _interned[key] = t
    return t


def pair(left: Term, right: Term) -> Term:
    """The (not necessarily normal) term ``(left right)``."""
    check_same_alphabet(left.alphabet, right.alphabet)
    key = (left, right)
    t = _interned.get(key)
    if t is None:
        t = _new(
            left.alphabet,
            None,
            left,
            right,
            left.foliage + right.foliage,
            hash((left._hash, right._hash)),
        )
        _interned[key] = t
    return t


def _cmp(x, y) -> int:
    return (x > y) - (x < y)


def _term_lex(s: Term, t: Term) -> int:
    if s is t:
        return 0
    c = _lex(s.foliage, t.foliage)
    if c or s.left is None:
        # a leaf never shares its foliage with a pair
        return c
    return _term_lex(s.left, t.left) or _term_lex(s.right, t.right)


def _term_deg_lex(s: Term, t: Term) -> int:
    if s is t:
        return 0
    c = _deg_lex(s.foliage, t.foliage)
    if c or s.left is None:
        return c
    return _term_deg_lex(s.left, t.left) or _term_deg_lex(s.right, t.right)


def term_lex_compare(s: Term, t: Term) -> Ordering:
    check_same_alphabet(s.alphabet, t.alphabet)
    return Ordering(_term_lex(s, t))


def term_deg_lex_compare(s: Term, t: Term) -> Ordering:
    check_same_alphabet(s.alphabet, t.alphabet)
    return Ordering(_term_deg_lex(s, t))


def is_normal(t: Term) -> bool:
    return t.is_normal


def product(u: Term, v: Term) -> tuple[int, Optional[Term]]:
    """Product of two normal words: ``(sign, word)``, or ``(0, None)``."""
    c = _term_lex(u, v)
    if c > 0:
        return 1, pair(u, v)
    if c < 0:
        return -1, pair(v, u)
    return 0, None


def normalize(t: Term) -> tuple[int, Optional[Term]]:
    """Map ``t`` to ``(sign, normal word)`` with ``t = sign * word`` in AC(X).

    Returns ``(0, None)`` when ``t`` vanishes by anti-commutativity.
    """
    if t.is_normal:
        return 1, t
    s1, a = normalize(t.left)
    if not s1:
        return 0, None
    s2, b = normalize(t.right)
    if not s2:
        return 0, None
    s3, w = product(a, b)
    return s1 * s2 * s3, w


def subterms(t: Term, path: Path = ()) -> Iterator[tuple[Path, Term]]:
    """All ``(path, subterm)`` pairs, root first, then left before right."""
    yield path, t
    if t.left is not None:
        yield from subterms(t.left, path + (LEFT,))
        yield from subterms(t.right, path + (RIGHT,))


def subterm_at(t: Term, path: Path) -> Term:
    for step in path:
        if t.left is None:
            raise ValueError(f"path {''.join(path)!r} leaves the tree")
        if step == LEFT:
            t = t.left
        elif step == RIGHT:
            t = t.right
        else:
            raise ValueError(f"bad path step {step!r}")
    return t


def graft(host: Term, path: Path, sub: Term) -> tuple[int, Optional[Term]]:
    """Replace the subterm of the normal word ``host`` at ``path`` by ``sub``
    and normalize, touching only the nodes along the path."""
    if not path:
        return normalize(sub)
    if host.left is None:
        raise ValueError(f"path {''.join(path)!r} leaves the tree")
    step = path[0]
    if step == LEFT:
        sign, new = graft(host.left, path[1:], sub)
        if not sign:
            return 0, None
        s, w = product(new, host.right)
    elif step == RIGHT:
        sign, new = graft(host.right, path[1:], sub)
        if not sign:
            return 0, None
        s, w = product(host.left, new)
    else:
        raise ValueError(f"bad path step {step!r}")
    return sign * s, w


def support_root(w: Term) -> tuple[Word, int]:
    """Primitive root and exponent of the foliage of a normal word.

    The root of a normal word's support is always an ALSW; anything else is
    reported as an :class:`InvariantViolation`.
    """
    if not w.is_normal:
        raise ValueError(f"{w} is not a normal word")
    root, n = primitive_root(w.word)
    if not is_alsw(root):
        raise InvariantViolation(f"support of {w} has non-ALSW root {root}")
    return root, n


@lru_cache(maxsize=None)
def _normal_words_of_degree(alphabet: Alphabet, degree: int) -> tuple[Term, ...]:
    if degree == 1:
        return tuple(leaf(alphabet, i) for i in range(len(alphabet)))
    found = []
    for d in range(1, degree):
        for u in _normal_words_of_degree(alphabet, d):
            for v in _normal_words_of_degree(alphabet, degree - d):
                if _term_lex(u, v) > 0:
                    found.append(pair(u, v))
    found.sort(key=lambda t: t.deg_lex_key, reverse=True)
    return tuple(found)


def normal_words(alphabet: Alphabet, degree: int) -> tuple[Term, ...]:
    """All normal words of exactly ``degree``, greatest (deg-lex) first."""
    if degree < 1:
        raise ValueError("degree must be at least 1")
    return _normal_words_of_degree(alphabet, degree)


def format_term(t: Term) -> str:
    """Compact bracket form, e.g. ``[a[ab]]``; multi-character letters are
    separated by a single space where two letters would otherwise touch."""
    sep = "" if t.alphabet.single_char else " "
    names = t.alphabet.letters

    def fmt(node: Term) -> str:
        if node.left is None:
            return names[node.letter]
        a, b = fmt(node.left), fmt(node.right)
        glue = sep if (a[-1] != "]" and b[0] != "[") else ""
        return f"[{a}{glue}{b}]"

    return fmt(t)
