"""Associative words over a finite ordered alphabet.

Letters are stored as integer indices into the alphabet, index 0 being the
greatest letter.  Under the lexicographic order used throughout the package
a word ``u`` is greater than ``v`` when, at the first differing position,
``u`` carries the greater letter, *or* when ``u`` is a proper prefix of
``v``.  With letters stored as indices this is exactly the reverse of
Python's tuple ordering, which the helpers below exploit.
"""

from __future__ import annotations

import re
from enum import IntEnum
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Alphabet",
    "AlphabetMismatchError",
    "Ordering",
    "Word",
    "deg_lex_compare",
    "generate_alsws",
    "is_alsw",
    "lex_compare",
    "lyndon_factorize",
    "primitive_root",
]

_LETTER_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class AlphabetMismatchError(ValueError):
    """Raised when objects over different alphabets are combined."""


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Alphabet:
    """A finite, totally ordered set of letters; the first letter is greatest."""

    __slots__ = ("letters", "_index")

    def __init__(self, letters: Iterable[str]):
        letters = tuple(letters)
        if not letters:
            raise ValueError("alphabet must be non-empty")
        for name in letters:
            if not isinstance(name, str) or not _LETTER_RE.match(name):
                raise ValueError(f"invalid letter name {name!r}")
        if len(set(letters)) != len(letters):
            raise ValueError(f"duplicate letters in alphabet {letters!r}")
        self.letters = letters
        self._index = {name: i for i, name in enumerate(letters)}

    @classmethod
    def parse(cls, spec: str) -> Alphabet:
        """Parse ``"a>b>c"`` (greatest letter first).

        A bare multi-character string such as ``"abc"`` is rejected, since it
        leaves the intended order implicit.
        """
        spec = spec.strip()
        if ">" not in spec and len(spec) > 1:
            raise ValueError(
                f"ambiguous alphabet {spec!r}: spell out the order, e.g. "
                f"{'>'.join(spec)!r}"
            )
        return cls(part.strip() for part in spec.split(">"))

    @property
    def single_char(self) -> bool:
        return all(len(name) == 1 for name in self.letters)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown letter {name!r} for alphabet {self}") from None

    def word(self, text: str) -> Word:
        return Word.parse(self, text)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __eq__(self, other: object) -> bool:
        return self is other or (
            isinstance(other, Alphabet) and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return hash(self.letters)

    def __str__(self) -> str:
        return ">".join(self.letters)

    def __repr__(self) -> str:
        return f"Alphabet({str(self)!r})"


def check_same_alphabet(a: Alphabet, b: Alphabet) -> None:
    if a is not b and a != b:
        raise AlphabetMismatchError(f"alphabets differ: {a} vs {b}")


class Word:
    """A non-empty associative word.  ``letters`` holds alphabet indices."""

    __slots__ = ("alphabet", "letters")

    def __init__(self, alphabet: Alphabet, letters: Sequence[int]):
        letters = tuple(letters)
        if not letters:
            raise ValueError("words are non-empty")
        n = len(alphabet)
        for i in letters:
            if not (isinstance(i, int) and 0 <= i < n):
                raise ValueError(f"letter index {i!r} outside alphabet {alphabet}")
        self.alphabet = alphabet
        self.letters = letters

    @classmethod
    def parse(cls, alphabet: Alphabet, text: str) -> Word:
        """Read a word written as a letter string, or ``.``-joined for
        multi-character letters (``x1.x2.x1``)."""
        text = text.strip()
        if "." in text or not alphabet.single_char:
            names = text.split(".") if "." in text else [text]
        else:
            names = list(text)
        return cls(alphabet, [alphabet.index(name) for name in names])

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def degree(self) -> int:
        return len(self.letters)

    def __getitem__(self, item: slice) -> Word:
        if not isinstance(item, slice):
            raise TypeError("index a Word with a slice; use .letters for indices")
        return Word(self.alphabet, self.letters[item])

    def __add__(self, other: Word) -> Word:
        check_same_alphabet(self.alphabet, other.alphabet)
        return Word(self.alphabet, self.letters + other.letters)

    def __mul__(self, n: int) -> Word:
        if n < 1:
            raise ValueError("word powers need a positive exponent")
        return Word(self.alphabet, self.letters * n)

    def rotations(self) -> Iterator[Word]:
        """Proper rotations ``wv`` of ``u = vw``."""
        u = self.letters
        for k in range(1, len(u)):
            yield Word(self.alphabet, u[k:] + u[:k])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and (
            self.letters == other.letters and self.alphabet == other.alphabet
        )

    def __hash__(self) -> int:
        return hash(self.letters)

    def __str__(self) -> str:
        names = [self.alphabet.letters[i] for i in self.letters]
        return "".join(names) if self.alphabet.single_char else ".".join(names)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def _cmp(x, y) -> int:
    return (x > y) - (x < y)


def _lex(u: tuple, v: tuple) -> int:
    # python orders index tuples exactly opposite to the word order
    return _cmp(v, u)


def _deg_lex(u: tuple, v: tuple) -> int:
    return _cmp(len(u), len(v)) or _cmp(v, u)


def lex_compare(u: Word, v: Word) -> Ordering:
    """Compare two words lexicographically; a proper prefix is *greater*."""
    check_same_alphabet(u.alphabet, v.alphabet)
    return Ordering(_lex(u.letters, v.letters))


def deg_lex_compare(u: Word, v: Word) -> Ordering:
    """Longer words are greater; equal lengths fall back to :func:`lex_compare`."""
    check_same_alphabet(u.alphabet, v.alphabet)
    return Ordering(_deg_lex(u.letters, v.letters))


def lex_key(u: Word) -> tuple:
    """Sort key ascending in the lexicographic word order."""
    return tuple(-i for i in u.letters) + (1,)


def deg_lex_key(u: Word) -> tuple:
    """Sort key ascending in the degree-lexicographic word order."""
    return (len(u.letters), tuple(-i for i in u.letters))


def is_alsw(u: Word) -> bool:
    """True iff ``u`` is strictly greater than each of its proper rotations.

    Reference implementation, quadratic in ``len(u)``.
    """
    return all(lex_compare(u, r) is Ordering.GREATER for r in u.rotations())


def _is_alsw_indices(u: tuple) -> bool:
    return all(u < u[k:] + u[:k] for k in range(1, len(u)))


def lyndon_factorize(u: Word) -> list[Word]:
    """Split ``u`` into ALSWs ``u1 u2 ... un`` with ``u1 <= u2 <= ... <= un``.

    Duval's algorithm run on the index tuples, where the word order is the
    reverse of the tuple order.
    """
    s = u.letters
    n = len(s)
    factors = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and s[k] <= s[j]:
            k = i if s[k] < s[j] else k + 1
            j += 1
        while i <= k:
            factors.append(Word(u.alphabet, s[i : i + j - k]))
            i += j - k
    return factors


def _alsw_indices(size: int, max_deg: int) -> Iterator[tuple]:
    # Fredricksen-Kessler-Maiorana generation in index order
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(w)
        m = len(w)
        while len(w) < max_deg:
            w.append(w[len(w) - m])
        while w and w[-1] == size - 1:
            w.pop()


def generate_alsws(alphabet: Alphabet, max_deg: int) -> list[Word]:
    """All ALSWs of degree at most ``max_deg``, by degree and then greatest
    first within a degree."""
    if max_deg < 1:
        raise ValueError("max_deg must be at least 1")
    found = sorted(_alsw_indices(len(alphabet), max_deg), key=lambda t: (len(t), t))
    return [Word(alphabet, t) for t in found]


def primitive_root(u: Word) -> tuple[Word, int]:
    """Return the shortest ``w`` and the exponent ``n`` with ``u == w**n``."""
    s = u.letters
    n = len(s)
    for d in range(1, n + 1):
        if n % d == 0 and s[:d] * (n // d) == s:
            return Word(u.alphabet, s[:d]), n // d
    raise AssertionError("unreachable")
