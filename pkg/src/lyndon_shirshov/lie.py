"""Lyndon-Shirshov monomials and the Jacobian relators of the free Lie algebra."""

from __future__ import annotations

from functools import lru_cache

from .algebra import Polynomial, make_monic, multiply
from .terms import Term, _term_lex, leaf, normal_words, pair
from .words import Alphabet, Word, _is_alsw_indices, _lex, generate_alsws, is_alsw

__all__ = [
    "bracket_alsw",
    "enumerate_full_jacobi",
    "enumerate_s0",
    "is_nlsw",
    "jacobian",
    "nlsws",
]


def is_nlsw(t: Term) -> bool:
    """Non-associative Lyndon-Shirshov word test.

    A pair ``(v w)`` qualifies when both children do, the foliage of ``v`` is
    greater than that of ``w``, and, if ``v = (v1 v2)``, the foliage of
    ``v2`` is at most that of ``w``.
    """
    if t.left is None:
        return True
    v, w = t.left, t.right
    if _lex(v.foliage, w.foliage) <= 0:
        return False
    if v.left is not None and _lex(v.right.foliage, w.foliage) > 0:
        return False
    return is_nlsw(v) and is_nlsw(w)


def _bracket(alphabet: Alphabet, u: tuple) -> Term:
    if len(u) == 1:
        return leaf(alphabet, u[0])
    # split off the longest proper suffix that is itself an ALSW
    for k in range(1, len(u)):
        if _is_alsw_indices(u[k:]):
            return pair(_bracket(alphabet, u[:k]), _bracket(alphabet, u[k:]))
    raise AssertionError("a single letter is always an ALSW suffix")


def bracket_alsw(u: Word) -> Term:
    """The unique NLSW whose foliage is the ALSW ``u``."""
    if not is_alsw(u):
        raise ValueError(f"{u} is not an ALSW")
    return _bracket(u.alphabet, u.letters)


@lru_cache(maxsize=None)
def _nlsws(alphabet: Alphabet, max_deg: int) -> tuple[Term, ...]:
    return tuple(bracket_alsw(u) for u in generate_alsws(alphabet, max_deg))


def nlsws(alphabet: Alphabet, max_deg: int) -> tuple[Term, ...]:
    """NLSWs of degree at most ``max_deg``, ordered like :func:`generate_alsws`."""
    return _nlsws(alphabet, max_deg)


def jacobian(u: Term, v: Term, w: Term) -> Polynomial:
    """``(uv)w - (uw)v - u(vw)`` for normal words ``u > v > w`` (lex order)."""
    if not (_term_lex(u, v) > 0 and _term_lex(v, w) > 0):
        raise ValueError(f"jacobian needs u > v > w, got {u}, {v}, {w}")
    if not (u.is_normal and v.is_normal and w.is_normal):
        raise ValueError("jacobian arguments must be normal words")
    U, V, W = (Polynomial._raw(u.alphabet, {t: 1}) for t in (u, v, w))
    return multiply(multiply(U, V), W) - multiply(multiply(U, W), V) - multiply(U, multiply(V, W))


def _triples(words, max_deg: int):
    # yields u > v > w with total degree <= max_deg
    by_degree: dict[int, list[Term]] = {}
    for t in words:
        if t.degree <= max_deg - 2:
            by_degree.setdefault(t.degree, []).append(t)
    upto = lambda n: [t for d in sorted(by_degree) if d <= n for t in by_degree[d]]
    for u in upto(max_deg - 2):
        for v in upto(max_deg - 1 - u.degree):
            if _term_lex(u, v) <= 0:
                continue
            for w in upto(max_deg - u.degree - v.degree):
                if _term_lex(v, w) > 0:
                    yield u, v, w


def _triple_key(triple):
    u, v, w = triple
    return (u.degree + v.degree + w.degree, u.foliage + v.foliage + w.foliage, u.degree, v.degree)


def enumerate_s0(alphabet: Alphabet, max_deg: int) -> list[Polynomial]:
    """Jacobians of all NLSW triples ``u > v > w`` of total degree <= max_deg,
    ordered by total degree, then concatenated foliage (greatest first)."""
    triples = sorted(_triples(nlsws(alphabet, max_deg), max_deg), key=_triple_key)
    return [jacobian(u, v, w) for u, v, w in triples]


def enumerate_full_jacobi(alphabet: Alphabet, max_deg: int) -> list[Polynomial]:
    """Monic Jacobians of all normal-word triples ``u > v > w`` of total
    degree <= max_deg, duplicates removed."""
    words = [t for d in range(1, max_deg + 1) for t in normal_words(alphabet, d)]
    seen = set()
    out = []
    for u, v, w in sorted(_triples(words, max_deg), key=_triple_key):
        f = jacobian(u, v, w)
        if not f:
            continue
        f = make_monic(f)
        if f not in seen:
            seen.add(f)
            out.append(f)
    return out
