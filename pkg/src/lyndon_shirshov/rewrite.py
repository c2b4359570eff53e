"""Rewriting modulo a set of monic polynomials in AC(X).

The context around an occurrence of a leading word is represented as a path
in the host tree rather than as a pair of associative words: in AC(X) a
subword of a normal word is exactly a subtree.  Substituting a polynomial at
an occurrence grafts each of its monomials at the path and renormalizes.

Default reduction strategy: reduce the deg-lex greatest reducible monomial,
at its left-most outer-most occurrence, using the earliest matching rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal, Optional, Sequence

from .algebra import Polynomial, make_monic, multiply
from .terms import Path, Term, _term_deg_lex, graft, normal_words, subterm_at, subterms
from .words import Alphabet, check_same_alphabet

__all__ = [
    "CompositionRecord",
    "GsbReport",
    "Occurrence",
    "RewriteRule",
    "RuleSet",
    "check_gsb",
    "eliminate_leading_word",
    "enumerate_irr",
    "find_occurrences",
    "inclusion_composition",
    "lie_bracket",
    "normal_form",
    "structure_constants",
    "substitute",
]

Strategy = Literal["outermost", "innermost"]


@dataclass(frozen=True, eq=False)
class RewriteRule:
    """A monic polynomial read as ``leading -> tail``."""

    polynomial: Polynomial
    leading: Term
    tail: Polynomial

    @classmethod
    def from_polynomial(cls, f: Polynomial) -> RewriteRule:
        f = make_monic(f)
        lead, _ = f.leading()
        tail = Polynomial._raw(f.alphabet, {lead: Fraction(1)}) - f
        return cls(f, lead, tail)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RewriteRule) and self.polynomial == other.polynomial

    def __hash__(self) -> int:
        return hash(self.polynomial)

    def __str__(self) -> str:
        return str(self.polynomial)


@dataclass(frozen=True)
class Occurrence:
    host: Term
    path: Path

    @property
    def subterm(self) -> Term:
        return subterm_at(self.host, self.path)

    def path_str(self) -> str:
        return "".join(self.path) or "."


class RuleSet:
    """An ordered, duplicate-free collection of rewrite rules.

    ``max_deg`` records the degree up to which the set is known to be
    complete (``None`` when unknown); it guards degree-sensitive operations.
    """

    def __init__(
        self,
        alphabet: Alphabet,
        polynomials: Iterable[Polynomial | RewriteRule] = (),
        max_deg: Optional[int] = None,
    ):
        self.alphabet = alphabet
        self.max_deg = max_deg
        rules: list[RewriteRule] = []
        seen = set()
        for p in polynomials:
            r = p if isinstance(p, RewriteRule) else RewriteRule.from_polynomial(p)
            check_same_alphabet(alphabet, r.polynomial.alphabet)
            if r not in seen:
                seen.add(r)
                rules.append(r)
        self.rules: tuple[RewriteRule, ...] = tuple(rules)
        self._position = {r: i for i, r in enumerate(self.rules)}
        self.index: dict[Term, tuple[RewriteRule, ...]] = {}
        for r in self.rules:
            self.index[r.leading] = self.index.get(r.leading, ()) + (r,)
        self._occ_cache: dict[Term, tuple] = {}

    @classmethod
    def s0(cls, alphabet: Alphabet, max_deg: int) -> RuleSet:
        from .lie import enumerate_s0

        return cls(alphabet, enumerate_s0(alphabet, max_deg), max_deg=max_deg)

    @classmethod
    def full_jacobi(cls, alphabet: Alphabet, max_deg: int) -> RuleSet:
        from .lie import enumerate_full_jacobi

        return cls(alphabet, enumerate_full_jacobi(alphabet, max_deg), max_deg=max_deg)

    def __iter__(self):
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __contains__(self, rule: RewriteRule) -> bool:
        return rule in self._position

    def position(self, rule: RewriteRule) -> int:
        return self._position[rule]

    def without(self, rule: RewriteRule) -> RuleSet:
        return RuleSet(self.alphabet, [r for r in self.rules if r != rule], self.max_deg)

    def occurrences(self, host: Term) -> tuple[tuple[RewriteRule, Occurrence], ...]:
        """Cached :func:`find_occurrences`."""
        found = self._occ_cache.get(host)
        if found is None:
            found = tuple(
                (r, Occurrence(host, path))
                for path, sub in subterms(host)
                for r in self.index.get(sub, ())
            )
            self._occ_cache[host] = found
        return found

    def is_reducible(self, t: Term) -> bool:
        return bool(self.occurrences(t))

    def is_redundant(self, rule: RewriteRule) -> bool:
        """True when another rule's leading word occurs in ``rule.leading``;
        such a rule can be dropped without changing the irreducible words."""
        return any(r is not rule for r, _ in self.occurrences(rule.leading))


def find_occurrences(host: Term, rules: RuleSet) -> list[tuple[RewriteRule, Occurrence]]:
    """Every ``(rule, occurrence)`` of a rule's leading word as a subtree of
    ``host``: outer before inner, left before right, rules in set order."""
    return list(rules.occurrences(host))


def substitute(occ: Occurrence, replacement: Polynomial) -> Polynomial:
    """Graft each monomial of ``replacement`` at ``occ`` and renormalize."""
    check_same_alphabet(occ.host.alphabet, replacement.alphabet)
    subterm_at(occ.host, occ.path)  # validates the path
    acc: dict[Term, Fraction] = {}
    for t, c in replacement.items():
        sign, w = graft(occ.host, occ.path, t)
        if sign:
            acc[w] = acc.get(w, 0) + sign * c
    return Polynomial._raw(replacement.alphabet, {t: c for t, c in acc.items() if c})


def _eliminate(f: Polynomial, rule: RewriteRule, occ: Occurrence) -> Polynomial:
    # f - alpha * (rule grafted at occ), alpha the coefficient of occ.host in f
    return f.add_scaled(substitute(occ, rule.polynomial), -f.coefficient(occ.host))


def eliminate_leading_word(f: Polynomial, rule: RewriteRule, occ: Occurrence) -> Polynomial:
    """One ELW step on the leading monomial of ``f``."""
    lead, _ = f.leading()
    if occ.host != lead:
        raise ValueError(f"occurrence host {occ.host} is not the leading monomial {lead}")
    if occ.subterm != rule.leading:
        raise ValueError(f"no occurrence of {rule.leading} at {occ.path_str()} in {lead}")
    g = _eliminate(f, rule, occ)
    if g and _term_deg_lex(g.leading()[0], lead) >= 0:
        raise AssertionError(f"ELW did not lower the leading monomial of {f}")
    return g


@dataclass(frozen=True)
class ReductionStep:
    monomial: Term
    coefficient: Fraction
    rule: RewriteRule
    path: Path


def normal_form(
    f: Polynomial,
    rules: RuleSet,
    strategy: Strategy = "outermost",
    trace: Optional[list] = None,
) -> Polynomial:
    """Reduce ``f`` until no monomial contains a rule's leading word.

    ``strategy="outermost"`` is the default selection rule.
    ``"innermost"`` instead takes the least reducible monomial, its last
    occurrence in pre-order and the last matching rule; it exists to check
    that normal forms do not depend on such choices.  Steps are appended to
    ``trace`` when given.
    """
    check_same_alphabet(f.alphabet, rules.alphabet)
    previous = None
    while True:
        candidates = [t for t in f._coeffs if rules.is_reducible(t)]
        if not candidates:
            return f
        if strategy == "outermost":
            m = max(candidates, key=lambda t: t.deg_lex_key)
            if previous is not None and _term_deg_lex(m, previous) >= 0:
                raise AssertionError("normal_form failed to descend")
            previous = m
            rule, occ = rules.occurrences(m)[0]
        elif strategy == "innermost":
            m = min(candidates, key=lambda t: t.deg_lex_key)
            occs = rules.occurrences(m)
            last = occs[-1][1].path
            rule, occ = [ro for ro in occs if ro[1].path == last][-1]
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        if trace is not None:
            trace.append(ReductionStep(m, f.coefficient(m), rule, occ.path))
        f = _eliminate(f, rule, occ)


@dataclass
class CompositionRecord:
    f: RewriteRule
    g: RewriteRule
    ambient: Term
    occurrence: Occurrence
    result: Polynomial
    residue: Polynomial
    steps: list = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        return {
            "f": str(self.f),
            "g": str(self.g),
            "ambient": str(self.ambient),
            "path": self.occurrence.path_str(),
            "result": str(self.result),
            "residue": str(self.residue),
        }


def inclusion_composition(
    f: RewriteRule,
    g: RewriteRule,
    occ: Occurrence,
    rules: Optional[RuleSet] = None,
) -> CompositionRecord:
    """``(f, g)_w = f - (g grafted at occ)`` with ``w`` the leading word of
    ``f``, reduced modulo ``rules`` (default: ``{f, g}``)."""
    if occ.host != f.leading:
        raise ValueError(f"occurrence must lie in the leading word {f.leading} of f")
    if occ.subterm != g.leading:
        raise ValueError(f"{g.leading} does not occur at {occ.path_str()} in {f.leading}")
    if rules is None:
        rules = RuleSet(f.polynomial.alphabet, [f, g])
    result = f.polynomial - substitute(occ, g.polynomial)
    if result and _term_deg_lex(result.leading()[0], f.leading) >= 0:
        raise AssertionError("composition did not cancel the ambient word")
    steps: list = []
    residue = normal_form(result, rules, trace=steps)
    return CompositionRecord(f, g, f.leading, occ, result, residue, steps)


@dataclass
class GsbReport:
    passed: bool
    max_deg: int
    rules_checked: int
    pairs_examined: int
    compositions: int
    excluded: list = field(default_factory=list)
    witness: Optional[CompositionRecord] = None
    records: list = field(default_factory=list)

    def summary(self) -> str:
        lines = [
            f"max degree:        {self.max_deg}",
            f"rules checked:     {self.rules_checked}",
            f"rules excluded:    {len(self.excluded)}",
            f"pairs examined:    {self.pairs_examined}",
            f"compositions:      {self.compositions}",
            f"result:            {'PASS' if self.passed else 'FAIL'}",
        ]
        if self.witness is not None:
            w = self.witness
            lines += [
                "witness (not ELW-reducible to zero):",
                f"  f:       {w.f}",
                f"  g:       {w.g}",
                f"  ambient: {w.ambient}",
                f"  path:    {w.occurrence.path_str()}",
                f"  result:  {w.result}",
                f"  residue: {w.residue}",
            ]
        return "\n".join(lines)

    def to_json(self, trace: bool = False) -> dict:
        out = {
            "result": "PASS" if self.passed else "FAIL",
            "max_deg": self.max_deg,
            "rules_checked": self.rules_checked,
            "rules_excluded": len(self.excluded),
            "pairs_examined": self.pairs_examined,
            "compositions": self.compositions,
            "witness": self.witness.to_json() if self.witness else None,
        }
        if trace:
            out["records"] = [r.to_json() for r in self.records]
        return out


def check_gsb(rules: RuleSet, max_deg: int, trace: bool = False) -> GsbReport:
    """Form every inclusion composition among rules whose leading word has
    degree <= max_deg and reduce it; PASS iff every residue is zero."""
    kept = [r for r in rules if r.leading.degree <= max_deg]
    excluded = [r for r in rules if r.leading.degree > max_deg]
    ambient = rules if not excluded else RuleSet(rules.alphabet, kept, max_deg)
    pairs = set()
    count = 0
    witness = None
    records = []
    for f in kept:
        for g, occ in ambient.occurrences(f.leading):
            pairs.add((f, g))
            count += 1
            rec = inclusion_composition(f, g, occ, ambient)
            if trace:
                records.append(rec)
            if rec.residue and witness is None:
                witness = rec
    return GsbReport(
        passed=witness is None,
        max_deg=max_deg,
        rules_checked=len(kept),
        pairs_examined=len(pairs),
        compositions=count,
        excluded=excluded,
        witness=witness,
        records=records,
    )


def enumerate_irr(rules: RuleSet, alphabet: Alphabet, max_deg: int) -> list[Term]:
    """Normal words of degree <= max_deg containing no leading word of
    ``rules``, by degree and greatest first within a degree."""
    check_same_alphabet(rules.alphabet, alphabet)
    out = []
    for d in range(1, max_deg + 1):
        out.extend(t for t in normal_words(alphabet, d) if not rules.is_reducible(t))
    return out


def _as_polynomial(x: Term | Polynomial) -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial.from_term(x)


def lie_bracket(x: Term | Polynomial, y: Term | Polynomial, rules: RuleSet) -> Polynomial:
    """Product in the quotient: multiply in AC(X), then reduce."""
    f, g = _as_polynomial(x), _as_polynomial(y)
    needed = max(f.degrees, default=0) + max(g.degrees, default=0)
    if rules.max_deg is not None and needed > rules.max_deg:
        raise ValueError(
            f"rule set is only complete up to degree {rules.max_deg}, need {needed}"
        )
    return normal_form(multiply(f, g), rules)


def structure_constants(u: Term, v: Term, rules: RuleSet) -> Polynomial:
    """Expansion of the bracket of two basis monomials in the NLSW basis."""
    return lie_bracket(u, v, rules)
