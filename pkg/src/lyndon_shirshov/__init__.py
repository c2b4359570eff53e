"""Exact computation in the free anti-commutative algebra and the free Lie
algebra it presents via the Lyndon-Shirshov Groebner-Shirshov basis."""

from .algebra import Polynomial, add, leading_monomial, make_monic, multiply
from .lie import bracket_alsw, enumerate_full_jacobi, enumerate_s0, is_nlsw, jacobian, nlsws
from .rewrite import (
    CompositionRecord,
    GsbReport,
    Occurrence,
    RewriteRule,
    RuleSet,
    check_gsb,
    eliminate_leading_word,
    enumerate_irr,
    find_occurrences,
    inclusion_composition,
    lie_bracket,
    normal_form,
    structure_constants,
    substitute,
)
from .syntax import ParseError, VanishingTermWarning, parse_polynomial, parse_rules, parse_term
from .terms import (
    InvariantViolation,
    Term,
    is_normal,
    leaf,
    normal_words,
    normalize,
    pair,
    support_root,
    term_deg_lex_compare,
    term_lex_compare,
)
from .words import (
    Alphabet,
    AlphabetMismatchError,
    Ordering,
    Word,
    deg_lex_compare,
    generate_alsws,
    is_alsw,
    lex_compare,
    lyndon_factorize,
    primitive_root,
)

__version__ = "0.1.0"
