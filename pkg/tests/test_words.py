import itertools

import pytest
from hypothesis import given, strategies as st

from lyndon_shirshov.words import (
    Alphabet,
    AlphabetMismatchError,
    Ordering,
    Word,
    deg_lex_compare,
    deg_lex_key,
    generate_alsws,
    is_alsw,
    lex_compare,
    lex_key,
    lyndon_factorize,
    primitive_root,
)

import oracles

AB = Alphabet.parse("a>b")
ABC = Alphabet.parse("a>b>c")

G, E, L = Ordering.GREATER, Ordering.EQUAL, Ordering.LESS


def w(text, alphabet=AB):
    return Word.parse(alphabet, text)


words_ab = st.text(alphabet="ab", min_size=1, max_size=8).map(w)


class TestAlphabet:
    def test_order_is_declaration_order(self):
        assert ABC.letters == ("a", "b", "c")
        assert ABC.index("a") == 0

    @pytest.mark.parametrize("spec", ["abc", "", "a>a", "a>>b", "1>2"])
    def test_rejects(self, spec):
        with pytest.raises(ValueError):
            Alphabet.parse(spec)

    def test_multichar_letters(self):
        X = Alphabet.parse("x1>x2")
        u = Word.parse(X, "x1.x1.x2")
        assert u.letters == (0, 0, 1)
        assert str(u) == "x1.x1.x2"


class TestLexCompare:
    @pytest.mark.parametrize(
        "u, v, expected",
        [("aab", "ab", G), ("a", "ab", G), ("ab", "a", L), ("abba", "abba", E), ("b", "ab", L)],
    )
    def test_examples(self, u, v, expected):
        assert lex_compare(w(u), w(v)) is expected

    def test_mismatched_alphabets(self):
        with pytest.raises(AlphabetMismatchError):
            lex_compare(w("a"), w("a", ABC))

    @given(words_ab, words_ab)
    def test_agrees_with_oracle(self, u, v):
        expected = E if u == v else (G if oracles.lex_greater(str(u), str(v), "ab") else L)
        assert lex_compare(u, v) is expected

    @given(words_ab, words_ab, words_ab)
    def test_strict_total_order(self, u, v, x):
        assert lex_compare(u, v) == -lex_compare(v, u)
        assert (lex_compare(u, v) is E) == (u == v)
        if lex_compare(u, v) is G and lex_compare(v, x) is G:
            assert lex_compare(u, x) is G

    @given(words_ab, words_ab)
    def test_key_matches(self, u, v):
        assert (lex_key(u) > lex_key(v)) == (lex_compare(u, v) is G)


class TestDegLexCompare:
    @pytest.mark.parametrize(
        "u, v, expected", [("a", "ab", L), ("aab", "aba", G), ("ab", "b", G), ("ba", "ba", E)]
    )
    def test_examples(self, u, v, expected):
        assert deg_lex_compare(w(u), w(v)) is expected

    @given(words_ab, words_ab, words_ab)
    def test_strict_total_order(self, u, v, x):
        assert deg_lex_compare(u, v) == -deg_lex_compare(v, u)
        if deg_lex_compare(u, v) is G and deg_lex_compare(v, x) is G:
            assert deg_lex_compare(u, x) is G

    @given(words_ab, words_ab)
    def test_key_matches(self, u, v):
        assert (deg_lex_key(u) > deg_lex_key(v)) == (deg_lex_compare(u, v) is G)


class TestAlsw:
    @pytest.mark.parametrize(
        "u, expected",
        [("aab", True), ("aa", False), ("aabbab", True), ("a", True), ("ba", False), ("abab", False)],
    )
    def test_examples(self, u, expected):
        assert is_alsw(w(u)) is expected

    def test_reference_agrees_with_oracle_up_to_12(self):
        for n in range(1, 13):
            for text in oracles.all_words("ab", n):
                assert is_alsw(w(text)) == oracles.is_alsw(text, "ab"), text

    @given(st.text(alphabet="ab", min_size=2, max_size=10))
    def test_greater_than_proper_suffixes(self, text):
        u = w(text)
        if is_alsw(u):
            for k in range(1, len(text)):
                assert lex_compare(u, w(text[k:])) is G

    def test_concatenation_of_decreasing_pair(self):
        found = generate_alsws(AB, 5)
        for u, v in itertools.product(found, repeat=2):
            if lex_compare(u, v) is G:
                assert is_alsw(u + v), (u, v)

    def test_powers_keep_order(self):
        found = generate_alsws(AB, 6)
        for u, v in itertools.product(found, repeat=2):
            if lex_compare(u, v) is G:
                for m, n in itertools.product(range(1, 4), repeat=2):
                    assert lex_compare(u * m, v * n) is G, (u, v, m, n)


class TestGenerate:
    def test_small(self):
        assert [str(u) for u in generate_alsws(AB, 1)] == ["a", "b"]
        assert [str(u) for u in generate_alsws(AB, 3)] == ["a", "b", "ab", "aab", "abb"]
        four = {str(u) for u in generate_alsws(AB, 4)} - {str(u) for u in generate_alsws(AB, 3)}
        assert four == {"aaab", "aabb", "abbb"}

    @pytest.mark.parametrize("alphabet, order, top", [(AB, "ab", 10), (ABC, "abc", 6)])
    def test_counts_against_rotation_oracle(self, alphabet, order, top):
        found = generate_alsws(alphabet, top)
        for n in range(1, top + 1):
            expected = oracles.alsws(order, n)
            got = [str(u) for u in found if len(u) == n]
            assert sorted(got) == sorted(expected)
            assert len(got) == oracles.witt(len(order), n)

    def test_ordering(self):
        found = generate_alsws(ABC, 5)
        for u, v in zip(found, found[1:]):
            assert len(u) < len(v) or lex_compare(u, v) is G

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            generate_alsws(AB, 0)


class TestFactorize:
    @pytest.mark.parametrize(
        "u, expected", [("abab", ["ab", "ab"]), ("ba", ["b", "a"]), ("aaba", ["aab", "a"])]
    )
    def test_examples(self, u, expected):
        assert [str(x) for x in lyndon_factorize(w(u))] == expected

    def test_unique_against_brute_force(self):
        for n in range(1, 9):
            for text in oracles.all_words("ab", n):
                got = [str(x) for x in lyndon_factorize(w(text))]
                assert oracles.alsw_factorizations(text, "ab") == [got], text

    @given(st.text(alphabet="abc", min_size=1, max_size=12))
    def test_round_trip(self, text):
        factors = lyndon_factorize(Word.parse(ABC, text))
        assert "".join(str(x) for x in factors) == text
        assert all(is_alsw(x) for x in factors)
        for x, y in zip(factors, factors[1:]):
            assert lex_compare(x, y) is not G


class TestPrimitiveRoot:
    @pytest.mark.parametrize(
        "u, root, n", [("abab", "ab", 2), ("aab", "aab", 1), ("aaa", "a", 3), ("b", "b", 1)]
    )
    def test_examples(self, u, root, n):
        r, k = primitive_root(w(u))
        assert (str(r), k) == (root, n)

    @given(st.text(alphabet="ab", min_size=1, max_size=4), st.integers(1, 4))
    def test_powers(self, text, n):
        r, k = primitive_root(w(text * n))
        assert r * k == w(text * n)
        assert k % n == 0 or len(text) % len(r) == 0
        assert primitive_root(r) == (r, 1)
