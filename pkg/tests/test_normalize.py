"""Tokenizer, stop-word stripping and run collapsing."""
from __future__ import annotations

import random
import string

import pytest

from slangfilter import Token, collapse_runs, strip_stopwords, tokenize


def lexemes(tokens):
    return [t.lexeme for t in tokens]


class TestTokenize:
    def test_lowercases_and_strips_edge_punctuation(self):
        tokens = tokenize("Hello, WORLD!!")
        assert tokens == [
            Token(raw="Hello,", lexeme="hello", position=0),
            Token(raw="WORLD!!", lexeme="world", position=1),
        ]

    def test_positions_are_contiguous_over_emitted_tokens(self):
        tokens = tokenize("one  two\tthree\nfour")
        assert [t.position for t in tokens] == [0, 1, 2, 3]
        assert lexemes(tokens) == ["one", "two", "three", "four"]

    def test_pure_punctuation_chunks_are_dropped(self):
        assert lexemes(tokenize("wait ... what ?!")) == ["wait", "what"]

    def test_intra_word_punctuation_is_retained(self):
        assert lexemes(tokenize("it's a state-of-the-art demo")) == [
            "it's", "a", "state-of-the-art", "demo",
        ]

    def test_empty_and_blank_inputs(self):
        assert tokenize("") == []
        assert tokenize("   \n\t ") == []

    def test_deterministic(self):
        text = "Some Text, with MIXED case and trailing dots..."
        assert tokenize(text) == tokenize(text)


class TestStripStopwords:
    def test_removes_stop_words_keeping_order_and_positions(self):
        tokens = tokenize("the actor and the film")
        kept = strip_stopwords(tokens, {"the", "and"})
        assert lexemes(kept) == ["actor", "film"]
        assert [t.position for t in kept] == [1, 4]

    def test_no_stopwords_is_identity(self):
        tokens = tokenize("alpha beta gamma")
        assert strip_stopwords(tokens, set()) == tokens

    def test_never_reorders(self):
        rng = random.Random(7)
        words = ["w%d" % i for i in range(30)]
        stops = set(rng.sample(words, 10))
        kept = strip_stopwords(tokenize(" ".join(words)), stops)
        positions = [t.position for t in kept]
        assert positions == sorted(positions)


class TestCollapseRuns:
    def test_identity_without_runs(self):
        assert collapse_runs("abc") == "abc"

    def test_collapses_elongation(self):
        assert collapse_runs("gaaaamaa") == "gama"
        assert collapse_runs("gamma") == "gama"
        assert collapse_runs("bbbbetaa") == "beta"

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            collapse_runs("")

    def test_properties_hold_on_random_words(self):
        rng = random.Random(20240811)
        for _ in range(300):
            word = "".join(
                rng.choice(string.ascii_lowercase[:6])
                for _ in range(rng.randint(1, 20))
            )
            collapsed = collapse_runs(word)
            # idempotence
            assert collapse_runs(collapsed) == collapsed
            # no two equal adjacent characters
            assert all(a != b for a, b in zip(collapsed, collapsed[1:]))
            # subsequence of the original
            it = iter(word)
            assert all(ch in it for ch in collapsed)
