"""Tokenization, stop-word removal and repeated-character collapsing.

Everything here is pure and safe to call from any thread.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import groupby

# Strips leading/trailing non-alphanumeric characters (underscore included);
# punctuation inside a word (hyphens, apostrophes) is kept.
_EDGE_PUNCT = re.compile(r"^[\W_]+|[\W_]+$")


@dataclass(frozen=True)
class Token:
    """One word of the input text.

    ``raw`` is the surface form as it appeared, ``lexeme`` the lowercase form
    with edge punctuation stripped, ``position`` the 0-based index among the
    emitted tokens (stable even after stop words are removed later).
    """

    raw: str
    lexeme: str
    position: int


def tokenize(text: str) -> list[Token]:
    """Split ``text`` on whitespace into normalized tokens.

    Pieces that are all punctuation vanish; the rest are lowercased with
    leading/trailing punctuation stripped. Empty text yields an empty list.
    """
    tokens: list[Token] = []
    for piece in text.split():
        lexeme = _EDGE_PUNCT.sub("", piece).lower()
        if lexeme:
            tokens.append(Token(raw=piece, lexeme=lexeme, position=len(tokens)))
    return tokens


def strip_stopwords(tokens: list[Token], stopwords: set[str]) -> list[Token]:
    """Drop tokens whose lexeme is a stop word, preserving order and positions."""
    return [t for t in tokens if t.lexeme not in stopwords]


def collapse_runs(lexeme: str) -> str:
    """Replace every maximal run of one repeated character by a single one.

    "gaaaamaa" becomes "gama", "bbbbetaa" becomes "beta". Idempotent; the
    result is always a subsequence of the input. Elongated spellings of a
    word collapse to the same form as the word itself, which is what lets
    the window scanner line them up against lexicon entries.
    """
    if not lexeme:
        raise ValueError("collapse_runs: empty input")
    return "".join(ch for ch, _run in groupby(lexeme))
