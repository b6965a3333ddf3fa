"""Exact detection of slang words by lexicon membership."""
from __future__ import annotations

from dataclasses import dataclass

from .normalize import Token
from .store import LexiconEntry


@dataclass(frozen=True)
class ExactMatch:
    token_position: int
    lexeme: str


def detect_exact(tokens: list[Token], slang: list[LexiconEntry]) -> list[ExactMatch]:
    """Report every token whose lexeme is in the slang lexicon, in token order.

    All matches are collected; deciding whether one match already rejects the
    whole text is the pipeline's job.
    """
    lexemes = {entry.lexeme for entry in slang}
    return [
        ExactMatch(token_position=t.position, lexeme=t.lexeme)
        for t in tokens
        if t.lexeme in lexemes
    ]
