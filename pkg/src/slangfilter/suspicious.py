"""Sliding-window partial matching of words against the slang lexicon.

A fixed-length character window slides across the run-collapsed word; if any
window occurs inside the run-collapsed form of a lexicon word, the word is
flagged as suspicious. Collapsing both sides is what makes elongated
spellings ("gaaaamaa" vs "gamma") land: both reduce to "gama".
"""
from __future__ import annotations

from dataclasses import dataclass

from .normalize import Token, collapse_runs
from .store import LexiconEntry

DEFAULT_WINDOW_LENGTH = 4


@dataclass(frozen=True)
class WindowConfig:
    """Window length for the scanner; must be at least 2."""

    length: int = DEFAULT_WINDOW_LENGTH

    def __post_init__(self) -> None:
        if self.length < 2:
            raise ValueError(f"window length must be >= 2, got {self.length}")


@dataclass(frozen=True)
class SuspicionHit:
    """First partial match found for one word.

    ``offset`` is the window start within the run-collapsed word, and
    ``window`` the matching characters at that offset.
    """

    token_position: int
    word: str
    matched_slang: str
    window: str
    offset: int


def _collapsed_lexicon(slang: list[LexiconEntry]) -> list[tuple[int, str, str]]:
    """(id, lexeme, collapsed lexeme) sorted by id, the tie-break order."""
    return sorted(
        (entry.id, entry.lexeme, collapse_runs(entry.lexeme)) for entry in slang
    )


def scan_word(
    word: str,
    slang: list[LexiconEntry],
    config: WindowConfig = WindowConfig(),
    *,
    token_position: int = 0,
    _lexicon: list[tuple[int, str, str]] | None = None,
) -> SuspicionHit | None:
    """Slide a window over the collapsed word and return the first hit.

    The smallest matching offset wins; at equal offsets the lexicon entry
    with the lowest id wins. Words whose collapsed form is shorter than the
    window admit no window positions and are never flagged. The caller is
    expected to have ruled out exact lexicon membership already.
    """
    if not word:
        return None
    entries = _collapsed_lexicon(slang) if _lexicon is None else _lexicon
    collapsed = collapse_runs(word)
    length = config.length
    for offset in range(len(collapsed) - length + 1):
        window = collapsed[offset : offset + length]
        for _id, lexeme, collapsed_lexeme in entries:
            if window in collapsed_lexeme:
                return SuspicionHit(
                    token_position=token_position,
                    word=word,
                    matched_slang=lexeme,
                    window=window,
                    offset=offset,
                )
    return None


def scan_tokens(
    tokens: list[Token],
    slang: list[LexiconEntry],
    config: WindowConfig = WindowConfig(),
) -> list[SuspicionHit]:
    """Scan every token, returning hits in token order.

    Repeated words yield one hit per occurrence.
    """
    entries = _collapsed_lexicon(slang)
    hits: list[SuspicionHit] = []
    for token in tokens:
        hit = scan_word(
            token.lexeme, slang, config,
            token_position=token.position, _lexicon=entries,
        )
        if hit is not None:
            hits.append(hit)
    return hits
