"""Detection of abbreviated/sounds-alike slang forms.

Primary route is an exact lookup in the curated variant table. An optional
fallback keys words phonetically (Soundex-style) and matches them against the
slang lexicon, so unlisted respellings like "alfa" still resolve to "alpha".
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .normalize import Token
from .store import LexiconEntry, SoundAlikeEntry

_SOUNDEX_CODES = {}
for _letters, _digit in (
    ("bfpv", "1"),
    ("cgjkqsxz", "2"),
    ("dt", "3"),
    ("l", "4"),
    ("mn", "5"),
    ("r", "6"),
):
    for _ch in _letters:
        _SOUNDEX_CODES[_ch] = _digit

_DROPPED = frozenset("aeiouyhw")


@dataclass(frozen=True)
class SoundAlikeMatch:
    token_position: int
    variant: str
    canonical: str
    source: Literal["table", "phonetic"]


def phonetic_key(lexeme: str) -> str:
    """Four-character phonetic key: uppercase letter plus three digits 0-6.

    Non-letter characters are ignored; a,e,i,o,u,y,h,w are dropped after the
    first position; the rest map to digit classes and adjacent equal codes
    collapse (also against the first letter's own code). Because repeated
    letters never add codes, elongations like "bbbbetaa" key the same as
    "beta".
    """
    letters = [ch for ch in lexeme.lower() if "a" <= ch <= "z"]
    if not letters:
        raise ValueError(f"phonetic_key: no letters in {lexeme!r}")
    prev = _SOUNDEX_CODES.get(letters[0], "")
    digits = []
    for ch in letters[1:]:
        if ch in _DROPPED:
            continue
        code = _SOUNDEX_CODES[ch]
        if code != prev:
            digits.append(code)
            prev = code
    return (letters[0].upper() + "".join(digits))[:4].ljust(4, "0")


def lookup_variant(token: Token, table: list[SoundAlikeEntry]) -> SoundAlikeMatch | None:
    """Exact variant-table lookup for one token."""
    for entry in table:
        if entry.variant == token.lexeme:
            return SoundAlikeMatch(
                token_position=token.position,
                variant=token.lexeme,
                canonical=entry.canonical,
                source="table",
            )
    return None


def _key_index(slang: list[LexiconEntry]) -> dict[str, str]:
    """Phonetic key -> canonical lexeme, keeping the lowest-id entry per key."""
    index: dict[str, str] = {}
    for entry in sorted(slang, key=lambda e: e.id):
        index.setdefault(phonetic_key(entry.lexeme), entry.lexeme)
    return index


def detect_soundalike(
    tokens: list[Token],
    table: list[SoundAlikeEntry],
    slang: list[LexiconEntry],
    fallback_enabled: bool = False,
) -> list[SoundAlikeMatch]:
    """Report sounds-alike matches in token order.

    The variant table wins over the phonetic fallback for any given token;
    fallback ties across key-equal lexicon entries go to the lowest id.
    """
    index = _key_index(slang) if fallback_enabled else {}
    matches: list[SoundAlikeMatch] = []
    for token in tokens:
        match = lookup_variant(token, table)
        if match is None and fallback_enabled:
            try:
                key = phonetic_key(token.lexeme)
            except ValueError:
                continue
            canonical = index.get(key)
            if canonical is not None:
                match = SoundAlikeMatch(
                    token_position=token.position,
                    variant=token.lexeme,
                    canonical=canonical,
                    source="phonetic",
                )
        if match is not None:
            matches.append(match)
    return matches
