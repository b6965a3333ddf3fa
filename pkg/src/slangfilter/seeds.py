"""Seed fixtures for a freshly initialized store.

A fresh store starts from a small demonstration lexicon (Greek letter names
standing in for real slang), four concepts with hand-assigned weights, two
sound-alike variants, and an English function-word stop list. All of it is
replaceable: edit the store files or grow the lexicon through review.
"""
from __future__ import annotations

from .store import ConceptEntry, LexiconEntry, SoundAlikeEntry, StoreBundle

SEED_SLANG: tuple[tuple[int, str], ...] = (
    (10, "alpha"),
    (11, "beta"),
    (12, "gamma"),
    (13, "delta"),
    (37, "epsilon"),
    (40, "lambda"),
    (41, "upsilon"),
)

# (cid, name, synset, weight); frozen as-is, fragments included; tests pin
# the exact contents, so edits here are deliberate data changes.
SEED_CONCEPTS: tuple[tuple[int, str, tuple[str, ...], int], ...] = (
    (1, "Movie", ("song", "actor", "actress", "director", "film", "cam"), 10),
    (2, "Sports", ("match", "cricket", "football", "player", "ground"), 7),
    (3, "Business", ("import", "export", "sell", "purchase", "shop", "ma"), 6),
    (4, "Education", ("teacher", "student", "subject", "class", "vacatio"), 3),
)

SEED_SOUNDALIKE: tuple[tuple[str, str], ...] = (
    ("alfa", "alpha"),
    ("gama", "gamma"),
)

# Small English function-word list: articles, prepositions, pronouns,
# auxiliaries, conjunctions. Overridable per store via stopwords.txt.
DEFAULT_STOPWORDS: frozenset[str] = frozenset("""
    a about above after again against all am an and any are as at
    be because been before being below between both but by
    can could did do does doing down during
    each few for from further
    had has have having he her here hers herself him himself his how
    i if in into is it its itself just
    me might more most must my myself
    no nor not now
    of off on once only or other our ours ourselves out over own
    same shall she should so some such
    than that the their theirs them themselves then there these they this
    those through to too
    under until up upon very
    was we were what when where which while who whom why will with would
    you your yours yourself yourselves
""".split())


def seed_bundle() -> StoreBundle:
    """Build the bundle a fresh store is initialized with."""
    return StoreBundle(
        slang=[LexiconEntry(id=i, lexeme=w) for i, w in SEED_SLANG],
        soundalike=[SoundAlikeEntry(variant=v, canonical=c) for v, c in SEED_SOUNDALIKE],
        concepts=[
            ConceptEntry(id=i, name=n, synset=s, weight=w)
            for i, n, s, w in SEED_CONCEPTS
        ],
        suspicious=[],
        stopwords=set(DEFAULT_STOPWORDS),
    )
