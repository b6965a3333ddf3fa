"""Concept derivation and the evidence-accumulation learning loop.

The concept of a text is the concept whose synset shares the most distinct
words with it. Each sighting of a suspicious word adds that concept's weight
to the word's accumulated value; once the value reaches the promotion
threshold the word graduates into the slang lexicon.
"""
from __future__ import annotations

from dataclasses import dataclass

from .normalize import Token
from .store import ConceptEntry, StoreBundle, SuspiciousRecord, add_slang, upsert_suspicious
from .suspicious import SuspicionHit

DEFAULT_THRESHOLD = 50
DEFAULT_WEIGHT = 1


@dataclass(frozen=True)
class ConceptMatch:
    """The winning concept and how many distinct text words hit its synset."""

    concept: ConceptEntry
    overlap: int


@dataclass(frozen=True)
class LearnerConfig:
    """Promotion threshold and the weight used when no concept is derivable."""

    threshold: int = DEFAULT_THRESHOLD
    default_weight: int = DEFAULT_WEIGHT

    def __post_init__(self) -> None:
        if self.threshold < 1:
            raise ValueError(f"threshold must be >= 1, got {self.threshold}")
        if self.default_weight < 1:
            raise ValueError(f"default_weight must be >= 1, got {self.default_weight}")


def derive_concept(
    tokens: list[Token], concepts: list[ConceptEntry]
) -> ConceptMatch | None:
    """Pick the concept with the largest synset intersection.

    Intersection counts distinct lexemes, so word repetitions do not tilt the
    result. Ties go to the higher weight, then the lower concept id; a text
    overlapping no synset at all has no concept.
    """
    lexemes = {t.lexeme for t in tokens}
    best: ConceptMatch | None = None
    best_key: tuple[int, int, int] | None = None
    for concept in concepts:
        overlap = len(lexemes.intersection(concept.synset))
        if overlap == 0:
            continue
        key = (overlap, concept.weight, -concept.id)
        if best_key is None or key > best_key:
            best = ConceptMatch(concept=concept, overlap=overlap)
            best_key = key
    return best


def observe_suspicious(
    store: StoreBundle,
    hit: SuspicionHit,
    concept: ConceptMatch | None,
    config: LearnerConfig = LearnerConfig(),
) -> SuspiciousRecord:
    """Accumulate one sighting of a suspicious word into the store.

    The applied weight is the derived concept's weight, or the configured
    default when the text had no recognizable concept.
    """
    weight = concept.concept.weight if concept is not None else config.default_weight
    return upsert_suspicious(store, hit.word, hit.matched_slang, weight)


def maybe_promote(
    store: StoreBundle, word: str, config: LearnerConfig = LearnerConfig()
) -> bool:
    """Promote ``word`` into the slang lexicon once its value reaches the threshold.

    Returns True and removes the suspicious record on promotion, False (and
    no change) while the word is still below the threshold.
    """
    record = store.find_suspicious(word)
    if record is None:
        raise KeyError(f"no suspicious record for {word!r}")
    if record.value >= config.threshold:
        add_slang(store, word)
        return True
    return False
