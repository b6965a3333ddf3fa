"""The staged filtering pipeline and the human review hooks.

Stage order per text: tokenize, strip stop words, derive the concept, then
exact detection, sounds-alike detection and the suspicious-word scan. Each
stage only runs when the previous one found nothing, so a token is never
reported in two categories. Suspicious hits feed the learner; exact or
sounds-alike verdicts never touch the learning state.

Instead of blocking on a human mid-filter, suspicious words land in a review
queue; moderators confirm or dismiss them later via apply_review.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from typing import Literal

from .exact import ExactMatch, detect_exact
from .learner import ConceptMatch, LearnerConfig, derive_concept, maybe_promote, observe_suspicious
from .normalize import strip_stopwords, tokenize
from .soundalike import SoundAlikeMatch, detect_soundalike
from .store import StoreBundle, add_slang
from .suspicious import SuspicionHit, WindowConfig, scan_tokens


class Verdict(str, Enum):
    CLEAN = "Clean"
    BLOCKED = "Blocked"
    NEEDS_REVISION = "NeedsRevision"
    FLAGGED = "Flagged"


class Mode(str, Enum):
    ENFORCE = "enforce"
    REPORT = "report"


@dataclass(frozen=True)
class PipelineConfig:
    mode: Mode = Mode.ENFORCE
    window: WindowConfig = WindowConfig()
    learner: LearnerConfig = LearnerConfig()
    soundalike_fallback: bool = False


@dataclass
class DetectionReport:
    """Per-text verdict plus everything each detector found.

    At most one of the three match lists is non-empty; ``promotions`` names
    words that crossed the threshold while this text was processed.
    """

    verdict: Verdict
    exact_matches: list[ExactMatch] = field(default_factory=list)
    soundalike_matches: list[SoundAlikeMatch] = field(default_factory=list)
    suspicion_hits: list[SuspicionHit] = field(default_factory=list)
    concept: ConceptMatch | None = None
    promotions: list[str] = field(default_factory=list)

    def permits_forwarding(self, mode: Mode) -> bool:
        """Whether the caller may forward the text onward.

        Report mode never rejects; enforce mode rejects Blocked and
        NeedsRevision texts, while Flagged text may proceed.
        """
        if mode is Mode.REPORT:
            return True
        return self.verdict in (Verdict.CLEAN, Verdict.FLAGGED)


@dataclass(frozen=True)
class ReviewDecision:
    word: str
    action: Literal["confirm", "dismiss"]
    decided_at: datetime

    def __post_init__(self) -> None:
        if self.action not in ("confirm", "dismiss"):
            raise ValueError(f"unknown review action {self.action!r}")

    def to_json(self) -> dict:
        decided = self.decided_at.astimezone(timezone.utc)
        return {
            "word": self.word,
            "action": self.action,
            "decided_at": decided.isoformat(timespec="seconds").replace("+00:00", "Z"),
        }


def make_decision(word: str, action: Literal["confirm", "dismiss"]) -> ReviewDecision:
    return ReviewDecision(word=word, action=action, decided_at=datetime.now(timezone.utc))


def process(
    text: str, store: StoreBundle, config: PipelineConfig = PipelineConfig()
) -> DetectionReport:
    """Run one text through the full pipeline and update the learning state.

    Only the suspicious path mutates the store: each hit is accumulated and
    then checked for promotion. The mode does not change what is detected or
    learned, only what permits_forwarding tells the caller afterwards.
    """
    tokens = strip_stopwords(tokenize(text), store.stopwords)
    concept = derive_concept(tokens, store.concepts)

    exact = detect_exact(tokens, store.slang)
    if exact:
        return DetectionReport(verdict=Verdict.BLOCKED, exact_matches=exact, concept=concept)

    soundalike = detect_soundalike(
        tokens, store.soundalike, store.slang, config.soundalike_fallback
    )
    if soundalike:
        return DetectionReport(
            verdict=Verdict.NEEDS_REVISION, soundalike_matches=soundalike, concept=concept
        )

    hits = scan_tokens(tokens, store.slang, config.window)
    promotions: list[str] = []
    for hit in hits:
        if hit.word in store.slang_lexemes():
            continue  # promoted by an earlier hit in this same text
        observe_suspicious(store, hit, concept, config.learner)
        if maybe_promote(store, hit.word, config.learner):
            promotions.append(hit.word)

    verdict = Verdict.FLAGGED if hits else Verdict.CLEAN
    return DetectionReport(
        verdict=verdict, suspicion_hits=hits, concept=concept, promotions=promotions
    )


def apply_review(store: StoreBundle, decision: ReviewDecision) -> None:
    """Apply a moderator's decision on a queued suspicious word.

    Confirm moves the word into the slang lexicon (dropping its record);
    dismiss keeps the record untouched so evidence keeps accumulating.
    Callers owning a store directory should also append the decision to the
    audit log.
    """
    if store.find_suspicious(decision.word) is None:
        raise KeyError(f"no suspicious record for {decision.word!r}")
    if decision.action == "confirm":
        add_slang(store, decision.word)


def report_to_dict(report: DetectionReport) -> dict:
    """Stable JSON form of a report: lists in token order, fixed key order."""
    concept = None
    if report.concept is not None:
        concept = {
            "id": report.concept.concept.id,
            "name": report.concept.concept.name,
            "weight": report.concept.concept.weight,
            "overlap": report.concept.overlap,
        }
    return {
        "verdict": report.verdict.value,
        "concept": concept,
        "exact_matches": [
            {"token_position": m.token_position, "lexeme": m.lexeme}
            for m in report.exact_matches
        ],
        "soundalike_matches": [
            {
                "token_position": m.token_position,
                "variant": m.variant,
                "canonical": m.canonical,
                "source": m.source,
            }
            for m in report.soundalike_matches
        ],
        "suspicion_hits": [
            {
                "token_position": h.token_position,
                "word": h.word,
                "matched_slang": h.matched_slang,
                "window": h.window,
                "offset": h.offset,
            }
            for h in report.suspicion_hits
        ],
        "promotions": list(report.promotions),
    }
