"""Slang/jargon text filter with a semi-supervised learning review loop."""

from .exact import ExactMatch, detect_exact
from .learner import (
    ConceptMatch,
    LearnerConfig,
    derive_concept,
    maybe_promote,
    observe_suspicious,
)
from .normalize import Token, collapse_runs, strip_stopwords, tokenize
from .pipeline import (
    DetectionReport,
    Mode,
    PipelineConfig,
    ReviewDecision,
    Verdict,
    apply_review,
    make_decision,
    process,
    report_to_dict,
)
from .seeds import DEFAULT_STOPWORDS, seed_bundle
from .soundalike import SoundAlikeMatch, detect_soundalike, lookup_variant, phonetic_key
from .store import (
    ConceptEntry,
    LexiconEntry,
    SoundAlikeEntry,
    StoreBundle,
    StoreError,
    SuspiciousRecord,
    add_slang,
    load_store,
    persist_store,
    upsert_suspicious,
)
from .suspicious import SuspicionHit, WindowConfig, scan_tokens, scan_word

__version__ = "0.1.0"

__all__ = [
    "ConceptEntry",
    "ConceptMatch",
    "DEFAULT_STOPWORDS",
    "DetectionReport",
    "ExactMatch",
    "LearnerConfig",
    "LexiconEntry",
    "Mode",
    "PipelineConfig",
    "ReviewDecision",
    "SoundAlikeEntry",
    "SoundAlikeMatch",
    "StoreBundle",
    "StoreError",
    "SuspicionHit",
    "SuspiciousRecord",
    "Token",
    "Verdict",
    "WindowConfig",
    "add_slang",
    "apply_review",
    "collapse_runs",
    "derive_concept",
    "detect_exact",
    "detect_soundalike",
    "load_store",
    "lookup_variant",
    "make_decision",
    "maybe_promote",
    "observe_suspicious",
    "persist_store",
    "phonetic_key",
    "process",
    "report_to_dict",
    "scan_tokens",
    "scan_word",
    "seed_bundle",
    "strip_stopwords",
    "tokenize",
    "upsert_suspicious",
]
