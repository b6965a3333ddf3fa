"""File-backed store for the filter's four tables.

A store is a directory of JSON-lines files, one per table, plus a plain-text
stop word list:

    slang.jsonl       {"id": 10, "lexeme": "alpha"}
    soundalike.jsonl  {"variant": "alfa", "canonical": "alpha"}
    concepts.jsonl    {"id": 1, "name": "Movie", "weight": 10, "synset": [...]}
    suspicious.jsonl  {"id": 62, "word": "kalphaa", "count": 1, "value": 10,
                       "matched_slang": "alpha"}
    stopwords.txt     one lowercase word per line, '#' starts a comment
    audit.jsonl       append-only review decisions (see append_audit)

Missing table files are treated as empty tables; stopwords.txt is required.
Writes go through a temp file and an atomic rename, and identical bundles
always serialize to identical bytes.

Mutations must be serialized through a single writer; read-only snapshots can
be shared freely.
"""
from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

SLANG_FILE = "slang.jsonl"
SOUNDALIKE_FILE = "soundalike.jsonl"
CONCEPTS_FILE = "concepts.jsonl"
SUSPICIOUS_FILE = "suspicious.jsonl"
STOPWORDS_FILE = "stopwords.txt"
AUDIT_FILE = "audit.jsonl"


class StoreError(Exception):
    """Raised for malformed store files or invariant violations."""


@dataclass(frozen=True)
class LexiconEntry:
    """A known slang word with its stable id."""

    id: int
    lexeme: str


@dataclass(frozen=True)
class SoundAlikeEntry:
    """An abbreviated/variant spelling mapped to its canonical slang word."""

    variant: str
    canonical: str


@dataclass(frozen=True)
class ConceptEntry:
    """A named concept, its synset (word set) and its assigned weight."""

    id: int
    name: str
    synset: tuple[str, ...]
    weight: int


@dataclass
class SuspiciousRecord:
    """A flagged word with its occurrence counter and accumulated weight.

    ``count`` is the number of observations, ``value`` the exact sum of the
    weights applied across them. ``matched_slang`` is the lexicon word that
    first raised the flag and is kept unchanged on later observations.
    """

    id: int
    word: str
    count: int
    value: int
    matched_slang: str


@dataclass
class StoreBundle:
    """In-memory image of one store directory.

    The next-id counters are process-lifetime state: ids freed by removals
    are never handed out again while this bundle lives.
    """

    slang: list[LexiconEntry] = field(default_factory=list)
    soundalike: list[SoundAlikeEntry] = field(default_factory=list)
    concepts: list[ConceptEntry] = field(default_factory=list)
    suspicious: list[SuspiciousRecord] = field(default_factory=list)
    stopwords: set[str] = field(default_factory=set)
    _next_slang_id: int = field(init=False, repr=False, compare=False, default=1)
    _next_suspicious_id: int = field(init=False, repr=False, compare=False, default=1)

    def __post_init__(self) -> None:
        self._next_slang_id = max((e.id for e in self.slang), default=0) + 1
        self._next_suspicious_id = max((r.id for r in self.suspicious), default=0) + 1

    def slang_lexemes(self) -> set[str]:
        return {e.lexeme for e in self.slang}

    def find_suspicious(self, word: str) -> SuspiciousRecord | None:
        for record in self.suspicious:
            if record.word == word:
                return record
        return None


def _check_word(value: object, what: str, where: str) -> str:
    if not isinstance(value, str) or not value:
        raise StoreError(f"{where}: {what} must be a non-empty string")
    if value != value.lower():
        raise StoreError(f"{where}: {what} {value!r} must be lowercase")
    if any(ch.isspace() for ch in value):
        raise StoreError(f"{where}: {what} {value!r} contains whitespace")
    return value


def _check_positive_int(value: object, what: str, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise StoreError(f"{where}: {what} must be a positive integer, got {value!r}")
    return value


def _read_jsonl(path: Path, fields: tuple[str, ...]) -> list[tuple[dict, str]]:
    """Read a JSONL table file into (record, "file:line") pairs.

    A missing file is an empty table. Each line must be a JSON object with
    exactly the given field names.
    """
    if not path.exists():
        return []
    rows: list[tuple[dict, str]] = []
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            where = f"{path}:{lineno}"
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except ValueError as exc:
                raise StoreError(f"{where}: malformed line: {exc}") from exc
            if not isinstance(obj, dict) or set(obj) != set(fields):
                raise StoreError(
                    f"{where}: expected fields {list(fields)}, got "
                    f"{sorted(obj) if isinstance(obj, dict) else type(obj).__name__}"
                )
            rows.append((obj, where))
    return rows


def _read_stopwords(path: Path) -> set[str]:
    if not path.exists():
        raise StoreError(f"{path}: stopwords file is required")
    words: set[str] = set()
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            word = line.split("#", 1)[0].strip()
            if word:
                words.add(_check_word(word, "stop word", f"{path}:{lineno}"))
    return words


def load_store(directory: str | Path) -> StoreBundle:
    """Load a store directory, enforcing every table invariant.

    Raises StoreError (with file and line number where applicable) on
    malformed lines, duplicate lexemes or dangling cross-references.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise StoreError(f"{directory}: store directory does not exist")

    slang = [
        LexiconEntry(
            id=_check_positive_int(obj["id"], "id", where),
            lexeme=_check_word(obj["lexeme"], "lexeme", where),
        )
        for obj, where in _read_jsonl(directory / SLANG_FILE, ("id", "lexeme"))
    ]
    soundalike = [
        SoundAlikeEntry(
            variant=_check_word(obj["variant"], "variant", where),
            canonical=_check_word(obj["canonical"], "canonical", where),
        )
        for obj, where in _read_jsonl(directory / SOUNDALIKE_FILE, ("variant", "canonical"))
    ]
    concepts = []
    for obj, where in _read_jsonl(
        directory / CONCEPTS_FILE, ("id", "name", "weight", "synset")
    ):
        if not isinstance(obj["synset"], list) or not obj["synset"]:
            raise StoreError(f"{where}: synset must be a non-empty list")
        if not isinstance(obj["name"], str) or not obj["name"]:
            raise StoreError(f"{where}: name must be a non-empty string")
        concepts.append(
            ConceptEntry(
                id=_check_positive_int(obj["id"], "id", where),
                name=obj["name"],
                synset=tuple(_check_word(w, "synset word", where) for w in obj["synset"]),
                weight=_check_positive_int(obj["weight"], "weight", where),
            )
        )
    suspicious = [
        SuspiciousRecord(
            id=_check_positive_int(obj["id"], "id", where),
            word=_check_word(obj["word"], "word", where),
            count=_check_positive_int(obj["count"], "count", where),
            value=_check_positive_int(obj["value"], "value", where),
            matched_slang=_check_word(obj["matched_slang"], "matched_slang", where),
        )
        for obj, where in _read_jsonl(
            directory / SUSPICIOUS_FILE, ("id", "word", "count", "value", "matched_slang")
        )
    ]

    bundle = StoreBundle(
        slang=slang,
        soundalike=soundalike,
        concepts=concepts,
        suspicious=suspicious,
        stopwords=_read_stopwords(directory / STOPWORDS_FILE),
    )
    validate_bundle(bundle)
    return bundle


def validate_bundle(bundle: StoreBundle) -> None:
    """Check every cross-table invariant, raising StoreError on the first hit."""
    lexemes = set()
    ids = set()
    for entry in bundle.slang:
        if entry.lexeme in lexemes:
            raise StoreError(f"duplicate lexeme in slang lexicon: {entry.lexeme!r}")
        if entry.id in ids:
            raise StoreError(f"duplicate id in slang lexicon: {entry.id}")
        lexemes.add(entry.lexeme)
        ids.add(entry.id)

    variants = set()
    for entry in bundle.soundalike:
        if entry.variant in variants:
            raise StoreError(f"duplicate variant in sounds-alike table: {entry.variant!r}")
        if entry.canonical not in lexemes:
            raise StoreError(
                f"sounds-alike variant {entry.variant!r} references unknown "
                f"slang word {entry.canonical!r}"
            )
        variants.add(entry.variant)

    concept_ids = set()
    for concept in bundle.concepts:
        if concept.id in concept_ids:
            raise StoreError(f"duplicate concept id: {concept.id}")
        if len(set(concept.synset)) != len(concept.synset):
            raise StoreError(f"concept {concept.name!r} has duplicate synset words")
        concept_ids.add(concept.id)

    words = set()
    suspicious_ids = set()
    for record in bundle.suspicious:
        if record.word in words:
            raise StoreError(f"duplicate word in suspicious table: {record.word!r}")
        if record.id in suspicious_ids:
            raise StoreError(f"duplicate id in suspicious table: {record.id}")
        if record.word in lexemes:
            raise StoreError(
                f"word {record.word!r} is in both the slang lexicon and the suspicious table"
            )
        if record.matched_slang not in lexemes:
            raise StoreError(
                f"suspicious word {record.word!r} references unknown "
                f"slang word {record.matched_slang!r}"
            )
        words.add(record.word)
        suspicious_ids.add(record.id)


def slang_to_json(entry: LexiconEntry) -> dict:
    return {"id": entry.id, "lexeme": entry.lexeme}


def soundalike_to_json(entry: SoundAlikeEntry) -> dict:
    return {"variant": entry.variant, "canonical": entry.canonical}


def concept_to_json(entry: ConceptEntry) -> dict:
    return {"id": entry.id, "name": entry.name, "weight": entry.weight,
            "synset": list(entry.synset)}


def suspicious_to_json(record: SuspiciousRecord) -> dict:
    return {"id": record.id, "word": record.word, "count": record.count,
            "value": record.value, "matched_slang": record.matched_slang}


def _write_atomic(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _dump_jsonl(records: list[dict]) -> str:
    return "".join(json.dumps(obj, ensure_ascii=False) + "\n" for obj in records)


def persist_store(bundle: StoreBundle, directory: str | Path) -> None:
    """Write all table files atomically; nothing is written if the bundle is invalid."""
    validate_bundle(bundle)
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    _write_atomic(directory / SLANG_FILE,
                  _dump_jsonl([slang_to_json(e) for e in bundle.slang]))
    _write_atomic(directory / SOUNDALIKE_FILE,
                  _dump_jsonl([soundalike_to_json(e) for e in bundle.soundalike]))
    _write_atomic(directory / CONCEPTS_FILE,
                  _dump_jsonl([concept_to_json(e) for e in bundle.concepts]))
    _write_atomic(directory / SUSPICIOUS_FILE,
                  _dump_jsonl([suspicious_to_json(r) for r in bundle.suspicious]))
    _write_atomic(directory / STOPWORDS_FILE,
                  "".join(word + "\n" for word in sorted(bundle.stopwords)))


def add_slang(bundle: StoreBundle, lexeme: str) -> bool:
    """Append ``lexeme`` to the slang lexicon with the next id.

    Returns False (and changes nothing) if the lexeme is already present.
    A suspicious record for the same word, if any, is dropped so that no word
    ever sits in both tables.
    """
    if not lexeme:
        raise ValueError("add_slang: empty lexeme")
    if lexeme != lexeme.lower() or any(ch.isspace() for ch in lexeme):
        raise ValueError(f"add_slang: lexeme {lexeme!r} is not normalized")
    if lexeme in bundle.slang_lexemes():
        return False
    bundle.slang.append(LexiconEntry(id=bundle._next_slang_id, lexeme=lexeme))
    bundle._next_slang_id += 1
    bundle.suspicious = [r for r in bundle.suspicious if r.word != lexeme]
    return True


def upsert_suspicious(
    bundle: StoreBundle, word: str, matched_slang: str, weight: int
) -> SuspiciousRecord:
    """Record one observation of a suspicious word.

    A new word gets a fresh record with count=1 and value=weight; an existing
    record gets count+1 and value+weight.
    """
    if isinstance(weight, bool) or not isinstance(weight, int) or weight < 1:
        raise ValueError(f"upsert_suspicious: weight must be >= 1, got {weight!r}")
    if word in bundle.slang_lexemes():
        raise StoreError(f"{word!r} is already in the slang lexicon")
    if matched_slang not in bundle.slang_lexemes():
        raise StoreError(f"matched slang word {matched_slang!r} is not in the lexicon")
    record = bundle.find_suspicious(word)
    if record is None:
        record = SuspiciousRecord(
            id=bundle._next_suspicious_id, word=word, count=1, value=weight,
            matched_slang=matched_slang,
        )
        bundle._next_suspicious_id += 1
        bundle.suspicious.append(record)
    else:
        record.count += 1
        record.value += weight
    return record


def append_audit(directory: str | Path, record: dict) -> None:
    """Append one review decision to the store's audit log."""
    path = Path(directory) / AUDIT_FILE
    with path.open("a", encoding="utf-8") as fh:
        fh.write(json.dumps(record, ensure_ascii=False) + "\n")


def read_audit(directory: str | Path) -> list[dict]:
    path = Path(directory) / AUDIT_FILE
    if not path.exists():
        return []
    with path.open(encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]
