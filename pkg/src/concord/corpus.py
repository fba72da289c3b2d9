"""Annotated dialog corpora: parsing, validation, versioning, and audits.

A corpus is a set of dialogs whose questioner turns may carry a semantic
annotation label. Labels are unitary strings: equality is exact string
comparison after trimming outer whitespace, and turn text is stored
verbatim (typos and all) because downstream triage depends on seeing the
raw data.

Corpus values are immutable; every revising operation returns a new value
with ``version_id`` bumped and ``parent_version`` linked.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import IO, Iterable, Iterator

from .errors import CorpusParseError, ValidationError
from .wordlist import common_words

__all__ = [
    "Speaker",
    "Turn",
    "AnnotationLabel",
    "AnnotatedQuestion",
    "Dialog",
    "Corpus",
    "Replacement",
    "AnonymizationReport",
    "parse_corpus",
    "serialize_corpus",
    "annotation_histogram",
    "anonymize",
    "audit_anonymization",
]


class Speaker(str, Enum):
    QUESTIONER = "questioner"
    ANSWERER = "answerer"


@dataclass(frozen=True, slots=True)
class Turn:
    """One dialog turn. ``text`` is verbatim; never normalized."""

    turn_id: str
    dialog_id: str
    index: int
    speaker: Speaker
    text: str


@dataclass(frozen=True, slots=True)
class AnnotationLabel:
    """A unitary propositional label, e.g. ``e.valence==negative``.

    The predicate syntax inside the string is deliberately not parsed;
    two labels are equal iff their trimmed strings are equal.
    """

    value: str

    def __post_init__(self):
        object.__setattr__(self, "value", self.value.strip())
        if not self.value:
            raise ValidationError("annotation label must be non-empty")


@dataclass(frozen=True, slots=True)
class AnnotatedQuestion:
    """A questioner turn plus its single annotation label."""

    turn: Turn
    label: AnnotationLabel


@dataclass(frozen=True, slots=True)
class Dialog:
    dialog_id: str
    participants: tuple[str, ...]
    turns: tuple[Turn, ...]


@dataclass(frozen=True)
class Corpus:
    version_id: int
    dialogs: tuple[Dialog, ...]
    questions: tuple[AnnotatedQuestion, ...]
    parent_version: int | None = None
    _turns_by_id: dict[str, Turn] = field(
        init=False, repr=False, compare=False, default_factory=dict
    )
    _labels_by_turn: dict[str, AnnotationLabel] = field(
        init=False, repr=False, compare=False, default_factory=dict
    )

    def __post_init__(self):
        turns = {t.turn_id: t for d in self.dialogs for t in d.turns}
        labels = {q.turn.turn_id: q.label for q in self.questions}
        object.__setattr__(self, "_turns_by_id", turns)
        object.__setattr__(self, "_labels_by_turn", labels)

    def turn(self, turn_id: str) -> Turn:
        try:
            return self._turns_by_id[turn_id]
        except KeyError:
            raise ValidationError(f"unknown turn_id {turn_id!r}") from None

    def label_of(self, turn_id: str) -> AnnotationLabel:
        try:
            return self._labels_by_turn[turn_id]
        except KeyError:
            raise ValidationError(f"turn {turn_id!r} has no annotation") from None

    def has_turn(self, turn_id: str) -> bool:
        return turn_id in self._turns_by_id

    def is_question(self, turn_id: str) -> bool:
        return turn_id in self._labels_by_turn

    @property
    def n_turns(self) -> int:
        return len(self._turns_by_id)


@dataclass(frozen=True, slots=True)
class Replacement:
    """One anonymization site: where a username (would have) turned into a token."""

    turn_id: str
    original_span: str
    replacement_token: str

    def to_dict(self) -> dict:
        return {
            "turn_id": self.turn_id,
            "original_span": self.original_span,
            "replacement_token": self.replacement_token,
        }


@dataclass(frozen=True)
class AnonymizationReport:
    """Every identified replacement site, plus the subset that collides with
    common vocabulary. Collision sites are left untouched unless forced, so
    the applied set is ``replacements`` minus ``collisions`` (all of
    ``replacements`` under force)."""

    replacements: tuple[Replacement, ...]
    collisions: tuple[Replacement, ...]
    forced: bool = False

    def to_json(self) -> str:
        return json.dumps(
            {
                "replacements": [r.to_dict() for r in self.replacements],
                "collisions": [r.to_dict() for r in self.collisions],
                "forced": self.forced,
            },
            ensure_ascii=False,
            indent=2,
        )


# --- parsing / serialization -------------------------------------------------

_META_KEY = "corpus_version"


def parse_corpus(source: IO[bytes] | IO[str] | Iterable[str]) -> Corpus:
    """Parse corpus JSONL (one dialog per line) into a validated Corpus.

    A leading metadata line ``{"corpus_version": .., "parent_version": ..}``
    is honored when present; plain dialog-only streams come out at version 1.
    """
    version_id = 1
    parent_version = None
    dialogs: list[Dialog] = []
    questions: list[AnnotatedQuestion] = []
    seen_turn_ids: set[str] = set()
    seen_dialog_ids: set[str] = set()

    for line_no, raw in enumerate(_iter_lines(source), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusParseError(f"invalid JSON: {exc.msg}", line_no) from None
        if not isinstance(obj, dict):
            raise CorpusParseError("expected a JSON object", line_no)

        if _META_KEY in obj and "dialog_id" not in obj:
            if line_no != 1:
                raise CorpusParseError("metadata line only allowed first", line_no)
            version_id = _expect(obj, _META_KEY, int, line_no)
            parent_version = obj.get("parent_version")
            if parent_version is not None and not isinstance(parent_version, int):
                raise CorpusParseError("parent_version must be an integer", line_no)
            continue

        dialog = _parse_dialog(obj, line_no, seen_turn_ids, seen_dialog_ids, questions)
        dialogs.append(dialog)

    return Corpus(
        version_id=version_id,
        dialogs=tuple(dialogs),
        questions=tuple(questions),
        parent_version=parent_version,
    )


def _iter_lines(source) -> Iterator[str]:
    if hasattr(source, "read"):
        data = source.read()
        if isinstance(data, bytes):
            data = data.decode("utf-8")
        yield from data.split("\n")
    else:
        for item in source:
            if isinstance(item, bytes):
                item = item.decode("utf-8")
            yield from item.split("\n") if "\n" in item else (item,)


def _expect(obj: dict, key: str, typ, line_no: int):
    value = obj.get(key)
    if not isinstance(value, typ) or (typ is int and isinstance(value, bool)):
        raise CorpusParseError(f"field {key!r} must be {typ.__name__}", line_no)
    return value


def _parse_dialog(obj, line_no, seen_turn_ids, seen_dialog_ids, questions) -> Dialog:
    dialog_id = _expect(obj, "dialog_id", str, line_no)
    if dialog_id in seen_dialog_ids:
        raise ValidationError(f"duplicate dialog_id {dialog_id!r} (line {line_no})")
    seen_dialog_ids.add(dialog_id)

    participants = obj.get("participants", [])
    if not isinstance(participants, list) or not all(isinstance(p, str) for p in participants):
        raise CorpusParseError("field 'participants' must be a list of strings", line_no)

    raw_turns = obj.get("turns")
    if not isinstance(raw_turns, list):
        raise CorpusParseError("field 'turns' must be a list", line_no)

    turns: list[Turn] = []
    for pos, t in enumerate(raw_turns):
        if not isinstance(t, dict):
            raise CorpusParseError(f"turn {pos} must be an object", line_no)
        turn_id = _expect(t, "turn_id", str, line_no)
        index = _expect(t, "index", int, line_no)
        speaker_raw = _expect(t, "speaker", str, line_no)
        text = _expect(t, "text", str, line_no)

        if turn_id in seen_turn_ids:
            raise ValidationError(f"duplicate turn_id {turn_id!r} (line {line_no})")
        seen_turn_ids.add(turn_id)
        if index != pos:
            raise ValidationError(
                f"dialog {dialog_id!r}: turn index {index} at position {pos}; "
                "indices must be 0-based and contiguous"
            )
        try:
            speaker = Speaker(speaker_raw)
        except ValueError:
            raise CorpusParseError(f"unknown speaker {speaker_raw!r}", line_no) from None
        if not text.strip():
            raise ValidationError(f"turn {turn_id!r}: text is empty")

        turn = Turn(turn_id=turn_id, dialog_id=dialog_id, index=index, speaker=speaker, text=text)
        turns.append(turn)

        if "annotation" in t:
            annotation = t["annotation"]
            if not isinstance(annotation, str):
                raise CorpusParseError("field 'annotation' must be a string", line_no)
            if speaker is not Speaker.QUESTIONER:
                raise ValidationError(
                    f"turn {turn_id!r}: annotation on {speaker.value} turn; "
                    "only questioner turns carry labels"
                )
            questions.append(AnnotatedQuestion(turn=turn, label=AnnotationLabel(annotation)))

    return Dialog(dialog_id=dialog_id, participants=tuple(participants), turns=tuple(turns))


def serialize_corpus(corpus: Corpus) -> str:
    """Serialize to corpus JSONL. Deterministic: equal corpora yield equal bytes."""
    lines = []
    if corpus.version_id != 1 or corpus.parent_version is not None:
        meta: dict = {_META_KEY: corpus.version_id}
        if corpus.parent_version is not None:
            meta["parent_version"] = corpus.parent_version
        lines.append(json.dumps(meta, ensure_ascii=False))
    annotations = {q.turn.turn_id: q.label.value for q in corpus.questions}
    for dialog in corpus.dialogs:
        turns = []
        for t in dialog.turns:
            entry: dict = {
                "turn_id": t.turn_id,
                "index": t.index,
                "speaker": t.speaker.value,
                "text": t.text,
            }
            if t.turn_id in annotations:
                entry["annotation"] = annotations[t.turn_id]
            turns.append(entry)
        lines.append(
            json.dumps(
                {
                    "dialog_id": dialog.dialog_id,
                    "participants": list(dialog.participants),
                    "turns": turns,
                },
                ensure_ascii=False,
            )
        )
    return "\n".join(lines) + ("\n" if lines else "")


def write_corpus(corpus: Corpus, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fp:
        fp.write(serialize_corpus(corpus))


def read_corpus(path) -> Corpus:
    with open(path, "rb") as fp:
        return parse_corpus(fp)


# --- operations ----------------------------------------------------------------


def annotation_histogram(corpus: Corpus) -> dict[AnnotationLabel, int]:
    """Occurrence count per distinct label; counts sum to ``len(questions)``."""
    return dict(Counter(q.label for q in corpus.questions))


def anonymize(
    corpus: Corpus,
    usernames: list[str],
    dictionary: set[str] | None = None,
    force: bool = False,
) -> tuple[Corpus, AnonymizationReport]:
    """Replace whole-word, case-sensitive username occurrences with ``userNN``.

    NN is the username's index in ``usernames``. A username that is also a
    common word (per ``dictionary``, defaulting to the bundled frequency
    list) is reported as a collision and left alone unless ``force`` is set:
    replacing such strings is exactly how "did you have a test tomorrow?"
    becomes "did you have a user13 tomorrow?".

    Labels, turn ids, and turn order are never touched. When nothing is
    applied the input corpus is returned unchanged (same version).
    """
    for name in usernames:
        if not name or not name.strip():
            raise ValidationError("usernames must be non-empty strings")
    if dictionary is None:
        dictionary = common_words()

    patterns = [
        (i, name, re.compile(r"(?<!\w)" + re.escape(name) + r"(?!\w)"))
        for i, name in enumerate(usernames)
    ]

    replacements: list[Replacement] = []
    collisions: list[Replacement] = []
    new_dialogs: list[Dialog] = []
    changed = False

    for dialog in corpus.dialogs:
        new_turns: list[Turn] = []
        for turn in dialog.turns:
            text = turn.text
            for i, name, pattern in patterns:
                token = f"user{i}"
                is_collision = name.lower() in dictionary
                hits = pattern.findall(text)
                for span in hits:
                    site = Replacement(turn.turn_id, span, token)
                    replacements.append(site)
                    if is_collision:
                        collisions.append(site)
                if hits and (force or not is_collision):
                    text = pattern.sub(token, text)
            if text != turn.text:
                changed = True
                turn = Turn(turn.turn_id, turn.dialog_id, turn.index, turn.speaker, text)
            new_turns.append(turn)
        new_dialogs.append(Dialog(dialog.dialog_id, dialog.participants, tuple(new_turns)))

    report = AnonymizationReport(
        replacements=tuple(replacements), collisions=tuple(collisions), forced=force
    )
    if not changed:
        return corpus, report

    turns_by_id = {t.turn_id: t for d in new_dialogs for t in d.turns}
    new_questions = tuple(
        AnnotatedQuestion(turn=turns_by_id[q.turn.turn_id], label=q.label)
        for q in corpus.questions
    )
    revised = Corpus(
        version_id=corpus.version_id + 1,
        dialogs=tuple(new_dialogs),
        questions=new_questions,
        parent_version=corpus.version_id,
    )
    return revised, report


_ARTICLES = {"a", "an", "the"}


def audit_anonymization(corpus: Corpus, replacement_pattern: str = "userNN") -> list[str]:
    """Heuristic sweep for replacement tokens sitting where a name can't.

    A token directly preceded by an article ("a userNN") was almost
    certainly a common noun before anonymization ran; those turns are
    returned as suspects, in corpus order.
    """
    token_re = re.compile(r"(?<!\w)" + re.escape(replacement_pattern).replace("NN", r"\d+") + r"(?!\w)")
    suspects: list[str] = []
    for dialog in corpus.dialogs:
        for turn in dialog.turns:
            for match in token_re.finditer(turn.text):
                preceding = turn.text[: match.start()].split()
                if preceding and preceding[-1].strip("\"'.,;:!?()").lower() in _ARTICLES:
                    suspects.append(turn.turn_id)
                    break
    return suspects
