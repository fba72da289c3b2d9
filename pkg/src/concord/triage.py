"""Disagreement triage: verdicts, corpus revisions, and the round cycle.

Human verdicts land in an append-only JSONL ledger. Verdicts that blame
the annotations or the data prep carry a revision (relabel one turn,
merge two labels, fix a turn's text); advancing to the next round
replays the staged revisions onto the corpus, rebuilds the pair
dataset, re-predicts, and re-evaluates. Replaying the same ledger over
the same corpus always reproduces the same state, which is the whole
crash-recovery story.
"""

from __future__ import annotations

import json
import tempfile
from dataclasses import dataclass, field, replace as dc_replace
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Mapping, Sequence, Union

from .corpus import AnnotatedQuestion, AnnotationLabel, Corpus, Dialog, Turn
from .errors import (
    BackendError,
    EmptyDomainError,
    RevisionConflict,
    RoundStateError,
    ValidationError,
)
from .gateway import Backend, JobStatus, PredictionRecord, RemoteBackend
from .metrics import Disagreement, MetricsReport, evaluate, extract_disagreements
from .pairs import (
    PairDataset,
    Split,
    SplitSpec,
    build_pairs,
    filter_hapaxes,
    split,
    write_pairs,
)


def utc_now_iso() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class VerdictCategory(str, Enum):
    PREDICTION_ERROR = "prediction_error"
    ANNOTATION_ERROR = "annotation_error"
    PREP_ERROR = "prep_error"


_CATEGORY_ALIASES = {
    "pred": VerdictCategory.PREDICTION_ERROR,
    "prediction": VerdictCategory.PREDICTION_ERROR,
    "ann": VerdictCategory.ANNOTATION_ERROR,
    "annotation": VerdictCategory.ANNOTATION_ERROR,
    "prep": VerdictCategory.PREP_ERROR,
    "preparation": VerdictCategory.PREP_ERROR,
}


def parse_category(raw: str) -> VerdictCategory:
    key = raw.strip().rstrip(".").lower()
    try:
        return VerdictCategory(key)
    except ValueError:
        pass
    try:
        return _CATEGORY_ALIASES[key]
    except KeyError:
        raise ValidationError(f"unknown verdict category {raw!r}") from None


# --- revisions ---------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class RelabelTurn:
    turn_id: str
    new_label: str


@dataclass(frozen=True, slots=True)
class MergeLabels:
    source_label: str
    target_label: str

    def __post_init__(self) -> None:
        if self.source_label.strip() == self.target_label.strip():
            raise ValidationError("merge source and target must differ")


@dataclass(frozen=True, slots=True)
class EditText:
    turn_id: str
    new_text: str


RevisionAction = Union[RelabelTurn, MergeLabels, EditText]

_ACTION_TYPES = {
    "relabel_turn": RelabelTurn,
    "merge_labels": MergeLabels,
    "edit_text": EditText,
}
_ACTION_NAMES = {cls: name for name, cls in _ACTION_TYPES.items()}


def action_to_dict(action: RevisionAction) -> dict:
    out = {"type": _ACTION_NAMES[type(action)]}
    if isinstance(action, RelabelTurn):
        out.update(turn_id=action.turn_id, new_label=action.new_label)
    elif isinstance(action, MergeLabels):
        out.update(source_label=action.source_label, target_label=action.target_label)
    else:
        out.update(turn_id=action.turn_id, new_text=action.new_text)
    return out


def action_from_dict(obj: Mapping) -> RevisionAction:
    try:
        cls = _ACTION_TYPES[obj["type"]]
        kwargs = {k: obj[k] for k in obj if k != "type"}
        return cls(**kwargs)
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed revision action: {exc}") from None


@dataclass(frozen=True, slots=True)
class Revision:
    """One ledgered corpus edit, applied in rev_id order."""

    rev_id: int
    action: RevisionAction
    provenance: str  # pair_id of the verdict that produced it


def apply_revisions(corpus: Corpus, revisions: Sequence[Revision]) -> Corpus:
    """Apply edits in order; returns a new corpus version, parent linked.

    An empty list still bumps the version so every round advance leaves
    a distinct corpus_version. Turns and dialogs are never added or
    removed here, only labels and texts change.
    """
    labels = {q.turn.turn_id: q.label.value for q in corpus.questions}
    texts = {t.turn_id: t.text for d in corpus.dialogs for t in d.turns}

    for rev in revisions:
        action = rev.action
        try:
            if isinstance(action, RelabelTurn):
                if action.turn_id not in labels:
                    raise RevisionConflict(
                        f"turn {action.turn_id!r} is not an annotated question", rev.rev_id
                    )
                labels[action.turn_id] = AnnotationLabel(action.new_label).value
            elif isinstance(action, MergeLabels):
                source = AnnotationLabel(action.source_label).value
                target = AnnotationLabel(action.target_label).value
                hits = [tid for tid, value in labels.items() if value == source]
                if not hits:
                    raise RevisionConflict(f"label {source!r} not present", rev.rev_id)
                for tid in hits:
                    labels[tid] = target
            elif isinstance(action, EditText):
                if action.turn_id not in texts:
                    raise RevisionConflict(f"unknown turn {action.turn_id!r}", rev.rev_id)
                if not action.new_text.strip():
                    raise RevisionConflict("replacement text is empty", rev.rev_id)
                texts[action.turn_id] = action.new_text
            else:  # pragma: no cover - enum of actions is closed
                raise RevisionConflict(f"unknown action {action!r}", rev.rev_id)
        except ValidationError as exc:
            raise RevisionConflict(str(exc), rev.rev_id) from None

    new_dialogs = tuple(
        Dialog(
            d.dialog_id,
            d.participants,
            tuple(
                Turn(t.turn_id, t.dialog_id, t.index, t.speaker, texts[t.turn_id])
                for t in d.turns
            ),
        )
        for d in corpus.dialogs
    )
    turns_by_id = {t.turn_id: t for d in new_dialogs for t in d.turns}
    new_questions = tuple(
        AnnotatedQuestion(
            turn=turns_by_id[q.turn.turn_id],
            label=AnnotationLabel(labels[q.turn.turn_id]),
        )
        for q in corpus.questions
    )
    return Corpus(
        version_id=corpus.version_id + 1,
        dialogs=new_dialogs,
        questions=new_questions,
        parent_version=corpus.version_id,
    )


# --- ledger ------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Verdict:
    pair_id: str
    category: VerdictCategory
    note: str = ""
    actor: str = "anonymous"
    timestamp: str = ""  # stamped at record time when empty


@dataclass(frozen=True, slots=True)
class LedgerEntry:
    """One persisted verdict (with its optional revision action)."""

    rev_id: int
    timestamp: str
    actor: str
    pair_id: str
    category: VerdictCategory
    action: RevisionAction | None
    note: str = ""


@dataclass(frozen=True, slots=True)
class RoundMarker:
    """Ledger line recording that a round was closed and revisions applied."""

    rev_id: int
    timestamp: str
    actor: str


LedgerRecord = Union[LedgerEntry, RoundMarker]


def entry_to_dict(record: LedgerRecord) -> dict:
    if isinstance(record, RoundMarker):
        return {
            "rev_id": record.rev_id,
            "timestamp": record.timestamp,
            "actor": record.actor,
            "type": "round_advance",
        }
    out: dict = {
        "rev_id": record.rev_id,
        "timestamp": record.timestamp,
        "actor": record.actor,
        "pair_id": record.pair_id,
        "category": record.category.value,
        "action": action_to_dict(record.action) if record.action else None,
    }
    if record.note:
        out["note"] = record.note
    return out


def entry_from_dict(obj: Mapping, line_no: int | None = None) -> LedgerRecord:
    where = f"ledger line {line_no}: " if line_no else ""
    try:
        rev_id = obj["rev_id"]
        timestamp = obj["timestamp"]
        actor = obj.get("actor", "")
        if not isinstance(rev_id, int) or not isinstance(timestamp, str):
            raise ValidationError(f"{where}bad rev_id or timestamp")
        if obj.get("type") == "round_advance":
            return RoundMarker(rev_id, timestamp, actor)
        action = obj.get("action")
        return LedgerEntry(
            rev_id=rev_id,
            timestamp=timestamp,
            actor=actor,
            pair_id=obj["pair_id"],
            category=VerdictCategory(obj["category"]),
            action=action_from_dict(action) if action is not None else None,
            note=obj.get("note", ""),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"{where}malformed ledger record: {exc}") from None


def dumps_ledger(records: Sequence[LedgerRecord]) -> str:
    return "".join(
        json.dumps(entry_to_dict(r), ensure_ascii=False) + "\n" for r in records
    )


def loads_ledger(text: str) -> list[LedgerRecord]:
    records: list[LedgerRecord] = []
    last = 0
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"ledger line {line_no}: invalid JSON: {exc.msg}") from None
        record = entry_from_dict(obj, line_no)
        if record.rev_id <= last:
            raise ValidationError(
                f"ledger line {line_no}: rev_id {record.rev_id} not increasing"
            )
        last = record.rev_id
        records.append(record)
    return records


def read_ledger(path: str | Path) -> list[LedgerRecord]:
    p = Path(path)
    if not p.exists():
        return []
    return loads_ledger(p.read_text(encoding="utf-8"))


def append_ledger(path: str | Path, record: LedgerRecord) -> None:
    with open(path, "a", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps(entry_to_dict(record), ensure_ascii=False) + "\n")


# --- rounds ------------------------------------------------------------------


@dataclass(frozen=True)
class RoundState:
    """Everything one round knows: data, predictions, verdicts so far."""

    round_no: int
    corpus: Corpus
    dataset: PairDataset
    predictions: tuple[PredictionRecord, ...]
    metrics: MetricsReport
    disagreements: tuple[Disagreement, ...]
    verdicts: dict[str, LedgerEntry]  # latest per pair_id
    next_rev_id: int
    spec: SplitSpec
    min_count: int
    eval_split: Split | None
    train_config: Mapping = field(default_factory=dict)

    @property
    def corpus_version(self) -> int:
        return self.corpus.version_id

    @property
    def open_ids(self) -> list[str]:
        return [d.pair_id for d in self.disagreements if d.pair_id not in self.verdicts]

    @property
    def open_count(self) -> int:
        return len(self.open_ids)

    @property
    def closed_count(self) -> int:
        return len(self.disagreements) - self.open_count

    def disagreement(self, pair_id: str) -> Disagreement:
        for d in self.disagreements:
            if d.pair_id == pair_id:
                return d
        raise ValidationError(f"pair {pair_id!r} is not a disagreement of round {self.round_no}")


def staged_revisions(state: RoundState) -> list[Revision]:
    """Revisions from the latest verdicts, in ledger (rev_id) order."""
    staged = [
        Revision(rev_id=e.rev_id, action=e.action, provenance=e.pair_id)
        for e in state.verdicts.values()
        if e.action is not None
    ]
    staged.sort(key=lambda r: r.rev_id)
    return staged


def verdict_tally(state: RoundState) -> dict[str, int]:
    tally = {c.value: 0 for c in VerdictCategory}
    for entry in state.verdicts.values():
        tally[entry.category.value] += 1
    return tally


def _dataset_subset(dataset: PairDataset, part: Split) -> PairDataset:
    pairs = dataset.slice(part)
    return PairDataset(pairs, {p.pair_id: part for p in pairs}, seed=dataset.seed)


def train_backend(
    backend: Backend,
    dataset: PairDataset,
    config: Mapping | None = None,
    workdir: str | Path | None = None,
    timeout: float = 3600.0,
) -> JobStatus:
    """Train on the dataset's train/val slices and wait for completion.

    Remote backends get the slices exported as TSV files; built-ins
    train on nothing.
    """
    config = dict(config or {})
    if isinstance(backend, RemoteBackend):
        out = Path(workdir) if workdir else Path(tempfile.mkdtemp(prefix="concord-train-"))
        out.mkdir(parents=True, exist_ok=True)
        train_uri, val_uri = out / "train.tsv", out / "val.tsv"
        write_pairs(_dataset_subset(dataset, Split.TRAIN), train_uri)
        write_pairs(_dataset_subset(dataset, Split.VAL), val_uri)
        job = backend.train(str(train_uri), str(val_uri), config)
    else:
        job = backend.train("", "", config)
    status = job.wait(timeout=timeout)
    if status.status != "succeeded":
        raise BackendError(f"training failed: {status.detail or status.status}")
    return status


def start_round(
    corpus: Corpus,
    backend: Backend,
    spec: SplitSpec = SplitSpec(),
    min_count: int = 2,
    eval_split: Split | None = Split.TEST,
    train_config: Mapping | None = None,
    round_no: int = 1,
    next_rev_id: int = 1,
    train: bool = False,
    workdir: str | Path | None = None,
) -> RoundState:
    """Build pairs, (optionally) train, predict, evaluate; open the round."""
    questions = filter_hapaxes(corpus, min_count)
    dataset = split(build_pairs(questions), spec)
    if train:
        train_backend(backend, dataset, train_config, workdir)
    gold = dataset.slice(eval_split)
    if not gold:
        name = eval_split.value if eval_split else "all"
        raise EmptyDomainError(f"evaluation slice {name!r} is empty")
    predictions = tuple(backend.predict(gold))
    report = evaluate(predictions, gold)
    disagreements = tuple(extract_disagreements(predictions, gold, corpus))
    return RoundState(
        round_no=round_no,
        corpus=corpus,
        dataset=dataset,
        predictions=predictions,
        metrics=report,
        disagreements=disagreements,
        verdicts={},
        next_rev_id=next_rev_id,
        spec=spec,
        min_count=min_count,
        eval_split=eval_split,
        train_config=dict(train_config or {}),
    )


def record_verdict(
    state: RoundState, verdict: Verdict, action: RevisionAction | None = None
) -> tuple[RoundState, LedgerEntry]:
    """Close (or re-close) one disagreement; later verdicts supersede earlier.

    prediction_error verdicts stage nothing and must not carry a
    revision; the other two categories must carry one.
    """
    state.disagreement(verdict.pair_id)  # unknown pair -> error
    if verdict.category is VerdictCategory.PREDICTION_ERROR:
        if action is not None:
            raise ValidationError("prediction_error verdicts take no revision")
    elif action is None:
        raise ValidationError(f"{verdict.category.value} verdicts require a revision")

    entry = LedgerEntry(
        rev_id=state.next_rev_id,
        timestamp=verdict.timestamp or utc_now_iso(),
        actor=verdict.actor,
        pair_id=verdict.pair_id,
        category=verdict.category,
        action=action,
        note=verdict.note,
    )
    verdicts = dict(state.verdicts)
    verdicts[verdict.pair_id] = entry
    next_state = dc_replace(state, verdicts=verdicts, next_rev_id=state.next_rev_id + 1)
    return next_state, entry


def next_round(
    state: RoundState,
    backend: Backend,
    spec: SplitSpec | None = None,
    actor: str = "system",
    timestamp: str = "",
    train: bool = True,
    workdir: str | Path | None = None,
) -> tuple[RoundState, RoundMarker]:
    """Apply staged revisions, retrain from scratch, open the next round.

    Training is a no-op for backends that do not train; pass
    ``train=False`` to skip it entirely (e.g. when probing a frozen
    model against revised gold labels).
    """
    if state.open_count:
        raise RoundStateError(
            f"round {state.round_no} has {state.open_count} open disagreements"
        )
    corpus = apply_revisions(state.corpus, staged_revisions(state))
    marker = RoundMarker(
        rev_id=state.next_rev_id, timestamp=timestamp or utc_now_iso(), actor=actor
    )
    new_state = start_round(
        corpus,
        backend,
        spec or state.spec,
        state.min_count,
        state.eval_split,
        state.train_config,
        round_no=state.round_no + 1,
        next_rev_id=state.next_rev_id + 1,
        train=train,
        workdir=workdir,
    )
    return new_state, marker


def replay(
    corpus: Corpus,
    records: Sequence[LedgerRecord],
    backend: Backend,
    spec: SplitSpec = SplitSpec(),
    min_count: int = 2,
    eval_split: Split | None = Split.TEST,
    train_config: Mapping | None = None,
    train_first: bool = False,
    train_on_advance: bool = True,
) -> RoundState:
    """Reconstruct the current round by replaying a ledger from scratch.

    Requires a deterministic backend (or an unchanged remote model):
    each round's disagreement set is recomputed, so verdicts must still
    refer to actual disagreements. Round markers retrain exactly as the
    live ``next_round`` did, keeping replayed rounds bit-identical.
    """
    state = start_round(
        corpus, backend, spec, min_count, eval_split, train_config, train=train_first
    )
    for record in records:
        if record.rev_id != state.next_rev_id:
            raise ValidationError(
                f"ledger rev_id {record.rev_id} does not continue the round "
                f"(expected {state.next_rev_id})"
            )
        if isinstance(record, RoundMarker):
            state, _ = next_round(
                state,
                backend,
                actor=record.actor,
                timestamp=record.timestamp,
                train=train_on_advance,
            )
        else:
            verdict = Verdict(
                pair_id=record.pair_id,
                category=record.category,
                note=record.note,
                actor=record.actor,
                timestamp=record.timestamp,
            )
            state, _ = record_verdict(state, verdict, record.action)
    return state


def round_report(state: RoundState) -> dict:
    """Round summary: metrics, verdict tallies, queue and dataset shape."""
    return {
        "round": state.round_no,
        "corpus_version": state.corpus_version,
        "eval_split": state.eval_split.value if state.eval_split else "all",
        "metrics": state.metrics.to_dict(),
        "metrics_rendered": state.metrics.rendered(),
        "verdicts": verdict_tally(state),
        "disagreements": {
            "total": len(state.disagreements),
            "open": state.open_count,
            "closed": state.closed_count,
        },
        "dataset": state.dataset.stats.to_dict(),
    }
