"""Self-contained review-loop walkthrough plus a benchmark-scale fixture.

``demo_corpus`` is a small annotated question corpus whose first review
round surfaces exactly 22 disagreements: 16 model mistakes, 4 annotation
mistakes and 2 preprocessing casualties. ``demo_plan`` is the reviewer
script that closes the queue; after the round advances, the retrained
(scripted) model agrees with the revised corpus everywhere.

``reference_corpus`` generates a deterministic large corpus with the
same shape as a real annotation effort: 1096 questions of which 543
survive hapax filtering, 294306 ordered pairs, 4588 positives.

Run the walkthrough service with ``python -m concord.demo serve``.
"""

from __future__ import annotations

import json
import random
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from pathlib import Path

from .corpus import (
    AnnotatedQuestion,
    AnnotationLabel,
    Corpus,
    Dialog,
    Speaker,
    Turn,
    write_corpus,
)
from .errors import BackendError
from .gateway import (
    Backend,
    CompletedJob,
    PredictionRecord,
    TrainJob,
    reference_labels_from_corpus,
)
from .pairs import PairInstance, make_pair_id
from .triage import (
    EditText,
    MergeLabels,
    RelabelTurn,
    Revision,
    RevisionAction,
    Verdict,
    VerdictCategory,
    action_to_dict,
    apply_revisions,
)

# --- the walkthrough corpus --------------------------------------------------

_FIXED_EXAM_TEXT = "would you feel it if you had a test the next day?"

# One dialog per guessing game; (turn key, question text, annotation label).
_DEMO_DIALOGS: tuple[tuple[str, tuple[tuple[str, str, str], ...]], ...] = (
    (
        "grief-01",
        (
            ("q1", "Do you feel like this when someone close to you dies?", "causedBy(e,lossOfLovedOne)"),
            ("q2", "do you feel it when someone dear has passed away?", "causedBy(e,lossOfLovedOne)"),
            ("q3", "would you feel it if someone close to you had died?", "causedBy(e,lossOfLovedOne)"),
        ),
    ),
    (
        "envy-02",
        (
            ("q1", "jealosy?", "similar(e,jealousy)"),
            ("q2", "haha, jealousy?", "similar(e,jealousy)"),
            ("q3", "Jealousy?", "similar(e,jealousy)"),
        ),
    ),
    (
        "disappointment-03",
        (
            ("q1", "id it related to sth disappointing? *is", "relatedTo(e,disappointment)"),
            ("q2", "similar to disappointed?", "associated(e,disappointment)"),
            ("q3", "is it close to being disappointed", "associated(e,disappointment)"),
            ("q4", "is it related to disappointment?", "relatedTo(e,disappointment)"),
        ),
    ),
    (
        "melancholy-04",
        (
            ("q1", "is it melancholic?", "similar(e,melancholy)"),
            ("q2", "is it less severe that depressed, sth like melancholic", "similar(e,melancholy)"),
        ),
    ),
    (
        "misery-05",
        (
            ("q1", "is it like misery?", "similar(e,misery)"),
            ("q2", "misery?", "similar(e,misery)"),
        ),
    ),
    (
        "optimism-06",
        (
            ("q1", "is it like being optimistic?", "similar(e,optimism)"),
            ("q2", "is it kinda like being optmistic?", "similar(e,optimism)"),
        ),
    ),
    (
        "awe-07",
        (
            ("q1", "stronger thanoverwhelmed?", "moreIntenseThan(e,overwhelmed)"),
            ("q2", "is it more intense than overwhelmed?", "moreIntenseThan(e,overwhelmed)"),
        ),
    ),
    (
        "shyness-08",
        (
            ("q1", "is it shy?", "similar(e,shyness)"),
            ("q2", "is it like being shy?", "similar(e,shyness)"),
        ),
    ),
    (
        "gloom-09",
        (
            ("q1", "is it like depression?", "similar(e,depression)"),
            ("q2", "so would this be an emotion that might be assimilated to depression", "associated(e,depression)"),
            ("q3", "is it like feeling depressed?", "similar(e,depression)"),
            ("q4", "is it associated with depression?", "associated(e,depression)"),
        ),
    ),
    (
        "joy-10",
        (
            ("q1", "so more like plain happy?", "similar(e,happiness)"),
            ("q2", "is it similar to happy?", "similar(e,happiness)"),
        ),
    ),
    (
        "annoyance-11",
        (
            ("q1", "is it associated with being aggravated?", "associated(e,aggravation)"),
            ("q2", "how about with aggravation?", "associated(e,aggravation)"),
        ),
    ),
    (
        "distrust-12",
        (
            ("q1", "would you most likely feel this towards someone you don't know?", "feltTowards(e,stranger)"),
            ("q2", "thanks, do you feel the emotion towards strangers?", "feltTowards(e,stranger)"),
        ),
    ),
    (
        "envy-13",
        (
            ("q1", "is there another person involved?", "associated(e,otherPerson)"),
            ("q2", "does it relate to how you feel about other people?", "relatedTo(e,otherPeople)"),
            ("q3", "is this emotion always related to another persons influence?", "relatedTo(e,otherPeople)"),
            ("q4", "is another person associated with the feeling?", "associated(e,otherPerson)"),
        ),
    ),
    (
        "betrayal-14",
        (
            ("q1", "felt during betrayal?", "situation(e,betrayal)"),
            ("q2", "are there other situations when you'd feel this emotions besides betrayal?", "situation(e,otherThanBetrayal)"),
            ("q3", "do you feel it when betrayed?", "situation(e,betrayal)"),
            ("q4", "could it come up in situations other than betrayal?", "situation(e,otherThanBetrayal)"),
        ),
    ),
    (
        "anxiety-15",
        (
            ("q1", "would you feel it if you had an exam the next day?", "anticipation(e,exam)"),
            ("q2", "would you feel it if you had a user13 the next day?", "anticipation(e,exam)"),
        ),
    ),
)

_ANSWERS = ("yes.", "no.", "sort of.", "i think so.", "maybe.")


_PARTICIPANTS = tuple(f"p{n:02d}" for n in range(1, 9))


def _assemble(
    dialogs: Sequence[tuple[str, tuple[str, str], Sequence[tuple[str, str, str]]]],
) -> Corpus:
    built: list[Dialog] = []
    questions: list[AnnotatedQuestion] = []
    for dialog_id, participants, rows in dialogs:
        turns: list[Turn] = []
        for n, (key, text, label) in enumerate(rows):
            q = Turn(
                turn_id=f"{dialog_id}-{key}",
                dialog_id=dialog_id,
                index=len(turns),
                speaker=Speaker.QUESTIONER,
                text=text,
            )
            turns.append(q)
            questions.append(AnnotatedQuestion(turn=q, label=AnnotationLabel(label)))
            turns.append(
                Turn(
                    turn_id=f"{dialog_id}-a{n + 1}",
                    dialog_id=dialog_id,
                    index=len(turns),
                    speaker=Speaker.ANSWERER,
                    text=_ANSWERS[n % len(_ANSWERS)],
                )
            )
        built.append(Dialog(dialog_id=dialog_id, participants=participants, turns=tuple(turns)))
    return Corpus(version_id=1, dialogs=tuple(built), questions=tuple(questions))


def _pair_of_players(n: int) -> tuple[str, str]:
    pool = _PARTICIPANTS
    return pool[(2 * n) % len(pool)], pool[(2 * n + 1) % len(pool)]


def demo_corpus() -> Corpus:
    """40 questions, 19 labels, 1560 ordered pairs of which 46 are positive."""
    return _assemble(
        tuple(
            (dialog_id, _pair_of_players(n), rows)
            for n, (dialog_id, rows) in enumerate(_DEMO_DIALOGS)
        )
    )


# --- the reviewer script -------------------------------------------------


@dataclass(frozen=True)
class PlannedVerdict:
    """One scripted queue decision: the flagged pair and how to close it."""

    q1_id: str
    q2_id: str
    category: VerdictCategory
    action: RevisionAction | None
    note: str

    @property
    def pair_id(self) -> str:
        return make_pair_id(self.q1_id, self.q2_id)


_PRED = VerdictCategory.PREDICTION_ERROR
_ANN = VerdictCategory.ANNOTATION_ERROR
_PREP = VerdictCategory.PREP_ERROR

_MERGE_DISAPPOINTMENT = MergeLabels("relatedTo(e,disappointment)", "associated(e,disappointment)")
_MERGE_DEPRESSION = MergeLabels("similar(e,depression)", "associated(e,depression)")
_MERGE_OTHER_PERSON = MergeLabels("associated(e,otherPerson)", "relatedTo(e,otherPeople)")
_FIX_EXAM = EditText("anxiety-15-q2", _FIXED_EXAM_TEXT)

_DEMO_PLAN: tuple[PlannedVerdict, ...] = (
    PlannedVerdict("grief-01-q1", "grief-01-q2", _PRED, None, "clear paraphrase, model missed it"),
    PlannedVerdict("envy-02-q1", "envy-02-q2", _PRED, None, "typo plus filler word confused the model"),
    PlannedVerdict("disappointment-03-q1", "disappointment-03-q2", _ANN, _MERGE_DISAPPOINTMENT, "same intent, the two labels should be one"),
    PlannedVerdict("anxiety-15-q1", "anxiety-15-q2", _PREP, _FIX_EXAM, "placeholder token replaced a common noun"),
    PlannedVerdict("awe-07-q1", "awe-07-q2", _PRED, None, "missing space hid the comparison"),
    PlannedVerdict("grief-01-q2", "grief-01-q3", _PRED, None, "tense change only"),
    PlannedVerdict("melancholy-04-q1", "melancholy-04-q2", _PRED, None, "longer phrasing of the same probe"),
    PlannedVerdict("misery-05-q1", "misery-05-q2", _PRED, None, "elliptical repeat"),
    PlannedVerdict("optimism-06-q1", "optimism-06-q2", _PRED, None, "misspelling should not matter"),
    PlannedVerdict("optimism-06-q2", "optimism-06-q1", _PRED, None, "reverse of the previous pair"),
    PlannedVerdict("disappointment-03-q1", "disappointment-03-q3", _ANN, RelabelTurn("disappointment-03-q3", "associated(e,disappointment)"), "same fix as the earlier disappointment pair"),
    PlannedVerdict("envy-02-q3", "envy-02-q1", _PRED, None, "case and spelling variants"),
    PlannedVerdict("gloom-09-q1", "gloom-09-q2", _ANN, _MERGE_DEPRESSION, "assimilated-to means the same relation here"),
    PlannedVerdict("shyness-08-q1", "shyness-08-q2", _PRED, None, "copula versus like-being phrasing"),
    PlannedVerdict("grief-01-q2", "grief-01-q1", _PRED, None, "reverse orientation of the first pair"),
    PlannedVerdict("joy-10-q1", "joy-10-q2", _PRED, None, "plain-happy rewording"),
    PlannedVerdict("annoyance-11-q1", "annoyance-11-q2", _PRED, None, "noun versus participle"),
    PlannedVerdict("distrust-12-q1", "distrust-12-q2", _PRED, None, "strangers spelled out versus described"),
    PlannedVerdict("envy-13-q1", "envy-13-q2", _ANN, _MERGE_OTHER_PERSON, "both ask about other people"),
    PlannedVerdict("envy-13-q2", "envy-13-q3", _PRED, None, "model missed the shared relation"),
    PlannedVerdict("betrayal-14-q1", "betrayal-14-q2", _PRED, None, "besides-betrayal asks the opposite"),
    PlannedVerdict("anxiety-15-q2", "anxiety-15-q1", _PREP, _FIX_EXAM, "reverse orientation of the placeholder pair"),
)

EXPECTED_QUEUE_SIZE = len(_DEMO_PLAN)
EXPECTED_TALLY = {
    VerdictCategory.PREDICTION_ERROR.value: 16,
    VerdictCategory.ANNOTATION_ERROR.value: 4,
    VerdictCategory.PREP_ERROR.value: 2,
}


def demo_plan() -> tuple[PlannedVerdict, ...]:
    """The queue-closing script, in the order a reviewer works the queue."""
    return _DEMO_PLAN


def demo_verdicts(actor: str = "demo-reviewer") -> list[tuple[Verdict, RevisionAction | None]]:
    """Plan rows as ready-to-record verdicts with stable timestamps."""
    out = []
    for n, row in enumerate(_DEMO_PLAN, start=1):
        verdict = Verdict(
            pair_id=row.pair_id,
            category=row.category,
            note=row.note,
            actor=actor,
            timestamp=f"2026-02-01T09:{n:02d}:00+00:00",
        )
        out.append((verdict, row.action))
    return out


def plan_as_dicts() -> list[dict]:
    return [
        {
            "pair_id": row.pair_id,
            "category": row.category.value,
            "action": action_to_dict(row.action) if row.action else None,
            "note": row.note,
        }
        for row in _DEMO_PLAN
    ]


def _planned_revisions() -> list[Revision]:
    return [
        Revision(rev_id=n, action=row.action, provenance=row.pair_id)
        for n, row in enumerate(_DEMO_PLAN, start=1)
        if row.action is not None
    ]


# --- the scripted model ----------------------------------------------------


class ScriptedBackend(Backend):
    """Deterministic stand-in for a trainable model.

    Each stage is a (labels, overrides) snapshot: pairs score high when
    their questions share a label, low otherwise, except where an
    override pins an exact score. Every completed training run advances
    one stage, so a staged backend can act out "the retrained model
    stopped making those mistakes" without any actual training.
    """

    name = "scripted"

    def __init__(
        self,
        stages: Sequence[tuple[Mapping[str, str], Mapping[str, float]]],
        hi: float = 0.97,
        lo: float = 0.03,
    ):
        if not stages:
            raise ValueError("at least one stage required")
        self._stages = [(dict(labels), dict(overrides)) for labels, overrides in stages]
        self._stage = 0
        self._hi = hi
        self._lo = lo

    @property
    def stage(self) -> int:
        return self._stage

    def train(self, train_uri: str, val_uri: str, config: Mapping) -> TrainJob:
        if self._stage < len(self._stages) - 1:
            self._stage += 1
        return CompletedJob("scripted-train", detail=f"now at stage {self._stage}")

    def predict(self, pairs: Sequence[PairInstance]) -> list[PredictionRecord]:
        labels, overrides = self._stages[self._stage]
        out = []
        for p in pairs:
            score = overrides.get(p.pair_id)
            if score is None:
                l1, l2 = labels.get(p.q1_id), labels.get(p.q2_id)
                if l1 is None or l2 is None:
                    raise BackendError(f"no scripted labels for pair {p.pair_id!r}")
                score = self._hi if l1 == l2 else self._lo
            out.append(PredictionRecord.from_score(p.pair_id, score))
        return out

    def health(self) -> dict:
        return {"ok": True, "model": f"{self.name}/stage{self._stage}"}


def demo_backend() -> ScriptedBackend:
    """Two-stage model for the walkthrough.

    Stage 0 follows the corpus gold except on the 22 planned pairs,
    where it takes the wrong side (score 0.92 against gold negatives,
    0.08 against gold positives). Stage 1 follows the revised corpus
    exactly, so the round after the queue closes comes back clean.
    """
    corpus = demo_corpus()
    before = reference_labels_from_corpus(corpus)
    after = reference_labels_from_corpus(apply_revisions(corpus, _planned_revisions()))
    overrides = {
        row.pair_id: (0.92 if before[row.q1_id] != before[row.q2_id] else 0.08)
        for row in _DEMO_PLAN
    }
    return ScriptedBackend(stages=((before, overrides), (after, {})))


# --- benchmark-scale corpus ------------------------------------------------

_REF_EMOTIONS = (
    "happiness", "sadness", "anger", "fear", "surprise", "disgust", "joy",
    "pride", "shame", "guilt", "envy", "jealousy", "love", "hate", "hope",
    "despair", "relief", "regret", "grief", "sorrow", "bliss", "delight",
    "contentment", "serenity", "calmness", "anxiety", "worry", "dread",
    "panic", "terror", "horror", "fright", "nervousness", "unease",
    "tension", "stress", "frustration", "irritation", "annoyance", "rage",
    "fury", "wrath", "resentment", "bitterness", "contempt", "scorn",
    "disdain", "loathing", "revulsion", "boredom", "apathy", "indifference",
    "fatigue", "weariness", "melancholy", "gloom", "misery", "anguish",
    "agony", "heartbreak", "loneliness", "isolation", "longing", "yearning",
    "nostalgia", "homesickness", "wistfulness", "pity", "sympathy",
    "compassion", "empathy", "tenderness", "affection", "fondness",
    "warmth", "adoration", "infatuation", "passion", "desire", "craving",
    "excitement", "thrill", "exhilaration", "euphoria", "elation",
    "ecstasy", "enthusiasm", "eagerness", "anticipation", "curiosity",
    "wonder", "awe", "amazement", "astonishment", "shock", "confusion",
    "bewilderment", "puzzlement", "doubt", "suspicion", "distrust",
    "wariness", "caution", "hesitation", "reluctance", "embarrassment",
    "humiliation", "mortification", "awkwardness", "shyness", "timidity",
    "insecurity", "vulnerability", "helplessness", "powerlessness",
    "desperation", "urgency", "impatience", "restlessness", "agitation",
    "discomfort", "displeasure", "dissatisfaction", "disappointment",
    "disillusionment", "discouragement", "dejection", "defeat",
    "resignation", "acceptance", "gratitude", "thankfulness",
    "appreciation", "admiration", "respect", "reverence", "devotion",
    "loyalty", "trust", "confidence", "assurance", "courage", "bravery",
    "determination", "resolve", "motivation", "inspiration", "optimism",
    "pessimism", "cynicism", "skepticism", "satisfaction", "fulfillment",
    "accomplishment", "triumph", "jubilation",
)

_REF_VARIANTS = (
    "is it like {w}?",
    "is it similar to {w}?",
    "would you say it is close to {w}?",
    "is it kind of like {w}?",
)

_REF_PREFIXES = ("", "hmm, ", "ok, ", "so, ", "thanks, ", "i see, ", "right, ")

_REF_VALENCE_BASES = {
    "negative": (
        "is it a negative emotion?",
        "is it negative?",
        "would you call it a negative feeling?",
        "is it an unpleasant emotion?",
        "does it feel unpleasant?",
        "is it one of the bad feelings?",
        "would most people say it feels bad?",
    ),
    "positive": (
        "is it a positive emotion?",
        "is it positive?",
        "would you call it a positive feeling?",
        "is it a pleasant emotion?",
        "does it feel pleasant?",
        "is it one of the good feelings?",
        "would most people say it feels good?",
    ),
}

_REF_TOPICS = (
    "a wedding", "a funeral", "an argument", "a job interview", "an exam",
    "a long trip", "a family dinner", "a first date", "a breakup",
    "a reunion", "a competition", "a deadline", "a surprise party",
    "a thunderstorm", "a traffic jam", "a holiday", "a promotion",
    "a mistake at work", "a compliment", "an insult", "a nightmare",
    "a crowded room", "an empty house", "a hospital visit", "a phone call",
    "bad news", "good news", "a gift", "a loss", "a victory", "a defeat",
    "a secret", "a lie", "a confession", "a memory", "a song", "a photo",
    "a stranger", "an old friend", "a rival",
)

_REF_HAPAX_TEMPLATES = (
    ("causedBy", "is it caused by {t}?"),
    ("feltDuring", "would you feel it during {t}?"),
    ("reminds", "does it remind you of {t}?"),
    ("feltAfter", "do you feel it after {t}?"),
    ("linkedTo", "is it linked to {t}?"),
    ("triggeredBy", "could {t} trigger it?"),
    ("feltBefore", "would you feel it right before {t}?"),
    ("involves", "does it usually involve {t}?"),
    ("strongerAt", "is it stronger during {t}?"),
    ("fadesAfter", "does it fade after {t}?"),
    ("expectedAt", "would people expect it at {t}?"),
    ("hiddenAt", "would you hide it during {t}?"),
    ("sharedAt", "would you share it at {t}?"),
    ("recallsOf", "does thinking of {t} bring it back?"),
)

# questions per multi-question label, by how many labels get that many
_REF_GROUP_SHAPE = ((2, 26), (3, 70), (4, 49))
_REF_HAPAX_COUNT = 553


def _reference_questions() -> list[tuple[str, str]]:
    """(text, label) rows: 543 in multi-question labels plus 553 one-offs."""
    rows: list[tuple[str, str]] = []
    words = iter(_REF_EMOTIONS)
    for size, n_labels in _REF_GROUP_SHAPE:
        for _ in range(n_labels):
            word = next(words)
            label = f"similar(e,{word})"
            for template in _REF_VARIANTS[:size]:
                rows.append((template.format(w=word), label))
    for valence, bases in sorted(_REF_VALENCE_BASES.items()):
        label = f"valence(e,{valence})"
        want = 43 if valence == "negative" else 42
        texts = [p + b for b in bases for p in _REF_PREFIXES]
        for text in texts[:want]:
            rows.append((text, label))
    hapaxes = 0
    for topic in _REF_TOPICS:
        slug = topic.replace(" ", "-")
        for relation, template in _REF_HAPAX_TEMPLATES:
            if hapaxes == _REF_HAPAX_COUNT:
                break
            rows.append((template.format(t=topic), f"{relation}(e,{slug})"))
            hapaxes += 1
    assert hapaxes == _REF_HAPAX_COUNT, "not enough hapax combinations"
    return rows


def reference_corpus(seed: int = 7, questions_per_dialog: int = 10) -> Corpus:
    """Deterministic corpus with the shape of a full annotation effort.

    1096 annotated questions across 110 dialogs; 700 distinct labels of
    which 553 are hapaxes, leaving 543 questions after filtering. Those
    yield 294306 ordered pairs with 4588 positives.
    """
    rows = _reference_questions()
    rng = random.Random(f"{seed}/reference-order")
    rng.shuffle(rows)
    chunks = [
        rows[i : i + questions_per_dialog]
        for i in range(0, len(rows), questions_per_dialog)
    ]
    players = tuple(f"u{n:02d}" for n in range(1, 26))
    dialogs = tuple(
        (
            f"game-{n:03d}",
            (players[rng.randrange(25)], players[rng.randrange(25)]),
            tuple((f"q{j + 1}", text, label) for j, (text, label) in enumerate(chunk)),
        )
        for n, chunk in enumerate(chunks, start=1)
    )
    return _assemble(dialogs)


# --- entry point -----------------------------------------------------------


def ensure_demo_files(root: str | Path) -> tuple[Path, Path]:
    """Write the walkthrough corpus under root (if absent); return paths."""
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)
    corpus_path = root / "corpus.jsonl"
    ledger_path = root / "ledger.jsonl"
    if not corpus_path.exists():
        write_corpus(demo_corpus(), corpus_path)
    return corpus_path, ledger_path


def main(argv: Sequence[str] | None = None) -> None:  # pragma: no cover - thin wrapper
    import argparse

    parser = argparse.ArgumentParser(prog="concord.demo", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    init_p = sub.add_parser("init", help="write the walkthrough corpus and exit")
    init_p.add_argument("--root", required=True)

    serve_p = sub.add_parser("serve", help="run the review service on the walkthrough")
    serve_p.add_argument("--root", default=None, help="state directory (default: temp dir)")
    serve_p.add_argument("--host", default="127.0.0.1")
    serve_p.add_argument("--port", type=int, default=8337)
    serve_p.add_argument("--ui", default=None, help="static UI directory to mount at /")
    serve_p.add_argument("--token", default=None, help="require this bearer token on /api")

    sub.add_parser("plan", help="print the queue-closing script as JSON")

    args = parser.parse_args(argv)
    if args.command == "plan":
        print(json.dumps(plan_as_dicts(), indent=2))
        return
    if args.command == "init":
        corpus_path, _ = ensure_demo_files(args.root)
        print(corpus_path)
        return

    import tempfile

    import uvicorn

    from .service import StateStore, build_app

    root = args.root or tempfile.mkdtemp(prefix="concord-demo-")
    corpus_path, ledger_path = ensure_demo_files(root)
    store = StateStore(
        corpus_path,
        ledger_path,
        demo_backend(),
        eval_split=None,
    )
    app = build_app(store, auth_token=args.token, ui_dir=args.ui)
    print(f"state in {root}")
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")


if __name__ == "__main__":  # pragma: no cover
    main()
