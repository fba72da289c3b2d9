"""Ordered paraphrase-pair construction, stratified splits, and TSV round trip.

Questions sharing an annotation label are treated as paraphrases of each
other. Expanding n questions into every ordered pair yields n(n-1)
instances, of which sum(c*(c-1)) are positive (c ranging over label
multiplicities). Splits are deterministic: pools are sorted by pair_id,
shuffled by a seeded Fisher-Yates, and apportioned by largest remainder.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path
from typing import IO, Iterable, Sequence

from .corpus import AnnotatedQuestion, Corpus
from .errors import (
    EmptyDomainError,
    PairFormatError,
    StratificationError,
    ValidationError,
)


class Split(str, Enum):
    TRAIN = "train"
    VAL = "val"
    TEST = "test"


def make_pair_id(q1_id: str, q2_id: str) -> str:
    return f"{q1_id}::{q2_id}"


def expected_pair_count(n_questions: int) -> int:
    """Ordered pairs over n questions: n(n-1)."""
    return n_questions * (n_questions - 1)


def expected_positive_count(label_counts: Iterable[int]) -> int:
    """Positive ordered pairs: sum of c(c-1) over label multiplicities."""
    return sum(c * (c - 1) for c in label_counts)


@dataclass(frozen=True, slots=True)
class PairInstance:
    """One ordered sentence pair with its annotation-derived gold label."""

    pair_id: str
    q1_id: str
    q2_id: str
    text1: str
    text2: str
    gold: int

    def __post_init__(self) -> None:
        if self.q1_id == self.q2_id:
            raise ValidationError(f"pair {self.pair_id!r}: question ids must differ")
        if self.gold not in (0, 1):
            raise ValidationError(f"pair {self.pair_id!r}: gold must be 0 or 1")


@dataclass(frozen=True, slots=True)
class SliceStats:
    n_pairs: int
    n_positive: int

    @property
    def positive_ratio(self) -> float:
        return self.n_positive / self.n_pairs if self.n_pairs else 0.0


@dataclass(frozen=True)
class DatasetStats:
    n_questions: int
    overall: SliceStats
    by_split: dict[Split, SliceStats]

    def to_dict(self) -> dict:
        def one(s: SliceStats) -> dict:
            return {
                "n_pairs": s.n_pairs,
                "n_positive": s.n_positive,
                "positive_ratio": s.positive_ratio,
            }

        return {
            "n_questions": self.n_questions,
            "overall": one(self.overall),
            "by_split": {sp.value: one(st) for sp, st in self.by_split.items()},
        }


@dataclass(frozen=True)
class PairDataset:
    """The full ordered pair set, optionally carrying split assignments.

    ``seed`` records the shuffle seed used by :func:`split` for
    provenance; it is not part of equality because the TSV format does
    not carry it.
    """

    pairs: tuple[PairInstance, ...]
    split_of: dict[str, Split] = field(default_factory=dict)
    seed: int | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.split_of:
            ids = {p.pair_id for p in self.pairs}
            if ids != set(self.split_of):
                raise ValidationError("split_of must cover exactly the dataset's pairs")

    @property
    def is_split(self) -> bool:
        return bool(self.split_of)

    @property
    def n_questions(self) -> int:
        ids = set()
        for p in self.pairs:
            ids.add(p.q1_id)
            ids.add(p.q2_id)
        return len(ids)

    def slice(self, split: Split | None = None) -> tuple[PairInstance, ...]:
        """Pairs of one partition, or all pairs when split is None."""
        if split is None:
            return self.pairs
        return tuple(p for p in self.pairs if self.split_of.get(p.pair_id) is split)

    @property
    def stats(self) -> DatasetStats:
        by_split: dict[Split, SliceStats] = {}
        if self.is_split:
            tally: dict[Split, list[int]] = {s: [0, 0] for s in Split}
            for p in self.pairs:
                t = tally[self.split_of[p.pair_id]]
                t[0] += 1
                t[1] += p.gold
            by_split = {s: SliceStats(n, pos) for s, (n, pos) in tally.items()}
        overall = SliceStats(len(self.pairs), sum(p.gold for p in self.pairs))
        return DatasetStats(self.n_questions, overall, by_split)


@dataclass(frozen=True, slots=True)
class SplitSpec:
    """Targets for partitioning a dataset.

    Either fractional targets (default) or exact pair counts; counts
    must sum to the dataset size at split time. Stratification splits
    the positive and negative pools independently so every partition
    keeps roughly the global positive ratio.
    """

    fractions: tuple[float, float, float] = (0.68, 0.05, 0.27)
    seed: int = 20
    stratified: bool = True
    group_by_question: bool = False
    counts: tuple[int, int, int] | None = None

    def __post_init__(self) -> None:
        if self.counts is not None:
            if len(self.counts) != 3 or any(c < 0 for c in self.counts):
                raise ValidationError("counts must be three non-negative integers")
        else:
            if len(self.fractions) != 3:
                raise ValidationError("fractions must have three entries")
            if any(not 0.0 <= f <= 1.0 for f in self.fractions):
                raise ValidationError("fractions must lie in [0, 1]")
            if abs(sum(self.fractions) - 1.0) > 1e-9:
                raise ValidationError("fractions must sum to 1")

    def weights(self, total: int) -> tuple[float, float, float]:
        if self.counts is not None:
            if sum(self.counts) != total:
                raise ValidationError(
                    f"counts sum to {sum(self.counts)}, dataset has {total} pairs"
                )
            if total == 0:
                return (0.0, 0.0, 0.0)
            return tuple(c / total for c in self.counts)  # type: ignore[return-value]
        return self.fractions


def filter_hapaxes(corpus: Corpus, min_count: int = 2) -> list[AnnotatedQuestion]:
    """Questions whose label multiplicity is at least min_count, corpus order."""
    if min_count < 1:
        raise ValidationError("min_count must be >= 1")
    counts = Counter(q.label for q in corpus.questions)
    return [q for q in corpus.questions if counts[q.label] >= min_count]


def build_pairs(questions: Sequence[AnnotatedQuestion]) -> PairDataset:
    """Expand questions into every ordered pair with gold from label equality."""
    if len(questions) < 2:
        raise EmptyDomainError("need at least 2 questions to build pairs")
    seen: set[str] = set()
    for q in questions:
        if q.turn.turn_id in seen:
            raise ValidationError(f"duplicate turn_id {q.turn.turn_id!r} in question list")
        seen.add(q.turn.turn_id)

    pairs: list[PairInstance] = []
    for q1 in questions:
        for q2 in questions:
            if q1.turn.turn_id == q2.turn.turn_id:
                continue
            pairs.append(
                PairInstance(
                    pair_id=make_pair_id(q1.turn.turn_id, q2.turn.turn_id),
                    q1_id=q1.turn.turn_id,
                    q2_id=q2.turn.turn_id,
                    text1=q1.turn.text,
                    text2=q2.turn.text,
                    gold=int(q1.label == q2.label),
                )
            )

    n = len(questions)
    assert len(pairs) == expected_pair_count(n)
    hist = Counter(q.label for q in questions)
    assert sum(p.gold for p in pairs) == expected_positive_count(hist.values())
    return PairDataset(tuple(pairs))


def _apportion(total: int, weights: Sequence[float]) -> list[int]:
    """Largest-remainder apportionment; ties go to the earlier partition."""
    quotas = [total * w for w in weights]
    counts = [int(q) for q in quotas]
    order = sorted(range(len(quotas)), key=lambda i: (counts[i] - quotas[i], i))
    for i in order[: total - sum(counts)]:
        counts[i] += 1
    return counts


def _shuffled(ids: Iterable[str], seed: int, pool: str) -> list[str]:
    # string seeds hash via sha512, stable across platforms and runs
    rng = random.Random(f"{seed}/{pool}")
    out = sorted(ids)
    rng.shuffle(out)
    return out


def _assign(ids: list[str], counts: Sequence[int], into: dict[str, Split]) -> None:
    offset = 0
    for split, count in zip(Split, counts):
        for pid in ids[offset : offset + count]:
            into[pid] = split
        offset += count


def _check_nonempty(counts: Sequence[int], weights: Sequence[float], pool: str) -> None:
    for split, count, weight in zip(Split, counts, weights):
        if weight > 0 and count == 0:
            raise StratificationError(
                f"{split.value} fraction leaves no {pool} pairs; pool too small"
            )


def split(dataset: PairDataset, spec: SplitSpec) -> PairDataset:
    """Assign every pair to a partition, deterministically for a given seed."""
    if spec.group_by_question:
        return _split_by_question(dataset, spec)

    weights = spec.weights(len(dataset.pairs))
    split_of: dict[str, Split] = {}
    if spec.stratified:
        pools = {
            "positive": [p.pair_id for p in dataset.pairs if p.gold == 1],
            "negative": [p.pair_id for p in dataset.pairs if p.gold == 0],
        }
        allocations: dict[str, list[int]] = {}
        for name, ids in pools.items():
            allocations[name] = _apportion(len(ids), weights)
        if spec.counts is not None and pools["negative"]:
            # reconcile so per-partition totals hit the exact requested counts
            for i, want in enumerate(spec.counts):
                allocations["negative"][i] = want - allocations["positive"][i]
                if not 0 <= allocations["negative"][i] <= len(pools["negative"]):
                    raise StratificationError(
                        "requested counts are unreachable with stratification"
                    )
        for name, ids in pools.items():
            if not ids:
                continue
            _check_nonempty(allocations[name], weights, name)
            _assign(_shuffled(ids, spec.seed, name + "s"), allocations[name], split_of)
    else:
        ids = [p.pair_id for p in dataset.pairs]
        counts = _apportion(len(ids), weights)
        if ids:
            _check_nonempty(counts, weights, "available")
        _assign(_shuffled(ids, spec.seed, "all"), counts, split_of)
    return replace(dataset, split_of=split_of, seed=spec.seed)


def _split_by_question(dataset: PairDataset, spec: SplitSpec) -> PairDataset:
    """Leakage-aware variant: partition questions, drop cross-partition pairs.

    Stratification is not honored here; the positive ratio falls where
    the question partition puts it.
    """
    weights = spec.fractions if spec.counts is None else spec.weights(len(dataset.pairs))
    question_ids: set[str] = set()
    for p in dataset.pairs:
        question_ids.add(p.q1_id)
        question_ids.add(p.q2_id)
    counts = _apportion(len(question_ids), weights)
    if question_ids:
        _check_nonempty(counts, weights, "question")
    question_split: dict[str, Split] = {}
    _assign(_shuffled(question_ids, spec.seed, "questions"), counts, question_split)

    kept: list[PairInstance] = []
    split_of: dict[str, Split] = {}
    for p in dataset.pairs:
        s1, s2 = question_split[p.q1_id], question_split[p.q2_id]
        if s1 is s2:
            kept.append(p)
            split_of[p.pair_id] = s1
    return PairDataset(tuple(kept), split_of, seed=spec.seed)


def downsample_negatives(
    dataset: PairDataset, negatives_per_positive: float = 1.0, seed: int = 20
) -> PairDataset:
    """Drop negatives until at most the requested ratio remains (for ablations)."""
    if negatives_per_positive < 0:
        raise ValidationError("negatives_per_positive must be >= 0")
    if dataset.is_split:
        raise ValidationError("balance before splitting, not after")
    positives = [p for p in dataset.pairs if p.gold == 1]
    negatives = {p.pair_id: p for p in dataset.pairs if p.gold == 0}
    want = min(len(negatives), int(len(positives) * negatives_per_positive))
    keep_ids = set(_shuffled(negatives, seed, "balance")[:want])
    kept = [p for p in dataset.pairs if p.gold == 1 or p.pair_id in keep_ids]
    return PairDataset(tuple(kept), seed=dataset.seed)


TSV_HEADER = "pair_id\tq1_id\tq2_id\tlabel\tsplit\ttext1\ttext2"


def _escape(value: str) -> str:
    return value.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n")


def _unescape(value: str, row_no: int) -> str:
    if "\\" not in value:
        return value
    out: list[str] = []
    i = 0
    while i < len(value):
        ch = value[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        if i + 1 >= len(value):
            raise PairFormatError("dangling backslash", row_no)
        nxt = value[i + 1]
        if nxt == "t":
            out.append("\t")
        elif nxt == "n":
            out.append("\n")
        elif nxt == "\\":
            out.append("\\")
        else:
            raise PairFormatError(f"unknown escape \\{nxt}", row_no)
        i += 2
    return "".join(out)


def dumps_pairs(dataset: PairDataset) -> str:
    """Render the dataset as TSV text (dataset must be split)."""
    if not dataset.is_split:
        raise ValidationError("dataset has no split assignments; split it first")
    lines = [TSV_HEADER]
    for p in dataset.pairs:
        lines.append(
            "\t".join(
                (
                    _escape(p.pair_id),
                    _escape(p.q1_id),
                    _escape(p.q2_id),
                    str(p.gold),
                    dataset.split_of[p.pair_id].value,
                    _escape(p.text1),
                    _escape(p.text2),
                )
            )
        )
    return "\n".join(lines) + "\n"


def export_pairs(dataset: PairDataset, sink: IO) -> None:
    data = dumps_pairs(dataset)
    sink.write(data.encode("utf-8") if "b" in getattr(sink, "mode", "b") else data)


def loads_pairs(text: str) -> PairDataset:
    """Parse TSV text back into a dataset; inverse of :func:`dumps_pairs`."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise PairFormatError("empty input", 1)
    if lines[0] != TSV_HEADER:
        raise PairFormatError("bad header", 1)

    pairs: list[PairInstance] = []
    split_of: dict[str, Split] = {}
    for row_no, line in enumerate(lines[1:], start=2):
        cols = line.split("\t")
        if len(cols) != 7:
            raise PairFormatError(f"expected 7 columns, got {len(cols)}", row_no)
        pair_id, q1_id, q2_id = (_unescape(c, row_no) for c in cols[:3])
        if cols[3] not in ("0", "1"):
            raise PairFormatError(f"label must be 0 or 1, got {cols[3]!r}", row_no)
        try:
            part = Split(cols[4])
        except ValueError:
            raise PairFormatError(f"unknown split {cols[4]!r}", row_no) from None
        if pair_id in split_of:
            raise PairFormatError(f"duplicate pair_id {pair_id!r}", row_no)
        text1, text2 = _unescape(cols[5], row_no), _unescape(cols[6], row_no)
        try:
            pairs.append(PairInstance(pair_id, q1_id, q2_id, text1, text2, int(cols[3])))
        except ValidationError as exc:
            raise PairFormatError(str(exc), row_no) from None
        split_of[pair_id] = part
    return PairDataset(tuple(pairs), split_of)


def import_pairs(source: IO) -> PairDataset:
    data = source.read()
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return loads_pairs(data)


def write_pairs(dataset: PairDataset, path: str | Path) -> None:
    Path(path).write_text(dumps_pairs(dataset), encoding="utf-8", newline="\n")


def read_pairs(path: str | Path) -> PairDataset:
    with open(path, encoding="utf-8", newline="") as fh:
        return loads_pairs(fh.read())
