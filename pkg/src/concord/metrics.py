"""Metrics against annotation-derived gold labels, plus disagreement extraction.

Precision, recall, and F1 are None (JSON null) when their denominator
is zero; reporting 0 there would flatter degenerate predictors. The
majority baseline is max(p, 1-p) over the evaluated slice, the floor
any classifier must beat on heavily imbalanced pair data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .corpus import Corpus
from .errors import CoverageError
from .gateway import PredictionRecord
from .pairs import PairInstance


def format_percent(value: float, decimals: int = 4) -> str:
    return f"{value * 100:.{decimals}f}%"


@dataclass(frozen=True, slots=True)
class MetricsReport:
    tp: int
    fp: int
    tn: int
    fn: int
    accuracy: float
    precision: float | None
    recall: float | None
    f1: float | None
    majority_baseline_accuracy: float
    error_reduction_vs_baseline: float | None

    @property
    def n(self) -> int:
        return self.tp + self.fp + self.tn + self.fn

    @classmethod
    def from_counts(cls, tp: int, fp: int, tn: int, fn: int) -> "MetricsReport":
        n = tp + fp + tn + fn
        if n == 0:
            raise CoverageError("cannot evaluate an empty slice")
        accuracy = (tp + tn) / n
        precision = tp / (tp + fp) if tp + fp else None
        recall = tp / (tp + fn) if tp + fn else None
        if precision is not None and recall is not None and precision + recall > 0:
            f1 = 2 * precision * recall / (precision + recall)
        else:
            f1 = None
        positive_ratio = (tp + fn) / n
        baseline = max(positive_ratio, 1.0 - positive_ratio)
        model_error = 1.0 - accuracy
        baseline_error = 1.0 - baseline
        reduction = baseline_error / model_error if model_error > 0 else None
        return cls(
            tp=tp,
            fp=fp,
            tn=tn,
            fn=fn,
            accuracy=accuracy,
            precision=precision,
            recall=recall,
            f1=f1,
            majority_baseline_accuracy=baseline,
            error_reduction_vs_baseline=reduction,
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "tp": self.tp,
            "fp": self.fp,
            "tn": self.tn,
            "fn": self.fn,
            "accuracy": self.accuracy,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "majority_baseline_accuracy": self.majority_baseline_accuracy,
            "error_reduction_vs_baseline": self.error_reduction_vs_baseline,
        }

    def rendered(self) -> dict:
        """Percent strings with 4 decimals, e.g. accuracy \"99.9725%\"."""
        out = {}
        for key in ("accuracy", "precision", "recall", "f1", "majority_baseline_accuracy"):
            value = getattr(self, key)
            out[key] = None if value is None else format_percent(value)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _paired(
    predictions: Sequence[PredictionRecord], gold: Sequence[PairInstance]
) -> list[tuple[PairInstance, PredictionRecord]]:
    by_id: dict[str, PredictionRecord] = {}
    for record in predictions:
        if record.pair_id in by_id:
            raise CoverageError(f"duplicate prediction for {record.pair_id!r}")
        by_id[record.pair_id] = record
    gold_ids = {p.pair_id for p in gold}
    if len(gold_ids) != len(gold):
        raise CoverageError("duplicate pair_id in gold slice")
    missing = gold_ids - set(by_id)
    extra = set(by_id) - gold_ids
    if missing or extra:
        raise CoverageError(
            f"predictions must cover the gold slice exactly "
            f"({len(missing)} missing, {len(extra)} extra)"
        )
    return [(p, by_id[p.pair_id]) for p in gold]


def evaluate(
    predictions: Sequence[PredictionRecord], gold: Sequence[PairInstance]
) -> MetricsReport:
    """Confusion counts and derived metrics over an exactly-covered slice."""
    tp = fp = tn = fn = 0
    for pair, record in _paired(predictions, gold):
        if pair.gold == 1:
            if record.predicted == 1:
                tp += 1
            else:
                fn += 1
        else:
            if record.predicted == 1:
                fp += 1
            else:
                tn += 1
    return MetricsReport.from_counts(tp, fp, tn, fn)


@dataclass(frozen=True, slots=True)
class Disagreement:
    """One pair where the model and the annotations disagree."""

    pair: PairInstance
    gold: int
    predicted: int
    score: float
    label1: str
    label2: str

    @property
    def pair_id(self) -> str:
        return self.pair.pair_id

    @property
    def confidence(self) -> float:
        return abs(self.score - 0.5)

    def to_dict(self) -> dict:
        return {
            "pair_id": self.pair.pair_id,
            "gold": self.gold,
            "predicted": self.predicted,
            "score": self.score,
            "label1": self.label1,
            "label2": self.label2,
            "text1": self.pair.text1,
            "text2": self.pair.text2,
        }


def extract_disagreements(
    predictions: Sequence[PredictionRecord],
    gold: Sequence[PairInstance],
    corpus: Corpus,
) -> list[Disagreement]:
    """All gold != predicted pairs, most confident model answers first."""
    out: list[Disagreement] = []
    for pair, record in _paired(predictions, gold):
        if pair.gold == record.predicted:
            continue
        out.append(
            Disagreement(
                pair=pair,
                gold=pair.gold,
                predicted=record.predicted,
                score=record.score,
                label1=corpus.label_of(pair.q1_id).value,
                label2=corpus.label_of(pair.q2_id).value,
            )
        )
    out.sort(key=lambda d: (-d.confidence, d.pair_id))
    return out


def dumps_disagreements(disagreements: Sequence[Disagreement]) -> str:
    lines = [json.dumps(d.to_dict(), sort_keys=True, ensure_ascii=False) for d in disagreements]
    return "".join(line + "\n" for line in lines)
