import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from concord.errors import CoverageError
from concord.gateway import OracleBackend, PredictionRecord
from concord.metrics import (
    Disagreement,
    MetricsReport,
    dumps_disagreements,
    evaluate,
    extract_disagreements,
    format_percent,
)
from concord.pairs import PairInstance, build_pairs, filter_hapaxes

from conftest import corpus_from_labels


def gold_pair(pid: str, gold: int) -> PairInstance:
    q1, q2 = pid.split("::")
    return PairInstance(pid, q1, q2, f"is it {q1}?", f"is it {q2}?", gold)


def answers(golds: dict[str, int], flips: set[str] = frozenset()) -> list[PredictionRecord]:
    out = []
    for pid, gold in golds.items():
        label = 1 - gold if pid in flips else gold
        out.append(PredictionRecord(pid, label, 0.9 if label else 0.1))
    return out


class TestFormatPercent:
    def test_four_decimals_default(self):
        assert format_percent(0.999725) == "99.9725%"

    def test_rounding(self):
        assert format_percent(0.98438) == "98.4380%"
        assert format_percent(1.0) == "100.0000%"

    def test_custom_decimals(self):
        assert format_percent(0.5, decimals=1) == "50.0%"


class TestReportMath:
    def test_confusion_counts(self):
        golds = {"a::b": 1, "b::a": 1, "a::c": 0, "c::a": 0}
        report = evaluate(answers(golds, flips={"b::a", "a::c"}), [gold_pair(p, g) for p, g in golds.items()])
        assert (report.tp, report.fp, report.tn, report.fn) == (1, 1, 1, 1)
        assert report.accuracy == 0.5
        assert report.n == 4

    def test_perfect_predictor(self):
        golds = {"a::b": 1, "a::c": 0}
        report = evaluate(answers(golds), [gold_pair(p, g) for p, g in golds.items()])
        assert report.accuracy == 1.0
        assert report.precision == 1.0 and report.recall == 1.0 and report.f1 == 1.0
        assert report.error_reduction_vs_baseline is None  # no model errors to divide by

    def test_precision_none_when_no_positive_predictions(self):
        report = MetricsReport.from_counts(tp=0, fp=0, tn=8, fn=2)
        assert report.precision is None
        assert report.recall == 0.0
        assert report.f1 is None

    def test_recall_none_when_no_positive_gold(self):
        report = MetricsReport.from_counts(tp=0, fp=2, tn=8, fn=0)
        assert report.recall is None
        assert report.majority_baseline_accuracy == 1.0

    def test_f1_none_when_both_zero(self):
        report = MetricsReport.from_counts(tp=0, fp=1, tn=8, fn=1)
        assert report.precision == 0.0 and report.recall == 0.0
        assert report.f1 is None

    def test_majority_baseline_is_max_side(self):
        report = MetricsReport.from_counts(tp=1, fp=0, tn=7, fn=2)
        assert report.majority_baseline_accuracy == 0.7
        flipped = MetricsReport.from_counts(tp=7, fp=0, tn=3, fn=0)
        assert flipped.majority_baseline_accuracy == 0.7

    def test_error_reduction_factor(self):
        # baseline err 0.2, model err 0.1 -> model halves the errors
        report = MetricsReport.from_counts(tp=1, fp=0, tn=8, fn=1)
        assert report.error_reduction_vs_baseline == pytest.approx(2.0)

    def test_empty_slice_refused(self):
        with pytest.raises(CoverageError, match="empty"):
            MetricsReport.from_counts(0, 0, 0, 0)

    def test_to_dict_json_null_conventions(self):
        payload = json.loads(MetricsReport.from_counts(0, 0, 5, 0).to_json())
        assert payload["precision"] is None
        assert payload["recall"] is None
        assert payload["n"] == 5

    def test_rendered_percent_strings(self):
        report = MetricsReport.from_counts(tp=10, fp=0, tn=79968, fn=22)
        assert report.rendered()["accuracy"] == "99.9725%"
        assert report.rendered()["precision"] == "100.0000%"


class TestCoverage:
    GOLD = [gold_pair("a::b", 1), gold_pair("a::c", 0)]

    def test_missing_prediction(self):
        with pytest.raises(CoverageError, match="1 missing, 0 extra"):
            evaluate([PredictionRecord("a::b", 1, 0.9)], self.GOLD)

    def test_extra_prediction(self):
        preds = answers({"a::b": 1, "a::c": 0, "zz::q": 0})
        with pytest.raises(CoverageError, match="0 missing, 1 extra"):
            evaluate(preds, self.GOLD)

    def test_duplicate_prediction(self):
        preds = [PredictionRecord("a::b", 1, 0.9)] * 2 + [PredictionRecord("a::c", 0, 0.1)]
        with pytest.raises(CoverageError, match="duplicate"):
            evaluate(preds, self.GOLD)

    def test_duplicate_gold(self):
        with pytest.raises(CoverageError, match="duplicate"):
            evaluate(answers({"a::b": 1}), [self.GOLD[0], self.GOLD[0]])


class TestDisagreements:
    def make(self):
        corpus = corpus_from_labels({"a": "x", "b": "x", "c": "y", "d": "z"})
        pairs = build_pairs(filter_hapaxes(corpus, min_count=1)).pairs
        return corpus, list(pairs)

    def test_agreeing_pairs_excluded(self):
        corpus, pairs = self.make()
        preds = OracleBackend().predict(pairs)
        assert extract_disagreements(preds, pairs, corpus) == []

    def test_flip_surfaces_with_labels(self):
        corpus, pairs = self.make()
        golds = {p.pair_id: p.gold for p in pairs}
        preds = answers(golds, flips={"a::b"})
        out = extract_disagreements(preds, pairs, corpus)
        assert [d.pair_id for d in out] == ["a::b"]
        d = out[0]
        assert (d.gold, d.predicted) == (1, 0)
        assert (d.label1, d.label2) == ("x", "x")

    def test_sorted_by_confidence_then_id(self):
        corpus, pairs = self.make()
        by_id = {p.pair_id: p for p in pairs}
        preds = []
        for p in pairs:
            if p.pair_id == "c::d":
                preds.append(PredictionRecord(p.pair_id, 1, 0.99))  # confident flip
            elif p.pair_id in ("a::c", "c::a"):
                preds.append(PredictionRecord(p.pair_id, 1, 0.6))  # hesitant flips
            else:
                preds.append(PredictionRecord(p.pair_id, p.gold, 0.5 + 0.4 * p.gold))
        out = extract_disagreements(preds, pairs, corpus)
        assert [d.pair_id for d in out] == ["c::d", "a::c", "c::a"]
        assert out[0].confidence == pytest.approx(0.49)
        assert by_id["c::d"].gold == 0

    def test_to_dict_schema(self):
        corpus, pairs = self.make()
        golds = {p.pair_id: p.gold for p in pairs}
        out = extract_disagreements(answers(golds, flips={"a::d"}), pairs, corpus)
        payload = out[0].to_dict()
        assert set(payload) == {
            "pair_id", "gold", "predicted", "score",
            "label1", "label2", "text1", "text2",
        }
        assert payload["text1"] == "is it a?"

    def test_jsonl_dump(self):
        corpus, pairs = self.make()
        golds = {p.pair_id: p.gold for p in pairs}
        out = extract_disagreements(answers(golds, flips={"a::b", "b::a"}), pairs, corpus)
        text = dumps_disagreements(out)
        lines = text.splitlines()
        assert len(lines) == 2
        assert {json.loads(l)["pair_id"] for l in lines} == {"a::b", "b::a"}

    def test_unicode_not_escaped(self):
        d = Disagreement(
            pair=PairInstance("a::b", "a", "b", "schärfer?", "ok", 0),
            gold=0, predicted=1, score=0.8, label1="x", label2="y",
        )
        assert "schärfer" in dumps_disagreements([d])


@settings(max_examples=150)
@given(st.data())
def test_evaluate_matches_brute_force_recount(data):
    n = data.draw(st.integers(min_value=1, max_value=60))
    golds = [data.draw(st.integers(0, 1)) for _ in range(n)]
    flips = [data.draw(st.booleans()) for _ in range(n)]
    pairs = [gold_pair(f"q{i}::r{i}", g) for i, g in enumerate(golds)]
    preds = [
        PredictionRecord(p.pair_id, 1 - p.gold if flip else p.gold, 0.5)
        for p, flip in zip(pairs, flips)
    ]
    report = evaluate(preds, pairs)

    by_id = {r.pair_id: r.predicted for r in preds}
    tp = sum(1 for p in pairs if p.gold == 1 and by_id[p.pair_id] == 1)
    fp = sum(1 for p in pairs if p.gold == 0 and by_id[p.pair_id] == 1)
    tn = sum(1 for p in pairs if p.gold == 0 and by_id[p.pair_id] == 0)
    fn = sum(1 for p in pairs if p.gold == 1 and by_id[p.pair_id] == 0)
    assert (report.tp, report.fp, report.tn, report.fn) == (tp, fp, tn, fn)
    assert report.accuracy == (tp + tn) / n
    pos = tp + fn
    assert report.majority_baseline_accuracy == max(pos / n, 1 - pos / n)


def test_evaluate_order_independent():
    rng = random.Random(11)
    golds = {f"q{i}::r{i}": rng.randint(0, 1) for i in range(40)}
    pairs = [gold_pair(p, g) for p, g in golds.items()]
    preds = answers(golds, flips={"q3::r3", "q7::r7"})
    shuffled = preds[:]
    rng.shuffle(shuffled)
    assert evaluate(preds, pairs) == evaluate(shuffled, pairs)
