import json

import httpx
import pytest

from concord.corpus import serialize_corpus
from concord.errors import (
    EmptyDomainError,
    RevisionConflict,
    RoundStateError,
    ValidationError,
)
from concord.gateway import BackendError, OracleBackend, RemoteBackend
from concord.pairs import (
    Split,
    SplitSpec,
    build_pairs,
    expected_positive_count,
    filter_hapaxes,
    read_pairs,
)
from concord.triage import (
    EditText,
    LedgerEntry,
    MergeLabels,
    RelabelTurn,
    Revision,
    RoundMarker,
    Verdict,
    VerdictCategory,
    action_from_dict,
    action_to_dict,
    append_ledger,
    apply_revisions,
    dumps_ledger,
    entry_from_dict,
    entry_to_dict,
    loads_ledger,
    next_round,
    parse_category,
    read_ledger,
    record_verdict,
    replay,
    round_report,
    staged_revisions,
    start_round,
    train_backend,
    verdict_tally,
)

from conftest import corpus_from_labels


class TestCategories:
    def test_canonical_values(self):
        assert parse_category("prediction_error") is VerdictCategory.PREDICTION_ERROR
        assert parse_category("annotation_error") is VerdictCategory.ANNOTATION_ERROR
        assert parse_category("prep_error") is VerdictCategory.PREP_ERROR

    @pytest.mark.parametrize(
        "alias,expected",
        [
            ("pred", VerdictCategory.PREDICTION_ERROR),
            ("prediction", VerdictCategory.PREDICTION_ERROR),
            ("ann", VerdictCategory.ANNOTATION_ERROR),
            ("Annotation", VerdictCategory.ANNOTATION_ERROR),
            ("prep.", VerdictCategory.PREP_ERROR),
            (" PREP ", VerdictCategory.PREP_ERROR),
        ],
    )
    def test_aliases(self, alias, expected):
        assert parse_category(alias) is expected

    def test_unknown_rejected(self):
        with pytest.raises(ValidationError, match="unknown verdict category"):
            parse_category("typo_error")


class TestActions:
    @pytest.mark.parametrize(
        "action",
        [
            RelabelTurn("d1-q1", "similar(e,joy)"),
            MergeLabels("relatedTo(e,x)", "associated(e,x)"),
            EditText("d1-q1", "is it pleasant?"),
        ],
    )
    def test_dict_round_trip(self, action):
        assert action_from_dict(action_to_dict(action)) == action

    def test_type_tag(self):
        assert action_to_dict(RelabelTurn("t", "l"))["type"] == "relabel_turn"
        assert action_to_dict(MergeLabels("a", "b"))["type"] == "merge_labels"
        assert action_to_dict(EditText("t", "x"))["type"] == "edit_text"

    def test_merge_onto_self_rejected(self):
        with pytest.raises(ValidationError, match="differ"):
            MergeLabels("same(e,x)", "same(e,x) ")

    def test_unknown_type_rejected(self):
        with pytest.raises(ValidationError, match="malformed"):
            action_from_dict({"type": "rename_dialog", "dialog_id": "d1"})

    def test_wrong_fields_rejected(self):
        with pytest.raises(ValidationError, match="malformed"):
            action_from_dict({"type": "relabel_turn", "turn": "d1-q1"})


class TestApplyRevisions:
    def corpus(self):
        return corpus_from_labels({"a": "x", "b": "x", "c": "y", "d": "z"})

    def test_relabel(self):
        out = apply_revisions(self.corpus(), [Revision(1, RelabelTurn("a", "y"), "a::b")])
        assert out.label_of("a").value == "y"
        assert out.label_of("b").value == "x"

    def test_merge_moves_every_holder(self):
        out = apply_revisions(self.corpus(), [Revision(1, MergeLabels("x", "y"), "a::b")])
        assert [out.label_of(t).value for t in "abcd"] == ["y", "y", "y", "z"]

    def test_edit_text_only_touches_target(self):
        out = apply_revisions(self.corpus(), [Revision(1, EditText("a", "is it a??"), "a::b")])
        assert out.turn("a").text == "is it a??"
        assert out.turn("b").text == "is it b?"
        assert out.label_of("a").value == "x"

    def test_version_bump_and_parent_link(self):
        base = self.corpus()
        out = apply_revisions(base, [])
        assert out.version_id == base.version_id + 1
        assert out.parent_version == base.version_id
        assert [d.dialog_id for d in out.dialogs] == [d.dialog_id for d in base.dialogs]

    def test_applied_in_rev_order(self):
        revs = [
            Revision(1, RelabelTurn("a", "y"), "p1"),
            Revision(2, RelabelTurn("a", "z"), "p2"),
        ]
        assert apply_revisions(self.corpus(), revs).label_of("a").value == "z"

    def test_relabel_unknown_turn(self):
        with pytest.raises(RevisionConflict, match="revision 9"):
            apply_revisions(self.corpus(), [Revision(9, RelabelTurn("zz", "y"), "p")])

    def test_relabel_answer_turn_rejected(self):
        # answerer turns exist but are not annotated questions
        with pytest.raises(RevisionConflict, match="not an annotated question"):
            apply_revisions(self.corpus(), [Revision(1, RelabelTurn("a-ans", "y"), "p")])

    def test_merge_missing_source(self):
        with pytest.raises(RevisionConflict, match="not present"):
            apply_revisions(self.corpus(), [Revision(1, MergeLabels("ghost", "x"), "p")])

    def test_edit_to_empty_rejected(self):
        with pytest.raises(RevisionConflict, match="empty"):
            apply_revisions(self.corpus(), [Revision(1, EditText("a", "   "), "p")])

    def test_bad_label_value_becomes_conflict(self):
        with pytest.raises(RevisionConflict):
            apply_revisions(self.corpus(), [Revision(1, RelabelTurn("a", "  "), "p")])

    def test_merge_positive_delta(self):
        # merging groups of sizes 2 and 1 adds 2*2*1 positive pairs
        base = self.corpus()
        before = build_pairs(filter_hapaxes(base, 1))
        after_corpus = apply_revisions(base, [Revision(1, MergeLabels("x", "y"), "p")])
        after = build_pairs(filter_hapaxes(after_corpus, 1))
        n_pos = lambda ds: sum(p.gold for p in ds.pairs)
        assert n_pos(after) - n_pos(before) == 2 * 2 * 1
        assert n_pos(after) == expected_positive_count([3, 1])


class TestLedgerFormat:
    ENTRY = LedgerEntry(
        rev_id=3,
        timestamp="2026-02-01T09:00:00+00:00",
        actor="reviewer",
        pair_id="a::b",
        category=VerdictCategory.ANNOTATION_ERROR,
        action=RelabelTurn("b", "z"),
        note="merged per rubric",
    )
    MARKER = RoundMarker(rev_id=4, timestamp="2026-02-01T10:00:00+00:00", actor="system")

    def test_entry_round_trip(self):
        assert entry_from_dict(entry_to_dict(self.ENTRY)) == self.ENTRY

    def test_marker_round_trip(self):
        assert entry_from_dict(entry_to_dict(self.MARKER)) == self.MARKER

    def test_marker_line_shape(self):
        assert entry_to_dict(self.MARKER) == {
            "rev_id": 4,
            "timestamp": "2026-02-01T10:00:00+00:00",
            "actor": "system",
            "type": "round_advance",
        }

    def test_note_omitted_when_empty(self):
        entry = LedgerEntry(1, "t", "a", "p::q", VerdictCategory.PREDICTION_ERROR, None)
        assert "note" not in entry_to_dict(entry)

    def test_dumps_loads_round_trip(self):
        records = [self.ENTRY, self.MARKER]
        assert loads_ledger(dumps_ledger(records)) == records

    def test_rev_ids_must_increase(self):
        text = dumps_ledger([self.MARKER]) + dumps_ledger([self.ENTRY])
        with pytest.raises(ValidationError, match="not increasing"):
            loads_ledger(text)

    def test_invalid_json_carries_line_number(self):
        good = dumps_ledger([self.ENTRY])
        with pytest.raises(ValidationError, match="ledger line 2"):
            loads_ledger(good + "{nope\n")

    def test_bad_category_rejected(self):
        obj = entry_to_dict(self.ENTRY)
        obj["category"] = "mystery"
        with pytest.raises(ValidationError, match="malformed ledger record"):
            entry_from_dict(obj)

    def test_missing_file_reads_empty(self, tmp_path):
        assert read_ledger(tmp_path / "absent.jsonl") == []

    def test_append_then_read(self, tmp_path):
        path = tmp_path / "ledger.jsonl"
        append_ledger(path, self.ENTRY)
        append_ledger(path, self.MARKER)
        assert read_ledger(path) == [self.ENTRY, self.MARKER]
        assert path.read_bytes().count(b"\n") == 2


LABELS = {"a": "x", "b": "x", "c": "x", "d": "y", "e": "y", "f": "z"}
REFERENCE = {**LABELS, "b": "z"}  # the oracle believes b belongs with f
SPEC = SplitSpec(stratified=False)
EXPECTED_QUEUE = {"a::b", "b::a", "b::c", "c::b", "b::f", "f::b"}


def open_round(**kwargs):
    corpus = corpus_from_labels(LABELS)
    backend = OracleBackend(REFERENCE)
    state = start_round(
        corpus, backend, spec=SPEC, min_count=1, eval_split=None, **kwargs
    )
    return corpus, backend, state


def close_all(state):
    """One annotation fix (b -> z) plus prediction_error for the rest."""
    records = []
    for pair_id in sorted(d.pair_id for d in state.disagreements):
        if pair_id == "a::b":
            verdict = Verdict(pair_id, VerdictCategory.ANNOTATION_ERROR, actor="rev")
            state, entry = record_verdict(state, verdict, RelabelTurn("b", "z"))
        else:
            verdict = Verdict(pair_id, VerdictCategory.PREDICTION_ERROR, actor="rev")
            state, entry = record_verdict(state, verdict)
        records.append(entry)
    return state, records


class TestRounds:
    def test_round_opens_with_queue(self):
        _, _, state = open_round()
        assert state.round_no == 1
        assert {d.pair_id for d in state.disagreements} == EXPECTED_QUEUE
        assert state.open_count == 6 and state.closed_count == 0
        assert state.metrics.n == 30

    def test_clean_oracle_round_has_no_queue(self):
        corpus = corpus_from_labels(LABELS)
        state = start_round(corpus, OracleBackend(), spec=SPEC, min_count=1, eval_split=None)
        assert state.disagreements == ()
        assert state.metrics.accuracy == 1.0

    def test_empty_eval_slice_rejected(self):
        corpus = corpus_from_labels(LABELS)
        spec = SplitSpec(fractions=(1.0, 0.0, 0.0), stratified=False)
        with pytest.raises(EmptyDomainError, match="val"):
            start_round(corpus, OracleBackend(), spec=spec, min_count=1, eval_split=Split.VAL)

    def test_verdict_closes_pair(self):
        _, _, state = open_round()
        verdict = Verdict("b::f", VerdictCategory.PREDICTION_ERROR, actor="rev")
        state, entry = record_verdict(state, verdict)
        assert state.open_count == 5
        assert "b::f" not in state.open_ids
        assert entry.rev_id == 1 and state.next_rev_id == 2

    def test_verdict_on_agreeing_pair_rejected(self):
        _, _, state = open_round()
        with pytest.raises(ValidationError, match="not a disagreement"):
            record_verdict(state, Verdict("a::c", VerdictCategory.PREDICTION_ERROR))

    def test_prediction_error_takes_no_revision(self):
        _, _, state = open_round()
        with pytest.raises(ValidationError, match="no revision"):
            record_verdict(
                state,
                Verdict("b::f", VerdictCategory.PREDICTION_ERROR),
                RelabelTurn("b", "z"),
            )

    def test_annotation_error_requires_revision(self):
        _, _, state = open_round()
        with pytest.raises(ValidationError, match="require"):
            record_verdict(state, Verdict("a::b", VerdictCategory.ANNOTATION_ERROR))

    def test_timestamp_stamped_when_missing(self):
        _, _, state = open_round()
        _, entry = record_verdict(state, Verdict("b::f", VerdictCategory.PREDICTION_ERROR))
        assert entry.timestamp.endswith("+00:00")
        explicit = Verdict("b::f", VerdictCategory.PREDICTION_ERROR, timestamp="2026-01-01T00:00:00+00:00")
        _, entry2 = record_verdict(state, explicit)
        assert entry2.timestamp == "2026-01-01T00:00:00+00:00"

    def test_reverdict_supersedes(self):
        _, _, state = open_round()
        state, first = record_verdict(
            state,
            Verdict("a::b", VerdictCategory.ANNOTATION_ERROR),
            RelabelTurn("b", "z"),
        )
        state, second = record_verdict(
            state, Verdict("a::b", VerdictCategory.PREDICTION_ERROR)
        )
        assert second.rev_id == first.rev_id + 1
        assert state.verdicts["a::b"] is second
        assert staged_revisions(state) == []  # the superseding verdict staged nothing
        assert verdict_tally(state) == {
            "prediction_error": 1, "annotation_error": 0, "prep_error": 0,
        }

    def test_staged_revisions_in_ledger_order(self):
        _, _, state = open_round()
        state, _ = record_verdict(
            state, Verdict("b::c", VerdictCategory.PREP_ERROR), EditText("b", "is it b!")
        )
        state, _ = record_verdict(
            state, Verdict("a::b", VerdictCategory.ANNOTATION_ERROR), RelabelTurn("b", "z")
        )
        staged = staged_revisions(state)
        assert [r.rev_id for r in staged] == [1, 2]
        assert staged[0].action == EditText("b", "is it b!")
        assert staged[0].provenance == "b::c"

    def test_next_round_refuses_open_queue(self):
        _, backend, state = open_round()
        with pytest.raises(RoundStateError, match="6 open"):
            next_round(state, backend, train=False)

    def test_next_round_applies_and_cleans(self):
        corpus, backend, state = open_round()
        state, _ = close_all(state)
        state2, marker = next_round(state, backend, train=False, timestamp="2026-02-01T10:00:00+00:00")
        assert marker.rev_id == 7  # six verdicts came first
        assert state2.round_no == 2
        assert state2.corpus.version_id == corpus.version_id + 1
        assert state2.corpus.label_of("b").value == "z"
        assert state2.disagreements == ()
        assert state2.metrics.accuracy == 1.0
        assert state2.next_rev_id == 8

    def test_round_report_shape(self):
        _, _, state = open_round()
        report = round_report(state)
        assert report["round"] == 1
        assert report["eval_split"] == "all"
        assert report["disagreements"] == {"total": 6, "open": 6, "closed": 0}
        assert report["metrics"]["n"] == 30
        assert report["verdicts"]["prediction_error"] == 0
        assert "accuracy" in report["metrics_rendered"]


class TestReplay:
    def records_for_two_rounds(self):
        corpus, backend, state = open_round()
        state, records = close_all(state)
        state2, marker = next_round(
            state, backend, train=False, timestamp="2026-02-01T10:00:00+00:00"
        )
        return corpus, backend, state2, [*records, marker]

    def test_replay_matches_live_state(self):
        corpus, backend, live, records = self.records_for_two_rounds()
        replayed = replay(
            corpus, records, backend,
            spec=SPEC, min_count=1, eval_split=None, train_on_advance=False,
        )
        assert round_report(replayed) == round_report(live)
        assert serialize_corpus(replayed.corpus) == serialize_corpus(live.corpus)
        assert replayed.verdicts == {}  # round 2 has no verdicts yet

    def test_replay_is_deterministic(self):
        corpus, backend, _, records = self.records_for_two_rounds()
        kwargs = dict(spec=SPEC, min_count=1, eval_split=None, train_on_advance=False)
        a = replay(corpus, records, backend, **kwargs)
        b = replay(corpus, records, backend, **kwargs)
        assert serialize_corpus(a.corpus) == serialize_corpus(b.corpus)
        assert a.dataset == b.dataset

    def test_rev_gap_rejected(self):
        corpus, backend, _, records = self.records_for_two_rounds()
        del records[2]
        with pytest.raises(ValidationError, match="does not continue"):
            replay(corpus, records, backend, spec=SPEC, min_count=1, eval_split=None)

    def test_verdict_for_unknown_pair_fails_replay(self):
        corpus, backend, _, records = self.records_for_two_rounds()
        bad = LedgerEntry(
            rev_id=1, timestamp="t", actor="a",
            pair_id="a::c", category=VerdictCategory.PREDICTION_ERROR, action=None,
        )
        with pytest.raises(ValidationError, match="not a disagreement"):
            replay(corpus, [bad], backend, spec=SPEC, min_count=1, eval_split=None)


class TestTrainBackend:
    def test_builtin_backends_skip_export(self, tmp_path):
        corpus = corpus_from_labels(LABELS)
        dataset = __import__("concord.pairs", fromlist=["split"]).split(
            build_pairs(filter_hapaxes(corpus, 1)), SPEC
        )
        status = train_backend(OracleBackend(), dataset, workdir=tmp_path)
        assert status.status == "succeeded"
        assert list(tmp_path.iterdir()) == []

    def test_remote_gets_tsv_slices(self, tmp_path, stub_client):
        from concord.pairs import split as split_pairs

        corpus = corpus_from_labels(LABELS)
        dataset = split_pairs(build_pairs(filter_hapaxes(corpus, 1)), SPEC)
        backend = RemoteBackend("http://stub", client=stub_client)
        status = train_backend(backend, dataset, {"epochs": 1}, workdir=tmp_path)
        assert status.status == "succeeded"
        train_ds = read_pairs(tmp_path / "train.tsv")
        val_ds = read_pairs(tmp_path / "val.tsv")
        assert set(train_ds.split_of.values()) == {Split.TRAIN}
        assert set(val_ds.split_of.values()) == {Split.VAL}
        assert len(train_ds.pairs) + len(val_ds.pairs) < len(dataset.pairs)

    def test_failed_training_raises(self, tmp_path):
        def handler(request):
            if request.url.path == "/v1/train":
                return httpx.Response(200, json={"job_id": "j1"})
            return httpx.Response(200, json={"status": "failed", "detail": "nan loss"})

        backend = RemoteBackend(
            "http://fake", client=httpx.Client(transport=httpx.MockTransport(handler))
        )
        corpus = corpus_from_labels(LABELS)
        from concord.pairs import split as split_pairs

        dataset = split_pairs(build_pairs(filter_hapaxes(corpus, 1)), SPEC)
        with pytest.raises(BackendError, match="nan loss"):
            train_backend(backend, dataset, workdir=tmp_path)


class TestLedgerFileFlow:
    def test_live_session_round_trips_through_disk(self, tmp_path):
        corpus, backend, state = open_round()
        path = tmp_path / "ledger.jsonl"
        state, records = close_all(state)
        for record in records:
            append_ledger(path, record)
        state2, marker = next_round(state, backend, train=False)
        append_ledger(path, marker)

        loaded = read_ledger(path)
        assert loaded == [*records, marker]
        replayed = replay(
            corpus, loaded, backend,
            spec=SPEC, min_count=1, eval_split=None, train_on_advance=False,
        )
        assert round_report(replayed) == round_report(state2)

    def test_ledger_is_pure_jsonl(self, tmp_path):
        _, _, state = open_round()
        path = tmp_path / "ledger.jsonl"
        state, records = close_all(state)
        for record in records:
            append_ledger(path, record)
        for line in path.read_text(encoding="utf-8").splitlines():
            obj = json.loads(line)
            assert obj["rev_id"] >= 1
