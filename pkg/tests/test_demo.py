import json
import socket
import subprocess
import sys
import time
from collections import Counter

import httpx
import pytest

from concord.corpus import read_corpus, serialize_corpus
from concord.demo import (
    EXPECTED_QUEUE_SIZE,
    EXPECTED_TALLY,
    demo_backend,
    demo_corpus,
    demo_plan,
    demo_verdicts,
    ensure_demo_files,
    plan_as_dicts,
    reference_corpus,
)
from concord.errors import BackendError
from concord.gateway import PredictionRecord
from concord.pairs import PairInstance, build_pairs, filter_hapaxes
from concord.triage import (
    next_round,
    record_verdict,
    replay,
    round_report,
    start_round,
    verdict_tally,
)


class TestDemoCorpus:
    def test_shape(self, demo):
        assert len(demo.dialogs) == 15
        assert len(demo.questions) == 40
        labels = Counter(q.label.value for q in demo.questions)
        assert len(labels) == 19
        assert all(count >= 2 for count in labels.values())  # queue survives filtering

    def test_pair_counts(self, demo):
        dataset = build_pairs(filter_hapaxes(demo, min_count=2))
        assert len(dataset.pairs) == 1560
        assert sum(p.gold for p in dataset.pairs) == 46

    def test_dialogs_alternate_speakers(self, demo):
        for dialog in demo.dialogs:
            texts = [t.text for t in dialog.turns]
            assert all(texts)
            assert [t.index for t in dialog.turns] == list(range(len(dialog.turns)))

    def test_plan_covers_queue_exactly(self, demo, scripted):
        state = start_round(demo, scripted, eval_split=None)
        queue = {d.pair_id for d in state.disagreements}
        assert queue == {row["pair_id"] for row in plan_as_dicts()}
        assert len(queue) == EXPECTED_QUEUE_SIZE == 22

    def test_tally_constants_agree_with_plan(self):
        tally = Counter(row.category.value for row in demo_plan())
        assert dict(tally) == {k: v for k, v in EXPECTED_TALLY.items() if v}
        assert sum(EXPECTED_TALLY.values()) == EXPECTED_QUEUE_SIZE


class TestScriptedBackend:
    def test_stage_advances_on_train(self, scripted):
        assert scripted.health()["model"] == "scripted/stage0"
        scripted.train("", "", {}).wait()
        assert scripted.health()["model"] == "scripted/stage1"
        scripted.train("", "", {}).wait()  # capped at the last stage
        assert scripted.health()["model"] == "scripted/stage1"

    def test_unknown_turn_rejected(self, scripted):
        ghost = PairInstance("zz::qq", "zz", "qq", "a", "b", 0)
        with pytest.raises(BackendError):
            scripted.predict([ghost])

    def test_planned_pairs_score_against_gold(self, demo, scripted):
        dataset = build_pairs(filter_hapaxes(demo, min_count=2))
        by_id = {p.pair_id: p for p in dataset.pairs}
        records = {r.pair_id: r for r in scripted.predict(list(dataset.pairs))}
        for row in plan_as_dicts():
            record: PredictionRecord = records[row["pair_id"]]
            assert record.predicted != by_id[row["pair_id"]].gold
            assert record.score in (0.92, 0.08)


class TestDemoLoop:
    def test_full_walkthrough(self, demo, scripted):
        state = start_round(demo, scripted, eval_split=None)
        for verdict, action in demo_verdicts():
            state, _ = record_verdict(state, verdict, action)
        assert state.open_count == 0
        assert verdict_tally(state) == EXPECTED_TALLY

        state2, marker = next_round(state, scripted)
        assert marker.rev_id == EXPECTED_QUEUE_SIZE + 1
        assert state2.round_no == 2
        assert state2.corpus.version_id == 2
        assert state2.disagreements == ()
        assert state2.metrics.accuracy == 1.0
        assert scripted.health()["model"] == "scripted/stage1"

        # the prep fix really landed in the corpus text
        assert "user13" not in state2.corpus.turn("anxiety-15-q2").text
        # the merged labels now compare equal
        label = state2.corpus.label_of
        assert label("disappointment-03-q1") == label("disappointment-03-q2")

    def test_replay_reproduces_serialization_bytes(self, demo):
        backend = demo_backend()
        state = start_round(demo, backend, eval_split=None)
        records = []
        for verdict, action in demo_verdicts():
            state, entry = record_verdict(state, verdict, action)
            records.append(entry)
        state, marker = next_round(state, backend)
        records.append(marker)

        one = replay(demo, records, demo_backend(), eval_split=None)
        two = replay(demo, records, demo_backend(), eval_split=None)
        assert serialize_corpus(one.corpus) == serialize_corpus(two.corpus)
        assert round_report(one) == round_report(two)
        assert serialize_corpus(one.corpus) == serialize_corpus(state.corpus)


class TestReferenceCorpus:
    def test_filtered_shape(self):
        corpus = reference_corpus()
        assert len(corpus.questions) == 1096
        kept = filter_hapaxes(corpus, min_count=2)
        assert len(kept) == 543
        labels = Counter(q.label.value for q in kept)
        sizes = Counter(labels.values())
        assert sizes[2] == 26 and sizes[3] == 70 and sizes[4] == 49
        assert sorted(v for v in labels.values() if v > 4) == [42, 43]

    def test_deterministic(self):
        assert serialize_corpus(reference_corpus()) == serialize_corpus(reference_corpus())

    def test_seed_changes_layout(self):
        assert serialize_corpus(reference_corpus(seed=8)) != serialize_corpus(reference_corpus())


class TestFiles:
    def test_ensure_demo_files(self, tmp_path):
        corpus_path, ledger_path = ensure_demo_files(tmp_path)
        assert corpus_path.exists()
        assert not ledger_path.exists()  # ledger starts empty
        corpus = read_corpus(corpus_path)
        assert serialize_corpus(corpus) == serialize_corpus(demo_corpus())
        # second call leaves the file alone
        before = corpus_path.read_bytes()
        ensure_demo_files(tmp_path)
        assert corpus_path.read_bytes() == before


def free_port() -> int:
    with socket.socket() as sock:
        sock.bind(("127.0.0.1", 0))
        return sock.getsockname()[1]


class TestCommandLine:
    def test_plan_subcommand_prints_script(self):
        proc = subprocess.run(
            [sys.executable, "-m", "concord.demo", "plan"],
            capture_output=True, text=True, timeout=60,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout) == plan_as_dicts()

    def test_init_subcommand_writes_corpus(self, tmp_path):
        proc = subprocess.run(
            [sys.executable, "-m", "concord.demo", "init", "--root", str(tmp_path)],
            capture_output=True, text=True, timeout=60,
        )
        assert proc.returncode == 0
        assert read_corpus(tmp_path / "corpus.jsonl").questions

    def test_serve_subcommand_end_to_end(self, tmp_path):
        port = free_port()
        proc = subprocess.Popen(
            [
                sys.executable, "-m", "concord.demo", "serve",
                "--root", str(tmp_path), "--port", str(port),
            ],
            stdout=subprocess.PIPE, stderr=subprocess.PIPE,
        )
        base = f"http://127.0.0.1:{port}"
        try:
            deadline = time.monotonic() + 30
            health = None
            while time.monotonic() < deadline:
                if proc.poll() is not None:
                    raise AssertionError(proc.stderr.read().decode(errors="replace"))
                try:
                    health = httpx.get(f"{base}/api/health", timeout=2)
                    break
                except httpx.TransportError:
                    time.sleep(0.2)
            assert health is not None, "server never came up"
            assert health.json()["ok"] is True

            queue = httpx.get(f"{base}/api/rounds/1/disagreements").json()
            assert queue["open"] == EXPECTED_QUEUE_SIZE

            row = plan_as_dicts()[0]
            posted = httpx.post(f"{base}/api/verdicts", json=row, timeout=5)
            assert posted.status_code == 200
            assert posted.json()["open"] == EXPECTED_QUEUE_SIZE - 1
            assert (tmp_path / "ledger.jsonl").read_text().count("\n") == 1
        finally:
            proc.terminate()
            proc.wait(timeout=10)
