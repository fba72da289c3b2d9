"""Shared fixtures: small corpora, a stub remote server, protocol checks."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from concord.corpus import (
    AnnotatedQuestion,
    AnnotationLabel,
    Corpus,
    Dialog,
    Speaker,
    Turn,
)
from concord.demo import demo_backend, demo_corpus
from concord.stub_backend import build_stub_app

FIXTURES = Path(__file__).parent / "fixtures"


def make_question(turn_id: str, dialog_id: str, index: int, text: str, label: str) -> tuple[Turn, AnnotatedQuestion]:
    turn = Turn(turn_id=turn_id, dialog_id=dialog_id, index=index, speaker=Speaker.QUESTIONER, text=text)
    return turn, AnnotatedQuestion(turn=turn, label=AnnotationLabel(label))


def corpus_from_labels(labels: dict[str, str], dialog_id: str = "d1") -> Corpus:
    """One-dialog corpus with a question turn per (turn_id -> label) entry."""
    turns, questions = [], []
    for i, (turn_id, label) in enumerate(labels.items()):
        turn, q = make_question(turn_id, dialog_id, i, f"is it {turn_id}?", label)
        turns.append(turn)
        questions.append(q)
    dialog = Dialog(dialog_id=dialog_id, participants=("p1", "p2"), turns=tuple(turns))
    return Corpus(version_id=1, dialogs=(dialog,), questions=tuple(questions))


@pytest.fixture
def demo():
    return demo_corpus()


@pytest.fixture
def scripted():
    return demo_backend()


@pytest.fixture
def stub_client():
    return TestClient(build_stub_app())


@pytest.fixture
def slow_stub_client():
    return TestClient(build_stub_app(poll_delay=2))


def check_protocol_fixture(client, fixture: dict) -> None:
    """Drive one golden wire fixture against a /v1 server.

    Steps run in order; ``{job_id}`` in a path is filled from the most
    recent response that carried one. Assertions cover status, required
    key types, and prediction alignment, not exact scores, so any
    conforming backend passes the same fixtures.
    """
    captured: dict[str, str] = {}
    for step in fixture["steps"]:
        path = step["path"].format(**captured)
        if step["method"] == "GET":
            response = client.get(path)
        else:
            response = client.post(path, json=step.get("json"))
        expect = step["expect"]
        status = expect.get("status")
        if isinstance(status, list):
            assert status[0] <= response.status_code <= status[1], (
                f"{path}: status {response.status_code} not in {status}"
            )
        else:
            assert response.status_code == status, f"{path}: {response.text}"
        if response.status_code >= 400:
            continue
        body = response.json()
        types = {"str": str, "int": int, "float": (int, float), "bool": bool, "list": list}
        for key, typename in expect.get("required", {}).items():
            assert key in body, f"{path}: missing {key!r} in {body}"
            assert isinstance(body[key], types[typename]), f"{path}: {key!r} is {type(body[key])}"
        if "status_in" in expect:
            assert body["status"] in expect["status_in"], body
        if "ok" in expect:
            assert body["ok"] is expect["ok"]
        if "predictions_for" in expect:
            want_ids = expect["predictions_for"]
            rows = body["predictions"]
            assert [r["pair_id"] for r in rows] == want_ids
            for row in rows:
                assert row["label"] in (0, 1), row
                assert isinstance(row["score"], (int, float)) and 0.0 <= row["score"] <= 1.0, row
        if "job_id" in body:
            captured["job_id"] = body["job_id"]


@pytest.fixture
def protocol_fixtures() -> list[dict]:
    files = sorted((FIXTURES / "protocol").glob("*.json"))
    assert files, "protocol fixture files missing"
    return [json.loads(f.read_text(encoding="utf-8")) for f in files]
