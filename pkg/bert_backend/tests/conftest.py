"""Shared fixtures: TSV writing, the golden wire-protocol checker.

The protocol checker and its fixture files are duplicated from the
pair-tooling repo on purpose: the two packages share a wire contract,
not code, and each side must be able to verify the contract alone.
"""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from bert_backend.data import HEADER

FIXTURES = Path(__file__).parent / "fixtures"


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n")


def write_tsv(path: Path, rows: list[tuple]) -> Path:
    """Rows are (pair_id, q1_id, q2_id, label, split, text1, text2)."""
    lines = [HEADER]
    for row in rows:
        lines.append("\t".join(_escape(str(cell)) for cell in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def pair_rows(n: int, split: str = "train") -> list[tuple]:
    """n alternating positive/negative rows with an obvious lexical cue."""
    rows = []
    for i in range(n):
        if i % 2:
            rows.append((f"p{i}a::p{i}b", f"p{i}a", f"p{i}b", 1, split,
                         f"is it anger {i}?", f"could it be anger {i}?"))
        else:
            rows.append((f"p{i}a::p{i}b", f"p{i}a", f"p{i}b", 0, split,
                         f"is it anger {i}?", f"could it be joy {i}?"))
    return rows


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
