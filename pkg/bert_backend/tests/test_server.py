import time

import pytest
from fastapi.testclient import TestClient

from bert_backend.server import build_app

from conftest import check_protocol_fixture, pair_rows, write_tsv


@pytest.fixture
def workdir(tmp_path):
    return tmp_path


@pytest.fixture
def client(workdir):
    app = build_app(checkpoint_dir=workdir / "checkpoints", workdir=workdir)
    return TestClient(app)


def wait_for_job(client, job_id: str, deadline: float = 120.0) -> dict:
    start = time.monotonic()
    while time.monotonic() - start < deadline:
        body = client.get(f"/v1/train/{job_id}").json()
        if body["status"] != "running":
            return body
        time.sleep(0.05)
    raise AssertionError(f"job {job_id} still running after {deadline}s")


def start_job(client, train_uri="train.tsv", val_uri="val.tsv", config=None) -> str:
    response = client.post(
        "/v1/train",
        json={"train_uri": train_uri, "val_uri": val_uri, "config": config or {}},
    )
    assert response.status_code == 200, response.text
    return response.json()["job_id"]


def small_corpus(workdir, n=48):
    write_tsv(workdir / "train.tsv", pair_rows(n))
    write_tsv(workdir / "val.tsv", pair_rows(8, split="val"))


# keep server-side training jobs fast
FAST_CONFIG = {"hidden_size": 32, "num_heads": 2, "num_layers": 1, "epochs": 1}


class TestProtocolConformance:
    def test_golden_fixture_suite(self, client, protocol_fixtures):
        for fixture in protocol_fixtures:
            check_protocol_fixture(client, fixture)


class TestHealth:
    def test_reports_profile_before_training(self, client):
        body = client.get("/v1/health").json()
        assert body == {"ok": True, "model": "bert-tiny/untrained"}


class TestPredict:
    def test_serves_before_any_training(self, client):
        response = client.post(
            "/v1/predict",
            json={"pairs": [{"pair_id": "x::y", "text1": "is it joy?", "text2": "joy?"}]},
        )
        assert response.status_code == 200
        (prediction,) = response.json()["predictions"]
        assert prediction["pair_id"] == "x::y"
        assert prediction["label"] in (0, 1)
        assert 0.0 <= prediction["score"] <= 1.0

    def test_preserves_request_order(self, client):
        pairs = [
            {"pair_id": f"p{i}", "text1": f"is it {i}?", "text2": f"was it {i}?"}
            for i in range(7)
        ]
        body = client.post("/v1/predict", json={"pairs": pairs}).json()
        assert [p["pair_id"] for p in body["predictions"]] == [p["pair_id"] for p in pairs]

    @pytest.mark.parametrize(
        "payload",
        [
            {},
            {"pairs": []},
            {"pairs": "a::b"},
            {"pairs": [{"pair_id": "a::b", "text1": "x"}]},
            {"pairs": [{"pair_id": 7, "text1": "x", "text2": "y"}]},
        ],
    )
    def test_malformed_bodies_rejected(self, client, payload):
        response = client.post("/v1/predict", json=payload)
        assert response.status_code == 400
        assert "error" in response.json()


class TestTrainValidation:
    def test_missing_uris_rejected(self, client):
        response = client.post("/v1/train", json={"config": {}})
        assert response.status_code == 400
        assert "error" in response.json()

    def test_config_must_be_an_object(self, client):
        response = client.post(
            "/v1/train", json={"train_uri": "a", "val_uri": "b", "config": "fast"}
        )
        assert response.status_code == 400

    def test_unknown_config_key_rejected_before_job_creation(self, client):
        response = client.post(
            "/v1/train",
            json={"train_uri": "a", "val_uri": "b", "config": {"epoochs": 1}},
        )
        assert response.status_code == 400
        assert "unknown config key" in response.json()["error"]

    def test_unknown_job_is_404(self, client):
        response = client.get("/v1/train/job-999")
        assert response.status_code == 404
        assert response.json() == {"error": "unknown job"}


class TestTrainJobs:
    def test_missing_tsv_fails_with_detail(self, client):
        job = start_job(client, train_uri="nope.tsv", val_uri="nope.tsv")
        body = wait_for_job(client, job)
        assert body["status"] == "failed"
        assert "nope.tsv" in body["detail"]

    def test_malformed_tsv_fails_with_row_number(self, client, workdir):
        lines = ["pair_id\tq1_id\tq2_id\tlabel\tsplit\ttext1\ttext2",
                 "a::b\ta\tb\t1\ttrain\tx\ty",
                 "b::a\tb\ta\t9\ttrain\tx\ty"]
        (workdir / "bad.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")
        job = start_job(client, train_uri="bad.tsv", val_uri="bad.tsv")
        body = wait_for_job(client, job)
        assert body["status"] == "failed"
        assert "row 3" in body["detail"]

    def test_fast_job_succeeds_and_swaps_the_served_model(self, client, workdir):
        small_corpus(workdir)
        job = start_job(client, config=FAST_CONFIG)
        body = wait_for_job(client, job)
        assert body["status"] == "succeeded", body
        assert "val accuracy" in body["detail"]
        assert client.get("/v1/health").json()["model"] == "bert-tiny/latest"

    def test_zero_epoch_job_succeeds(self, client, workdir):
        small_corpus(workdir, n=8)
        job = start_job(client, config={**FAST_CONFIG, "epochs": 0})
        body = wait_for_job(client, job)
        assert body["status"] == "succeeded"
        assert "trained 0 steps" in body["detail"]

    def test_second_concurrent_job_is_409(self, client, workdir):
        small_corpus(workdir, n=256)
        job = start_job(client, config={**FAST_CONFIG, "epochs": 40})
        response = client.post(
            "/v1/train", json={"train_uri": "train.tsv", "val_uri": "val.tsv", "config": {}}
        )
        assert response.status_code == 409
        assert "already running" in response.json()["error"]
        wait_for_job(client, job)

    def test_slot_frees_after_failure(self, client):
        job = start_job(client, train_uri="nope.tsv", val_uri="nope.tsv")
        wait_for_job(client, job)
        second = start_job(client, train_uri="nope.tsv", val_uri="nope.tsv")
        assert wait_for_job(client, second)["status"] == "failed"

    def test_predictions_served_while_training(self, client, workdir):
        small_corpus(workdir, n=256)
        job = start_job(client, config={**FAST_CONFIG, "epochs": 40})
        response = client.post(
            "/v1/predict",
            json={"pairs": [{"pair_id": "x::y", "text1": "is it joy?", "text2": "joy?"}]},
        )
        assert response.status_code == 200
        wait_for_job(client, job)


class TestCheckpointRetention:
    def test_only_latest_checkpoint_kept_and_reloaded(self, client, workdir):
        small_corpus(workdir)
        first = wait_for_job(client, start_job(client, config=FAST_CONFIG))
        second = wait_for_job(client, start_job(client, config={**FAST_CONFIG, "seed": 9}))
        assert first["status"] == second["status"] == "succeeded"
        checkpoints = list((workdir / "checkpoints").iterdir())
        assert [p.name for p in checkpoints] == ["latest.pt"]

        probe = {"pairs": [{"pair_id": "x::y", "text1": "is it joy?", "text2": "joy?"}]}
        before = client.post("/v1/predict", json=probe).json()

        # a fresh process over the same checkpoint dir serves the same model
        fresh = TestClient(build_app(checkpoint_dir=workdir / "checkpoints", workdir=workdir))
        after = fresh.post("/v1/predict", json=probe).json()
        assert after == before
        assert fresh.get("/v1/health").json()["model"] == "bert-tiny/latest"
