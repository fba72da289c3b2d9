"""The /v1 training and prediction service.

One training job runs at a time; a second submission while one is
running is refused with 409. Predictions are served concurrently from
the latest checkpoint (or an untrained model before the first job
finishes) and keep request order. All error bodies are
``{"error": message}``.

Run standalone with ``python -m bert_backend.server --port 9200``.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .config import PROFILES, ConfigError, TrainConfig, config_from_wire
from .data import read_pairs_tsv
from .model import TrainedModel, fine_tune

CHECKPOINT_NAME = "latest.pt"


@dataclass
class Job:
    status: str = "running"
    detail: str = "queued"


class BackendState:
    """Job registry plus the currently served model.

    ``served`` is swapped under the lock but never mutated, so predict
    handlers can score against it without holding the lock.
    """

    def __init__(self, checkpoint_dir: Path, workdir: Path, profile: str) -> None:
        self.checkpoint_dir = checkpoint_dir
        self.workdir = workdir
        self.default_config = PROFILES[profile]
        self.lock = threading.Lock()
        self.jobs: dict[str, Job] = {}
        self.active_job: str | None = None
        self.counter = itertools.count(1)
        self.served: TrainedModel | None = None
        self.served_name = f"bert-{profile}/untrained"

    @property
    def checkpoint_path(self) -> Path:
        return self.checkpoint_dir / CHECKPOINT_NAME

    def current_model(self) -> TrainedModel:
        with self.lock:
            if self.served is None:
                if self.checkpoint_path.exists():
                    self.served = TrainedModel.load(self.checkpoint_path)
                    self.served_name = _model_name(self.served.config, trained=True)
                else:
                    self.served = TrainedModel.untrained(self.default_config)
            return self.served

    def swap(self, trained: TrainedModel) -> None:
        with self.lock:
            self.served = trained
            self.served_name = _model_name(trained.config, trained=True)


def _model_name(config: TrainConfig, trained: bool) -> str:
    base = config.model_name or f"bert-{config.profile}"
    return f"{base}/{'latest' if trained else 'untrained'}"


def _resolve(uri: str, workdir: Path) -> Path:
    if uri.startswith("file://"):
        uri = uri[len("file://") :]
    path = Path(uri)
    return path if path.is_absolute() else workdir / path


def build_app(
    checkpoint_dir: str | Path = "checkpoints",
    workdir: str | Path = ".",
    profile: str = "tiny",
) -> FastAPI:
    app = FastAPI(title="bert backend")
    state = BackendState(Path(checkpoint_dir), Path(workdir), profile)
    app.state.backend = state

    def bad_request(message: str, status_code: int = 400) -> JSONResponse:
        return JSONResponse({"error": message}, status_code=status_code)

    def run_training(job_id: str, train_uri: str, val_uri: str, config: TrainConfig) -> None:
        def progress(message: str) -> None:
            with state.lock:
                state.jobs[job_id].detail = message

        try:
            train_rows = read_pairs_tsv(_resolve(train_uri, state.workdir))
            val_rows = read_pairs_tsv(_resolve(val_uri, state.workdir))
            train_rows = [r for r in train_rows if r.split == "train"] or train_rows
            trained, summary = fine_tune(train_rows, val_rows, config, progress)
            trained.save(state.checkpoint_path)
            state.swap(trained)
            val_part = (
                f"val accuracy {summary['val_accuracy']:.4f}"
                if summary["val_accuracy"] is not None
                else "no val rows"
            )
            detail = f"trained {summary['steps']} steps on {summary['n_train']} pairs; {val_part}"
            status = "succeeded"
        except Exception as exc:  # any failure must land in a terminal status
            detail = str(exc) or type(exc).__name__
            status = "failed"
        with state.lock:
            state.jobs[job_id].status = status
            state.jobs[job_id].detail = detail
            state.active_job = None

    @app.post("/v1/train")
    async def train(request: Request):
        body = await request.json()
        if not isinstance(body, dict) or not all(
            isinstance(body.get(k), str) for k in ("train_uri", "val_uri")
        ):
            return bad_request("train_uri and val_uri must be strings")
        wire_config = body.get("config", {})
        if not isinstance(wire_config, dict):
            return bad_request("config must be an object")
        try:
            config = config_from_wire(wire_config, default_profile=state.default_config.profile)
        except ConfigError as exc:
            return bad_request(str(exc))
        with state.lock:
            if state.active_job is not None:
                return bad_request("a training job is already running", status_code=409)
            job_id = f"job-{next(state.counter)}"
            state.jobs[job_id] = Job()
            state.active_job = job_id
        thread = threading.Thread(
            target=run_training,
            args=(job_id, body["train_uri"], body["val_uri"], config),
            daemon=True,
        )
        thread.start()
        return {"job_id": job_id}

    @app.get("/v1/train/{job_id}")
    async def train_status(job_id: str):
        with state.lock:
            job = state.jobs.get(job_id)
            if job is None:
                return bad_request("unknown job", status_code=404)
            return {"status": job.status, "detail": job.detail}

    @app.post("/v1/predict")
    async def predict(request: Request):
        body = await request.json()
        pairs = body.get("pairs") if isinstance(body, dict) else None
        if not isinstance(pairs, list) or not pairs:
            return bad_request("pairs must be a non-empty list")
        for item in pairs:
            if not isinstance(item, dict) or not all(
                isinstance(item.get(k), str) for k in ("pair_id", "text1", "text2")
            ):
                return bad_request("each pair needs pair_id, text1, text2 strings")
        model = state.current_model()
        scores = model.scores([(item["text1"], item["text2"]) for item in pairs])
        return {
            "predictions": [
                {"pair_id": item["pair_id"], "label": int(score >= 0.5), "score": score}
                for item, score in zip(pairs, scores)
            ]
        }

    @app.get("/v1/health")
    async def health():
        with state.lock:
            return {"ok": True, "model": state.served_name}

    return app


def main() -> None:  # pragma: no cover - manual entry point
    import argparse

    import uvicorn

    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=9200)
    parser.add_argument("--checkpoint-dir", default="checkpoints")
    parser.add_argument("--workdir", default=".")
    parser.add_argument("--profile", default="tiny", choices=sorted(PROFILES))
    args = parser.parse_args()
    app = build_app(args.checkpoint_dir, args.workdir, args.profile)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")


if __name__ == "__main__":  # pragma: no cover
    main()
