"""A minimal /v1 backend server scoring pairs by lexical overlap.

Useful for wiring checks and contract tests when no neural backend is
running: it speaks the full train/predict/health protocol but "training"
only flips a job to succeeded. Run standalone with
``python -m concord.stub_backend --port 9100``.
"""

from __future__ import annotations

import itertools
import threading

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .gateway import lexical_score


def build_stub_app(poll_delay: int = 0) -> FastAPI:
    """App factory. ``poll_delay`` makes each job report running for that
    many status polls before succeeding, to exercise client polling."""
    app = FastAPI(title="concord stub backend")
    jobs: dict[str, int] = {}
    counter = itertools.count(1)
    lock = threading.Lock()

    def bad_request(message: str) -> JSONResponse:
        return JSONResponse({"error": message}, status_code=400)

    @app.post("/v1/train")
    async def train(request: Request):
        body = await request.json()
        if not isinstance(body, dict) or not all(
            isinstance(body.get(k), str) for k in ("train_uri", "val_uri")
        ):
            return bad_request("train_uri and val_uri must be strings")
        with lock:
            job_id = f"job-{next(counter)}"
            jobs[job_id] = poll_delay
        return {"job_id": job_id}

    @app.get("/v1/train/{job_id}")
    async def train_status(job_id: str):
        with lock:
            if job_id not in jobs:
                return JSONResponse({"error": "unknown job"}, status_code=404)
            if jobs[job_id] > 0:
                jobs[job_id] -= 1
                return {"status": "running", "detail": "warming up"}
        return {"status": "succeeded", "detail": "stub training complete"}

    @app.post("/v1/predict")
    async def predict(request: Request):
        body = await request.json()
        pairs = body.get("pairs") if isinstance(body, dict) else None
        if not isinstance(pairs, list) or not pairs:
            return bad_request("pairs must be a non-empty list")
        predictions = []
        for item in pairs:
            if not isinstance(item, dict) or not all(
                isinstance(item.get(k), str) for k in ("pair_id", "text1", "text2")
            ):
                return bad_request("each pair needs pair_id, text1, text2 strings")
            score = lexical_score(item["text1"], item["text2"])
            predictions.append(
                {"pair_id": item["pair_id"], "label": int(score >= 0.5), "score": score}
            )
        return {"predictions": predictions}

    @app.get("/v1/health")
    async def health():
        return {"ok": True, "model": "stub-lexical"}

    return app


def main() -> None:  # pragma: no cover - manual entry point
    import argparse

    import uvicorn

    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=9100)
    args = parser.parse_args()
    uvicorn.run(build_stub_app(), host=args.host, port=args.port, log_level="warning")


if __name__ == "__main__":  # pragma: no cover
    main()
