"""REST service around the triage loop.

State lives in two flat files: the corpus (JSONL) and the verdict
ledger (JSONL). On startup the store replays the ledger from scratch
against a deterministic backend, so the service can be killed and
restarted at any point without losing a round. Writes are serialized
through a single lock; an ``Idempotency-Key`` header makes retried
POSTs safe.
"""

from __future__ import annotations

import threading
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from fastapi import Body, FastAPI, Header
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from .corpus import Corpus, Dialog, read_corpus
from .errors import (
    BackendError,
    ConcordError,
    RevisionConflict,
    RoundStateError,
    ValidationError,
)
from .gateway import Backend
from .pairs import PairInstance, Split, SplitSpec
from .triage import (
    LedgerEntry,
    RoundMarker,
    RoundState,
    Verdict,
    action_from_dict,
    append_ledger,
    next_round,
    parse_category,
    read_ledger,
    record_verdict,
    round_report,
    start_round,
)


class NotFoundError(ConcordError):
    """Lookup of a round or pair that does not exist."""


def _require_str(body: Mapping, key: str) -> str:
    value = body.get(key)
    if not isinstance(value, str) or not value:
        raise ValidationError(f"{key!r} must be a non-empty string")
    return value


def _optional_str(body: Mapping, key: str, default: str = "") -> str:
    value = body.get(key, default)
    if not isinstance(value, str):
        raise ValidationError(f"{key!r} must be a string")
    return value


def _verdict_info(entry: LedgerEntry) -> dict:
    return {
        "rev_id": entry.rev_id,
        "timestamp": entry.timestamp,
        "actor": entry.actor,
        "category": entry.category.value,
        "note": entry.note,
        "has_revision": entry.action is not None,
    }


class StateStore:
    """Owns the live round plus frozen snapshots of every closed round."""

    def __init__(
        self,
        corpus_path: str | Path,
        ledger_path: str | Path,
        backend: Backend,
        spec: SplitSpec = SplitSpec(),
        min_count: int = 2,
        eval_split: Split | None = Split.TEST,
        train_config: Mapping | None = None,
        train_first: bool = False,
        train_on_advance: bool = True,
        workdir: str | Path | None = None,
    ):
        self.corpus_path = Path(corpus_path)
        self.ledger_path = Path(ledger_path)
        self.backend = backend
        self._train_on_advance = train_on_advance
        self._workdir = workdir
        self._lock = threading.Lock()
        self._idempotent: dict[str, dict] = {}
        self._indexed_for: Any = None
        self._pairs_by_id: dict[str, PairInstance] = {}
        self._scores_by_id: dict[str, float] = {}
        self._dialogs_by_id: dict[str, Dialog] = {}

        corpus = read_corpus(self.corpus_path)
        self.history: list[RoundState] = []
        state = start_round(
            corpus,
            backend,
            spec,
            min_count,
            eval_split,
            train_config,
            train=train_first,
            workdir=workdir,
        )
        for record in read_ledger(self.ledger_path):
            if record.rev_id != state.next_rev_id:
                raise ValidationError(
                    f"ledger rev_id {record.rev_id} does not continue the round "
                    f"(expected {state.next_rev_id})"
                )
            if isinstance(record, RoundMarker):
                self.history.append(state)
                state, _ = next_round(
                    state,
                    backend,
                    actor=record.actor,
                    timestamp=record.timestamp,
                    train=train_on_advance,
                    workdir=workdir,
                )
            else:
                verdict = Verdict(
                    pair_id=record.pair_id,
                    category=record.category,
                    note=record.note,
                    actor=record.actor,
                    timestamp=record.timestamp,
                )
                state, _ = record_verdict(state, verdict, record.action)
        self.state = state

    # -- lookups ---------------------------------------------------------

    def round_state(self, round_no: int | None = None) -> RoundState:
        state = self.state
        if round_no is None or round_no == state.round_no:
            return state
        if 1 <= round_no <= len(self.history):
            return self.history[round_no - 1]
        raise NotFoundError(f"no round {round_no}")

    def _index(self, state: RoundState) -> None:
        # Rebuilt only when the live dataset changes; history scans reuse it
        # too because pair ids are unique within one service lifetime only
        # for the round they belong to, so index per state instead.
        if self._indexed_for is not state:
            self._pairs_by_id = {p.pair_id: p for p in state.dataset.pairs}
            self._scores_by_id = {p.pair_id: p.score for p in state.predictions}
            self._dialogs_by_id = {d.dialog_id: d for d in state.corpus.dialogs}
            self._indexed_for = state

    def _context(self, corpus: Corpus, turn_id: str, radius: int = 2) -> dict:
        turn = corpus.turn(turn_id)
        dialog = self._dialogs_by_id[turn.dialog_id]
        lo = max(0, turn.index - radius)
        window = dialog.turns[lo : turn.index + radius + 1]
        return {
            "dialog_id": dialog.dialog_id,
            "turns": [
                {
                    "turn_id": t.turn_id,
                    "index": t.index,
                    "speaker": t.speaker.value,
                    "text": t.text,
                    "is_question": corpus.is_question(t.turn_id),
                    "focus": t.turn_id == turn_id,
                }
                for t in window
            ],
        }

    # -- read views --------------------------------------------------------

    def rounds(self) -> dict:
        reports = [round_report(s) for s in self.history]
        reports.append(round_report(self.state))
        return {"current": self.state.round_no, "rounds": reports}

    def round_metrics(self, round_no: int) -> dict:
        state = self.round_state(round_no)
        return {
            "round": state.round_no,
            "eval_split": state.eval_split.value if state.eval_split else "all",
            "metrics": state.metrics.to_dict(),
            "rendered": state.metrics.rendered(),
        }

    def disagreement_rows(self, round_no: int | None = None, status: str = "all") -> dict:
        if status not in ("all", "open", "closed"):
            raise ValidationError(f"status must be all, open or closed, not {status!r}")
        state = self.round_state(round_no)
        rows = []
        for d in state.disagreements:
            entry = state.verdicts.get(d.pair_id)
            kind = "closed" if entry else "open"
            if status != "all" and kind != status:
                continue
            row = d.to_dict()
            row["status"] = kind
            row["verdict"] = _verdict_info(entry) if entry else None
            rows.append(row)
        return {
            "round": state.round_no,
            "status": status,
            "total": len(state.disagreements),
            "open": state.open_count,
            "closed": state.closed_count,
            "disagreements": rows,
        }

    def pair_detail(self, pair_id: str) -> dict:
        state = self.state
        self._index(state)
        pair = self._pairs_by_id.get(pair_id)
        if pair is None:
            raise NotFoundError(f"no pair {pair_id!r} in round {state.round_no}")
        corpus = state.corpus
        entry = state.verdicts.get(pair_id)
        score = self._scores_by_id.get(pair_id)
        return {
            "pair_id": pair.pair_id,
            "q1_id": pair.q1_id,
            "q2_id": pair.q2_id,
            "text1": pair.text1,
            "text2": pair.text2,
            "gold": pair.gold,
            "split": state.dataset.split_of[pair.pair_id].value,
            "label1": corpus.label_of(pair.q1_id).value,
            "label2": corpus.label_of(pair.q2_id).value,
            "score": score,
            "predicted": None if score is None else int(score >= 0.5),
            "verdict": _verdict_info(entry) if entry else None,
            "context": {
                "q1": self._context(corpus, pair.q1_id),
                "q2": self._context(corpus, pair.q2_id),
            },
        }

    def corpus_info(self) -> dict:
        corpus = self.state.corpus
        return {
            "version": corpus.version_id,
            "parent_version": corpus.parent_version,
            "n_turns": corpus.n_turns,
            "n_questions": len(corpus.questions),
        }

    # -- writes ------------------------------------------------------------

    def submit_verdict(self, body: Mapping, idempotency_key: str | None = None) -> dict:
        if not isinstance(body, Mapping):
            raise ValidationError("request body must be a JSON object")
        with self._lock:
            if idempotency_key and idempotency_key in self._idempotent:
                return self._idempotent[idempotency_key]
            verdict = Verdict(
                pair_id=_require_str(body, "pair_id"),
                category=parse_category(_require_str(body, "category")),
                note=_optional_str(body, "note"),
                actor=_optional_str(body, "actor", "anonymous") or "anonymous",
                timestamp=_optional_str(body, "timestamp"),
            )
            raw_action = body.get("action")
            if raw_action is not None and not isinstance(raw_action, Mapping):
                raise ValidationError("'action' must be an object or null")
            action = action_from_dict(raw_action) if raw_action is not None else None
            state, entry = record_verdict(self.state, verdict, action)
            append_ledger(self.ledger_path, entry)
            self.state = state
            response = {
                "rev_id": entry.rev_id,
                "pair_id": entry.pair_id,
                "category": entry.category.value,
                "round": state.round_no,
                "open": state.open_count,
                "closed": state.closed_count,
            }
            if idempotency_key:
                self._idempotent[idempotency_key] = response
            return response

    def advance_round(
        self, body: Mapping | None = None, idempotency_key: str | None = None
    ) -> dict:
        body = body or {}
        if not isinstance(body, Mapping):
            raise ValidationError("request body must be a JSON object")
        with self._lock:
            if idempotency_key and idempotency_key in self._idempotent:
                return self._idempotent[idempotency_key]
            closed = self.state
            state, marker = next_round(
                closed,
                self.backend,
                actor=_optional_str(body, "actor", "system") or "system",
                timestamp=_optional_str(body, "timestamp"),
                train=self._train_on_advance,
                workdir=self._workdir,
            )
            append_ledger(self.ledger_path, marker)
            self.history.append(closed)
            self.state = state
            response = {"advanced_from": closed.round_no, **round_report(state)}
            if idempotency_key:
                self._idempotent[idempotency_key] = response
            return response


# --- HTTP layer ----------------------------------------------------------


def _error_response(code: str, message: str, status: int) -> JSONResponse:
    return JSONResponse({"error": {"code": code, "message": message}}, status_code=status)


_ERROR_MAP: list[tuple[type[Exception], str, int]] = [
    (NotFoundError, "not_found", 404),
    (RevisionConflict, "conflict", 409),
    (RoundStateError, "conflict", 409),
    (BackendError, "backend_failed", 502),
    (ConcordError, "invalid", 400),
]


def build_app(
    store: StateStore,
    auth_token: str | None = None,
    ui_dir: str | Path | None = None,
) -> FastAPI:
    """Wrap a store in the REST API; optionally serve a UI bundle at /."""
    app = FastAPI(title="concord review service")

    @app.middleware("http")
    async def bearer_auth(request, call_next):
        if auth_token and request.url.path.startswith("/api"):
            if request.headers.get("authorization") != f"Bearer {auth_token}":
                return _error_response("unauthorized", "missing or bad bearer token", 401)
        return await call_next(request)

    def _make_handler(code: str, status: int):
        async def handle(request, exc):
            return _error_response(code, str(exc), status)

        return handle

    for exc_type, code, status in _ERROR_MAP:
        app.add_exception_handler(exc_type, _make_handler(code, status))

    @app.exception_handler(RequestValidationError)
    async def invalid_request(request, exc):
        return _error_response("invalid", str(exc), 400)

    @app.exception_handler(StarletteHTTPException)
    async def http_error(request, exc):
        code = "not_found" if exc.status_code == 404 else "http_error"
        return _error_response(code, str(exc.detail), exc.status_code)

    @app.get("/api/health")
    def health():
        return {"ok": True, "round": store.state.round_no}

    @app.get("/api/rounds")
    def rounds():
        return store.rounds()

    @app.get("/api/rounds/{round_no}")
    def round_summary(round_no: int):
        return round_report(store.round_state(round_no))

    @app.get("/api/rounds/{round_no}/metrics")
    def round_metrics(round_no: int):
        return store.round_metrics(round_no)

    @app.get("/api/rounds/{round_no}/disagreements")
    def round_disagreements(round_no: int, status: str = "all"):
        return store.disagreement_rows(round_no, status)

    @app.get("/api/pairs/{pair_id}")
    def pair_detail(pair_id: str):
        return store.pair_detail(pair_id)

    @app.get("/api/corpus/version")
    def corpus_version():
        return store.corpus_info()

    @app.post("/api/verdicts")
    def post_verdict(
        body: dict = Body(...),
        idempotency_key: str | None = Header(default=None),
    ):
        return store.submit_verdict(body, idempotency_key)

    @app.post("/api/rounds/next")
    def post_next_round(
        body: dict | None = Body(default=None),
        idempotency_key: str | None = Header(default=None),
    ):
        return store.advance_round(body, idempotency_key)

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
