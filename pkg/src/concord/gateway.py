"""Classifier backend contract, remote client, and built-in backends.

The core pipeline never links an ML runtime. Model predictions arrive
either from a remote process speaking the /v1 HTTP protocol or from two
built-in backends: an oracle (answers from gold or from a reference
label table; pipeline self-checks only) and a lexical overlap baseline.
"""

from __future__ import annotations

import abc
import json
import string
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Sequence

import httpx

from .corpus import Corpus
from .errors import BackendError, TransportError, ValidationError
from .pairs import PairInstance

DEFAULT_THRESHOLD = 0.5
DEFAULT_BATCH_SIZE = 256
MAX_IN_FLIGHT = 4


class BackendKind(str, Enum):
    REMOTE = "remote"
    ORACLE = "oracle"
    LEXICAL = "lexical"


@dataclass(frozen=True)
class BackendDescriptor:
    kind: BackendKind
    endpoint: str | None = None
    params: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind is BackendKind.REMOTE and not self.endpoint:
            raise ValidationError("remote backend requires an endpoint URL")


@dataclass(frozen=True, slots=True)
class PredictionRecord:
    """One model answer. ``predicted`` is derived as score >= threshold by
    every constructor that starts from a score; wire records carry the
    serving side's own decision."""

    pair_id: str
    predicted: int
    score: float

    def __post_init__(self) -> None:
        if self.predicted not in (0, 1):
            raise ValidationError(f"pair {self.pair_id!r}: predicted must be 0 or 1")
        if not 0.0 <= self.score <= 1.0:
            raise ValidationError(f"pair {self.pair_id!r}: score must be in [0, 1]")

    @classmethod
    def from_score(
        cls, pair_id: str, score: float, threshold: float = DEFAULT_THRESHOLD
    ) -> "PredictionRecord":
        return cls(pair_id, int(score >= threshold), score)

    def to_dict(self) -> dict:
        return {"pair_id": self.pair_id, "label": self.predicted, "score": self.score}


@dataclass(frozen=True, slots=True)
class JobStatus:
    status: str  # running | succeeded | failed
    detail: str = ""

    @property
    def terminal(self) -> bool:
        return self.status in ("succeeded", "failed")


class TrainJob(abc.ABC):
    job_id: str

    @abc.abstractmethod
    def status(self) -> JobStatus: ...

    def wait(self, timeout: float = 3600.0, interval: float = 0.5) -> JobStatus:
        deadline = time.monotonic() + timeout
        while True:
            st = self.status()
            if st.terminal:
                return st
            if time.monotonic() >= deadline:
                raise BackendError(f"training job {self.job_id} timed out")
            time.sleep(interval)


class CompletedJob(TrainJob):
    """No-op handle returned by backends that do not train."""

    def __init__(self, job_id: str = "builtin", detail: str = "nothing to train"):
        self.job_id = job_id
        self._detail = detail

    def status(self) -> JobStatus:
        return JobStatus("succeeded", self._detail)


class Backend(abc.ABC):
    name: str

    @abc.abstractmethod
    def train(self, train_uri: str, val_uri: str, config: Mapping) -> TrainJob: ...

    @abc.abstractmethod
    def predict(self, pairs: Sequence[PairInstance]) -> list[PredictionRecord]: ...

    def health(self) -> dict:
        return {"ok": True, "model": self.name}


def _check_predict_input(pairs: Sequence[PairInstance]) -> None:
    if not pairs:
        raise ValidationError("predict needs at least one pair")
    ids = {p.pair_id for p in pairs}
    if len(ids) != len(pairs):
        raise ValidationError("duplicate pair_id in predict input")


def reference_labels_from_corpus(corpus: Corpus) -> dict[str, str]:
    """turn_id -> label value table for the oracle backend."""
    return {q.turn.turn_id: q.label.value for q in corpus.questions}


class OracleBackend(Backend):
    """Answers from gold labels, or from a reference label table when given.

    Only useful for verifying the pipeline's own plumbing; the CLI's
    audit mode refuses it because evaluating gold against gold proves
    nothing about the data.
    """

    name = "oracle"

    def __init__(self, reference_labels: Mapping[str, str] | None = None):
        self._reference = dict(reference_labels) if reference_labels is not None else None

    def train(self, train_uri: str, val_uri: str, config: Mapping) -> TrainJob:
        return CompletedJob()

    def predict(self, pairs: Sequence[PairInstance]) -> list[PredictionRecord]:
        _check_predict_input(pairs)
        out = []
        for p in pairs:
            if self._reference is None:
                label = p.gold
            else:
                try:
                    label = int(self._reference[p.q1_id] == self._reference[p.q2_id])
                except KeyError as exc:
                    raise BackendError(f"no reference label for turn {exc.args[0]!r}") from None
            out.append(PredictionRecord.from_score(p.pair_id, float(label)))
        return out


def lexical_score(text1: str, text2: str) -> float:
    """Jaccard similarity of lowercased token sets, edge punctuation stripped."""

    def tokens(text: str) -> frozenset[str]:
        toks = (t.strip(string.punctuation) for t in text.lower().split())
        return frozenset(t for t in toks if t)

    a, b = tokens(text1), tokens(text2)
    if not a and not b:
        return 1.0
    return len(a & b) / len(a | b)


class LexicalBackend(Backend):
    """Token-overlap baseline; predicts paraphrase when Jaccard >= theta."""

    name = "lexical"

    def __init__(self, theta: float = DEFAULT_THRESHOLD):
        if not 0.0 <= theta <= 1.0:
            raise ValidationError("theta must be in [0, 1]")
        self._theta = theta

    def train(self, train_uri: str, val_uri: str, config: Mapping) -> TrainJob:
        return CompletedJob()

    def predict(self, pairs: Sequence[PairInstance]) -> list[PredictionRecord]:
        _check_predict_input(pairs)
        return [
            PredictionRecord.from_score(
                p.pair_id, lexical_score(p.text1, p.text2), self._theta
            )
            for p in pairs
        ]


class RemoteBackend(Backend):
    """HTTP client for the /v1 wire protocol.

    Prediction requests go out in batches with bounded parallelism and
    are reassembled in input order; any failed batch fails the whole
    call so callers never see partial results.
    """

    name = "remote"

    def __init__(
        self,
        endpoint: str,
        client: httpx.Client | None = None,
        batch_size: int = DEFAULT_BATCH_SIZE,
        max_in_flight: int = MAX_IN_FLIGHT,
        timeout: float = 30.0,
    ):
        if batch_size < 1 or max_in_flight < 1:
            raise ValidationError("batch_size and max_in_flight must be >= 1")
        self._endpoint = endpoint.rstrip("/")
        self._client = client if client is not None else httpx.Client(timeout=timeout)
        self._batch_size = batch_size
        self._max_in_flight = max_in_flight

    def _request(self, method: str, path: str, payload: dict | None = None) -> dict:
        url = f"{self._endpoint}{path}"
        try:
            resp = self._client.request(method, url, json=payload)
        except httpx.HTTPError as exc:
            raise TransportError(f"{url}: {exc}") from exc
        if resp.status_code != 200:
            raise BackendError(f"{url} returned {resp.status_code}: {resp.text[:200]}")
        try:
            data = resp.json()
        except ValueError as exc:
            raise BackendError(f"{url}: response is not JSON") from exc
        if not isinstance(data, dict):
            raise BackendError(f"{url}: expected a JSON object")
        return data

    def train(self, train_uri: str, val_uri: str, config: Mapping) -> TrainJob:
        data = self._request(
            "POST",
            "/v1/train",
            {"train_uri": train_uri, "val_uri": val_uri, "config": dict(config)},
        )
        job_id = data.get("job_id")
        if not isinstance(job_id, str) or not job_id:
            raise BackendError("train response missing job_id")
        return _RemoteJob(self, job_id)

    def job_status(self, job_id: str) -> JobStatus:
        data = self._request("GET", f"/v1/train/{job_id}")
        status = data.get("status")
        if status not in ("running", "succeeded", "failed"):
            raise BackendError(f"unknown job status {status!r}")
        return JobStatus(status, str(data.get("detail", "")))

    def _predict_batch(self, batch: Sequence[PairInstance]) -> list[PredictionRecord]:
        payload = {
            "pairs": [
                {"pair_id": p.pair_id, "text1": p.text1, "text2": p.text2} for p in batch
            ]
        }
        data = self._request("POST", "/v1/predict", payload)
        items = data.get("predictions")
        if not isinstance(items, list):
            raise BackendError("predict response missing predictions list")
        by_id: dict[str, PredictionRecord] = {}
        for item in items:
            try:
                record = PredictionRecord(
                    pair_id=item["pair_id"],
                    predicted=int(item["label"]),
                    score=float(item["score"]),
                )
            except (TypeError, KeyError, ValueError, ValidationError) as exc:
                raise BackendError(f"malformed prediction item: {exc}") from None
            if record.pair_id in by_id:
                raise BackendError(f"duplicate prediction for {record.pair_id!r}")
            by_id[record.pair_id] = record
        if set(by_id) != {p.pair_id for p in batch}:
            raise BackendError("predictions do not cover the requested pairs")
        return [by_id[p.pair_id] for p in batch]

    def predict(self, pairs: Sequence[PairInstance]) -> list[PredictionRecord]:
        _check_predict_input(pairs)
        batches = [
            pairs[i : i + self._batch_size]
            for i in range(0, len(pairs), self._batch_size)
        ]
        if len(batches) == 1:
            return self._predict_batch(batches[0])
        with ThreadPoolExecutor(max_workers=self._max_in_flight) as pool:
            chunks = list(pool.map(self._predict_batch, batches))
        return [record for chunk in chunks for record in chunk]

    def health(self) -> dict:
        data = self._request("GET", "/v1/health")
        if data.get("ok") is not True:
            raise BackendError(f"backend unhealthy: {data}")
        return data


class _RemoteJob(TrainJob):
    def __init__(self, backend: RemoteBackend, job_id: str):
        self._backend = backend
        self.job_id = job_id

    def status(self) -> JobStatus:
        return self._backend.job_status(self.job_id)


def make_backend(
    descriptor: BackendDescriptor,
    client: httpx.Client | None = None,
    reference_labels: Mapping[str, str] | None = None,
) -> Backend:
    """Instantiate the backend a descriptor names."""
    params = descriptor.params
    if descriptor.kind is BackendKind.ORACLE:
        if reference_labels is None and "reference" in params:
            from .corpus import read_corpus

            reference_labels = reference_labels_from_corpus(read_corpus(params["reference"]))
        return OracleBackend(reference_labels)
    if descriptor.kind is BackendKind.LEXICAL:
        return LexicalBackend(theta=float(params.get("theta", DEFAULT_THRESHOLD)))
    assert descriptor.endpoint is not None
    return RemoteBackend(
        descriptor.endpoint,
        client=client,
        batch_size=int(params.get("batch_size", DEFAULT_BATCH_SIZE)),
        max_in_flight=int(params.get("max_in_flight", MAX_IN_FLIGHT)),
        timeout=float(params.get("timeout", 30.0)),
    )


def dumps_predictions(records: Sequence[PredictionRecord]) -> str:
    """Predictions as JSONL, one wire-format object per line."""
    return "".join(json.dumps(r.to_dict(), sort_keys=True) + "\n" for r in records)


def loads_predictions(text: str) -> list[PredictionRecord]:
    out: list[PredictionRecord] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            item = json.loads(line)
            out.append(
                PredictionRecord(
                    pair_id=item["pair_id"],
                    predicted=int(item["label"]),
                    score=float(item["score"]),
                )
            )
        except (ValueError, TypeError, KeyError) as exc:
            raise ValidationError(f"predictions line {line_no}: {exc}") from None
    return out


def train(
    descriptor: BackendDescriptor,
    train_uri: str,
    val_uri: str,
    config: Mapping,
    client: httpx.Client | None = None,
) -> TrainJob:
    return make_backend(descriptor, client).train(train_uri, val_uri, config)


def predict(
    descriptor: BackendDescriptor,
    pairs: Sequence[PairInstance],
    client: httpx.Client | None = None,
    reference_labels: Mapping[str, str] | None = None,
) -> list[PredictionRecord]:
    return make_backend(descriptor, client, reference_labels).predict(pairs)
