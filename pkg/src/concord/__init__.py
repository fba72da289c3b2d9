"""Annotation QA toolkit.

Build paraphrase-pair datasets from label equality in annotated
question corpora, audit the annotations with a classifier, and triage
model/gold disagreements into ledgered corpus revisions.
"""

from .corpus import (
    AnnotatedQuestion,
    AnnotationLabel,
    AnonymizationReport,
    Corpus,
    Dialog,
    Replacement,
    Speaker,
    Turn,
    annotation_histogram,
    anonymize,
    audit_anonymization,
    parse_corpus,
    read_corpus,
    serialize_corpus,
    write_corpus,
)
from .errors import (
    BackendError,
    ConcordError,
    CorpusParseError,
    CoverageError,
    EmptyDomainError,
    PairFormatError,
    RevisionConflict,
    RoundStateError,
    StratificationError,
    TransportError,
    ValidationError,
)
from .gateway import (
    Backend,
    BackendDescriptor,
    BackendKind,
    JobStatus,
    LexicalBackend,
    OracleBackend,
    PredictionRecord,
    RemoteBackend,
    TrainJob,
    lexical_score,
    make_backend,
    reference_labels_from_corpus,
)
from .metrics import (
    Disagreement,
    MetricsReport,
    dumps_disagreements,
    evaluate,
    extract_disagreements,
    format_percent,
)
from .pairs import (
    DatasetStats,
    PairDataset,
    PairInstance,
    Split,
    SplitSpec,
    build_pairs,
    downsample_negatives,
    expected_pair_count,
    expected_positive_count,
    filter_hapaxes,
    loads_pairs,
    dumps_pairs,
    make_pair_id,
    read_pairs,
    split,
    write_pairs,
)
from .triage import (
    EditText,
    LedgerEntry,
    MergeLabels,
    RelabelTurn,
    Revision,
    RoundMarker,
    RoundState,
    Verdict,
    VerdictCategory,
    append_ledger,
    apply_revisions,
    dumps_ledger,
    loads_ledger,
    next_round,
    parse_category,
    read_ledger,
    record_verdict,
    replay,
    round_report,
    start_round,
    train_backend,
    verdict_tally,
)
from .wordlist import common_words

__version__ = "0.1.0"

__all__ = [
    "AnnotatedQuestion",
    "AnnotationLabel",
    "AnonymizationReport",
    "Backend",
    "BackendDescriptor",
    "BackendError",
    "BackendKind",
    "ConcordError",
    "Corpus",
    "CorpusParseError",
    "CoverageError",
    "DatasetStats",
    "Dialog",
    "Disagreement",
    "EditText",
    "EmptyDomainError",
    "JobStatus",
    "LedgerEntry",
    "LexicalBackend",
    "MergeLabels",
    "MetricsReport",
    "OracleBackend",
    "PairDataset",
    "PairFormatError",
    "PairInstance",
    "PredictionRecord",
    "RelabelTurn",
    "RemoteBackend",
    "Replacement",
    "Revision",
    "RevisionConflict",
    "RoundMarker",
    "RoundState",
    "RoundStateError",
    "Speaker",
    "Split",
    "SplitSpec",
    "StratificationError",
    "TrainJob",
    "TransportError",
    "Turn",
    "ValidationError",
    "Verdict",
    "VerdictCategory",
    "annotation_histogram",
    "anonymize",
    "append_ledger",
    "apply_revisions",
    "audit_anonymization",
    "build_pairs",
    "common_words",
    "downsample_negatives",
    "dumps_disagreements",
    "dumps_ledger",
    "dumps_pairs",
    "evaluate",
    "expected_pair_count",
    "expected_positive_count",
    "extract_disagreements",
    "filter_hapaxes",
    "format_percent",
    "lexical_score",
    "loads_ledger",
    "loads_pairs",
    "make_backend",
    "make_pair_id",
    "next_round",
    "parse_category",
    "parse_corpus",
    "read_corpus",
    "read_ledger",
    "read_pairs",
    "record_verdict",
    "reference_labels_from_corpus",
    "replay",
    "round_report",
    "serialize_corpus",
    "split",
    "start_round",
    "train_backend",
    "verdict_tally",
    "write_corpus",
    "write_pairs",
]
