"""Exception hierarchy shared by all concord modules.

Every error carries an ``exit_code`` used by the CLI: 1 for validation
problems, 2 for transport/backend failures.
"""


class ConcordError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1


class CorpusParseError(ConcordError):
    """Malformed corpus input. Carries the 1-based line number when known."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class ValidationError(ConcordError):
    """Input violates a documented invariant."""


class PairFormatError(ConcordError):
    """Malformed pairs TSV. Carries the 1-based row number when known."""

    def __init__(self, message: str, row_no: int | None = None):
        if row_no is not None:
            message = f"row {row_no}: {message}"
        super().__init__(message)
        self.row_no = row_no


class EmptyDomainError(ValidationError):
    """An operation was asked to work on too few items (e.g. < 2 questions)."""


class CoverageError(ValidationError):
    """Predictions do not exactly cover the gold slice."""


class StratificationError(ValidationError):
    """A split fraction produced an empty partition on a non-empty class."""


class RevisionConflict(ConcordError):
    """A revision references a label or turn that no longer exists."""

    def __init__(self, message: str, rev_id: int):
        super().__init__(f"revision {rev_id}: {message}")
        self.rev_id = rev_id


class RoundStateError(ConcordError):
    """The triage round is not in the state the operation requires."""


class BackendError(ConcordError):
    """A classifier backend rejected the request or returned garbage."""

    exit_code = 2


class TransportError(BackendError):
    """The backend endpoint could not be reached."""
