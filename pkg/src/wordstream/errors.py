"""Exceptions raised by the pipeline, one per recoverable failure mode."""


class WordStreamError(Exception):
    """Base class for all pipeline errors.

    Every subclass carries the pipeline stage it belongs to so front ends
    (CLI, service) can produce a one-line message naming the failing stage.
    """

    stage = "pipeline"


class EmptyInputError(WordStreamError):
    """The input decoded to zero usable rows (no header or no data rows)."""

    stage = "ingest"


class UnknownColumnError(WordStreamError):
    """A named time/text column is not present in the header row."""

    stage = "ingest"


class AllRowsDroppedError(WordStreamError):
    """Every row was discarded during cleansing (blank time or text)."""

    stage = "ingest"


class NoTermsExtractedError(WordStreamError):
    """No term survived tagging and stop-word filtering in any time box.

    Usually signals a wrong text column or an over-aggressive mode (NER on
    text without recognizable entities).
    """

    stage = "metrics"


class AllWeightsZeroError(WordStreamError):
    """Every category weight is zero; there is nothing to lay out."""

    stage = "layout"


class ConfigError(WordStreamError):
    """A layout configuration invariant is violated (e.g. minFont > maxFont)."""

    stage = "config"
