"""WordStream engine: time-series text tables in, stream-of-words pictures out.

The pipeline stages live in their own modules (ingest, nlp, metrics,
layout, render); :func:`wordstream.pipeline.run_pipeline` chains them, the
CLI and HTTP service are thin clients on top.
"""

from .errors import (
    AllRowsDroppedError,
    AllWeightsZeroError,
    ConfigError,
    EmptyInputError,
    NoTermsExtractedError,
    UnknownColumnError,
    WordStreamError,
)
from .layout import LayoutConfig, LayoutResult
from .pipeline import PipelineOutcome, PipelineStats, run_pipeline
from .types import CategoryMode, Metric, TableFormat, TokenizeMode

__version__ = "0.1.0"

__all__ = [
    "AllRowsDroppedError",
    "AllWeightsZeroError",
    "CategoryMode",
    "ConfigError",
    "EmptyInputError",
    "LayoutConfig",
    "LayoutResult",
    "Metric",
    "NoTermsExtractedError",
    "PipelineOutcome",
    "PipelineStats",
    "TableFormat",
    "TokenizeMode",
    "UnknownColumnError",
    "WordStreamError",
    "run_pipeline",
    "__version__",
]
