"""HTTP service wrapping the pipeline for interactive clients.

One boundary operation: POST /api/run takes the uploaded table plus an
options document and returns the canonical layout-schema/v1 JSON produced
by the renderer, byte-identical across repeat calls. The preview and
sample endpoints exist so a front end never parses CSV itself.

Run with: uvicorn wordstream.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, Form, UploadFile
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel, Field, ValidationError

from . import __version__, ingest
from .cli import sample_bytes
from .errors import WordStreamError
from .layout import LayoutConfig
from .pipeline import run_pipeline
from .render import emit_json
from .types import CategoryMode, Metric, TableFormat, TokenizeMode

PREVIEW_ROWS = 50
MAX_UPLOAD_BYTES = 20 * 1024 * 1024


class RunOptions(BaseModel):
    """Pipeline options accepted by /api/run and /api/preview."""

    timeCol: str
    textCol: str
    format: TableFormat = TableFormat.CSV
    minFont: float = 12.0
    maxFont: float = 42.0
    topK: int = Field(default=8, ge=1)
    width: float = 1200.0
    height: float = 600.0
    mode: CategoryMode = CategoryMode.POS
    metric: Metric = Metric.FREQUENCY
    tokenization: TokenizeMode = TokenizeMode.WORD

    def layout_config(self) -> LayoutConfig:
        return LayoutConfig(
            min_font=float(self.minFont),
            max_font=float(self.maxFont),
            top_k=int(self.topK),
            width=float(self.width),
            height=float(self.height),
            mode=self.mode,
            metric=self.metric,
            tokenization=self.tokenization,
        )


class PreviewResponse(BaseModel):
    headers: list[str]
    rows: list[list[str]]
    totalRows: int
    raggedRows: int
    decodeReplacements: int


class HealthResponse(BaseModel):
    status: str
    version: str


class ErrorResponse(BaseModel):
    stage: str
    message: str


app = FastAPI(title="wordstream", version=__version__)
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.exception_handler(WordStreamError)
async def pipeline_error(_request, exc: WordStreamError):
    body = ErrorResponse(stage=exc.stage, message=str(exc))
    return JSONResponse(status_code=422, content=body.model_dump())


@app.get("/api/health", response_model=HealthResponse)
async def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.get("/api/sample")
async def sample() -> Response:
    return Response(content=sample_bytes(), media_type="text/csv")


@app.post("/api/preview", response_model=PreviewResponse,
          responses={422: {"model": ErrorResponse}})
async def preview(file: UploadFile, format: str = Form("csv")) -> PreviewResponse:
    data = await _read_upload(file)
    table = ingest.parse_table(data, TableFormat(format))
    return PreviewResponse(
        headers=table.headers,
        rows=table.rows[:PREVIEW_ROWS],
        totalRows=len(table.rows),
        raggedRows=table.ragged_rows,
        decodeReplacements=table.decode_replacements,
    )


@app.post("/api/run", responses={422: {"model": ErrorResponse}})
async def run(file: UploadFile, options: str = Form(...)) -> Response:
    try:
        parsed = RunOptions.model_validate_json(options)
    except ValidationError as exc:
        body = ErrorResponse(stage="config", message=_validation_summary(exc))
        return JSONResponse(status_code=422, content=body.model_dump())
    data = await _read_upload(file)
    outcome = run_pipeline(
        data,
        parsed.format,
        parsed.timeCol,
        parsed.textCol,
        parsed.layout_config(),
    )
    return Response(content=emit_json(outcome.result), media_type="application/json")


async def _read_upload(file: UploadFile) -> bytes:
    data = await file.read()
    if len(data) > MAX_UPLOAD_BYTES:
        raise WordStreamError(f"upload exceeds {MAX_UPLOAD_BYTES} bytes")
    return data


def _validation_summary(exc: ValidationError) -> str:
    first = exc.errors()[0]
    location = ".".join(str(part) for part in first["loc"])
    return f"{location}: {first['msg']}"
