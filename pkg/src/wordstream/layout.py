"""Hybrid streamgraph and word-placement geometry.

Category bands are stacked on a silhouette baseline (stack centered on the
viewport's horizontal midline) and scaled so the tallest stack spans 90% of
the viewport height, leaving margin for the time axis. Band boundaries
between box centers are interpolated with a monotone piecewise-cubic curve
(Hermite with zero knot tangents). Because every boundary uses the same
blending function, interpolated weights stay non-negative and bands never
invert, and each boundary stays within the range of its two endpoints.

Words are placed per (box, category) cell on a shared occupancy grid.
Candidate positions radiate from the cell center (vertical distance first,
then horizontal, upper/left candidates before lower/right ones); a word
that fits nowhere is retried at 90% size steps down to the minimum font,
then dropped with reason "no-fit".
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field

from .charwidth import text_width
from .errors import AllWeightsZeroError, ConfigError
from .metrics import BoxSelection
from .types import CategoryMode, Metric, TokenizeMode

GRID_CELL = 2.0
HEIGHT_USE = 0.9
SHRINK_STEP = 0.9
DROP_REASON_NO_FIT = "no-fit"


@dataclass(frozen=True)
class LayoutConfig:
    """Every user-tunable layout parameter."""

    min_font: float = 12.0
    max_font: float = 42.0
    top_k: int = 8
    width: float = 1200.0
    height: float = 600.0
    mode: CategoryMode = CategoryMode.POS
    metric: Metric = Metric.FREQUENCY
    tokenization: TokenizeMode = TokenizeMode.WORD

    def validate(self) -> "LayoutConfig":
        if self.min_font <= 0:
            raise ConfigError(f"minFont must be positive, got {self.min_font}")
        if self.min_font > self.max_font:
            raise ConfigError(
                f"minFont <= maxFont violated ({self.min_font} > {self.max_font})"
            )
        if self.top_k < 1:
            raise ConfigError(f"topK must be >= 1, got {self.top_k}")
        if self.width < 100:
            raise ConfigError(f"width must be >= 100, got {self.width}")
        if self.height < 100:
            raise ConfigError(f"height must be >= 100, got {self.height}")
        return self


@dataclass
class StreamLayer:
    """One category band: sampled boundaries plus the exact knot data."""

    category: str
    top: list[float]
    bottom: list[float]
    weights: list[float]
    centers: list[float] = field(repr=False, default_factory=list)
    top_knots: list[float] = field(repr=False, default_factory=list)
    bottom_knots: list[float] = field(repr=False, default_factory=list)

    def top_at(self, x: float) -> float:
        return _eval_curve(self.centers, self.top_knots, x)

    def bottom_at(self, x: float) -> float:
        return _eval_curve(self.centers, self.bottom_knots, x)

    def top_max(self, xa: float, xb: float) -> float:
        """Largest (lowest on screen) top-boundary value over [xa, xb]."""
        return max(self._span_values(self.top_knots, self.top_at, xa, xb))

    def bottom_min(self, xa: float, xb: float) -> float:
        return min(self._span_values(self.bottom_knots, self.bottom_at, xa, xb))

    def _span_values(self, knots, at, xa, xb):
        # Boundaries are monotone between knots, so span extrema occur at
        # the span ends or at interior knots.
        values = [at(xa), at(xb)]
        for center, knot in zip(self.centers, knots):
            if xa < center < xb:
                values.append(knot)
        return values


@dataclass(frozen=True)
class PlacedWord:
    term: str
    category: str
    box_index: int
    font_size: float
    x: float
    y: float
    w: float
    h: float
    value: float
    rank: int


@dataclass(frozen=True)
class DroppedWord:
    term: str
    category: str
    box_index: int
    reason: str


@dataclass
class LayoutResult:
    """The full geometry contract consumed by renderers and the web UI."""

    config: LayoutConfig
    time_labels: list[str]
    x_samples: list[float]
    layers: list[StreamLayer]
    words: list[PlacedWord]
    dropped: list[DroppedWord]

    @property
    def viewport(self) -> tuple[float, float]:
        return (self.config.width, self.config.height)


def box_centers(n: int, width: float) -> list[float]:
    return [(t + 0.5) * width / n for t in range(n)]


def compute_layers(
    weights: dict[str, list[float]], config: LayoutConfig
) -> list[StreamLayer]:
    """Stack per-category weight curves on a centered silhouette baseline.

    Band thickness at each box center is exactly ``scale * weight``; the
    tallest stack spans HEIGHT_USE of the viewport height.
    """
    categories = list(weights)
    n = len(next(iter(weights.values())))
    totals = [sum(weights[c][t] for c in categories) for t in range(n)]
    peak = max(totals)
    if peak <= 0:
        raise AllWeightsZeroError("every category weight is zero")
    scale = HEIGHT_USE * config.height / peak
    mid = config.height / 2

    centers = box_centers(n, config.width)
    xs = sample_xs(centers, config.width)

    # Cumulative knots: stack bottom sits at -total/2 (the silhouette).
    cumulative = [[-totals[t] / 2 for t in range(n)]]
    for category in categories:
        prev = cumulative[-1]
        cumulative.append([prev[t] + weights[category][t] for t in range(n)])

    layers = []
    for i, category in enumerate(categories):
        top_knots = [mid + scale * v for v in cumulative[i]]
        bottom_knots = [mid + scale * v for v in cumulative[i + 1]]
        layers.append(
            StreamLayer(
                category=category,
                top=[_eval_curve(centers, top_knots, x) for x in xs],
                bottom=[_eval_curve(centers, bottom_knots, x) for x in xs],
                weights=list(weights[category]),
                centers=centers,
                top_knots=top_knots,
                bottom_knots=bottom_knots,
            )
        )
    return layers


def sample_xs(centers: list[float], width: float, per_interval: int = 8) -> list[float]:
    """Sample grid: viewport edges, box centers, and interior subdivisions."""
    xs = [0.0]
    for i in range(len(centers) - 1):
        step = (centers[i + 1] - centers[i]) / per_interval
        xs.extend(centers[i] + j * step for j in range(per_interval))
    xs.append(centers[-1])
    xs.append(width)
    return xs


def font_size(value: float, vmin: float, vmax: float, config: LayoutConfig) -> float:
    """Linear map of a metric value onto [minFont, maxFont]."""
    if vmax == vmin:
        return (config.min_font + config.max_font) / 2
    ratio = (value - vmin) / (vmax - vmin)
    return config.min_font + (config.max_font - config.min_font) * ratio


def place_words(
    layers: list[StreamLayer],
    selections: list[BoxSelection],
    config: LayoutConfig,
    time_labels: list[str] | None = None,
) -> LayoutResult:
    """Place every selected word collision-free inside its cell region.

    Cells are processed in (box, category order, rank) order; the occupancy
    grid is shared across the whole viewport, so no two placed words ever
    overlap. Selected words always end up either placed or dropped.
    """
    n = len(layers[0].weights)
    by_category = {layer.category: layer for layer in layers}
    values = [v for sel in selections for _, v in sel.terms]
    vmin = min(values) if values else 0.0
    vmax = max(values) if values else 0.0

    grid = _OccupancyGrid(config.width, config.height)
    column = config.width / n
    category_order = {layer.category: i for i, layer in enumerate(layers)}
    ordered = sorted(selections, key=lambda s: (s.box_index, category_order[s.category]))

    words: list[PlacedWord] = []
    dropped: list[DroppedWord] = []
    for selection in ordered:
        layer = by_category[selection.category]
        x0 = selection.box_index * column
        x1 = x0 + column
        # A zero-weight cell is an empty region even where the smoothed
        # band spills over from a neighboring box.
        cell_empty = layer.weights[selection.box_index] == 0
        for rank, (term, value) in enumerate(selection.terms):
            size = font_size(value, vmin, vmax, config)
            placed = (
                None
                if cell_empty
                else _place_one(term, size, layer, x0, x1, grid, config)
            )
            if placed is None:
                dropped.append(
                    DroppedWord(term, selection.category, selection.box_index, DROP_REASON_NO_FIT)
                )
            else:
                x, y, w, h, used_size = placed
                words.append(
                    PlacedWord(
                        term=term,
                        category=selection.category,
                        box_index=selection.box_index,
                        font_size=used_size,
                        x=x,
                        y=y,
                        w=w,
                        h=h,
                        value=value,
                        rank=rank,
                    )
                )

    centers = layers[0].centers
    return LayoutResult(
        config=config,
        time_labels=list(time_labels) if time_labels else [str(i) for i in range(n)],
        x_samples=sample_xs(centers, config.width),
        layers=layers,
        words=words,
        dropped=dropped,
    )


def _place_one(term, size, layer, x0, x1, grid, config):
    for attempt_size in _shrink_sizes(size, config.min_font):
        w = text_width(term, attempt_size)
        h = attempt_size
        spot = _scan_cell(layer, x0, x1, w, h, grid)
        if spot is not None:
            x, y = spot
            grid.occupy(x, y, w, h)
            return x, y, w, h, attempt_size
    return None


def _shrink_sizes(size: float, min_font: float):
    yield size
    while size > min_font:
        size = max(size * SHRINK_STEP, min_font)
        yield size


def _scan_cell(layer, x0, x1, w, h, grid):
    """First free spot for a w x h box, radiating from the cell center."""
    if w > x1 - x0:
        return None
    # Boundaries and thickness are monotone between knots, so extrema over
    # the column occur at its ends or at interior knots.
    inner = [(c, layer.top_knots[i], layer.bottom_knots[i])
             for i, c in enumerate(layer.centers) if x0 < c < x1]
    probes = [x0, x1] + [c for c, _t, _b in inner]
    tops = [layer.top_at(p) for p in probes]
    bottoms = [layer.bottom_at(p) for p in probes]
    if h > max(b - t for t, b in zip(tops, bottoms)):
        return None
    y_lo = min(tops)
    y_hi = max(bottoms)

    x_mid = (x0 + x1) / 2
    cy = (layer.top_at(x_mid) + layer.bottom_at(x_mid)) / 2
    top_at = layer.top_at
    bottom_at = layer.bottom_at

    # Exact containment bounds per candidate x, computed once per size.
    spans: list[tuple[float, float, float]] = []
    half_w = w / 2
    for dx in _center_out((x1 - x0) / 2):
        x = x_mid + dx - half_w
        if x < x0 - 1e-9 or x + w > x1 + 1e-9:
            continue
        x_end = x + w
        span_top = max(top_at(x), top_at(x_end))
        span_bottom = min(bottom_at(x), bottom_at(x_end))
        for c, top_knot, bottom_knot in inner:
            if x < c < x_end:
                span_top = max(span_top, top_knot)
                span_bottom = min(span_bottom, bottom_knot)
        spans.append((x, span_top, span_bottom))

    half_h = h / 2
    for dy in _center_out(y_hi - y_lo):
        y = cy + dy - half_h
        y_bottom = y + h
        if y < y_lo or y_bottom > y_hi:
            continue
        for x, span_top, span_bottom in spans:
            if span_top > y or span_bottom < y_bottom:
                continue
            if grid.is_free(x, y, w, h):
                return x, y
    return None


def _center_out(max_offset: float):
    yield 0.0
    offset = GRID_CELL
    while offset <= max_offset:
        yield -offset
        yield offset
        offset += GRID_CELL


class _OccupancyGrid:
    """Viewport-wide grid of GRID_CELL squares marking used space."""

    def __init__(self, width: float, height: float):
        self.cols = max(1, math.ceil(width / GRID_CELL)) + 1
        rows = max(1, math.ceil(height / GRID_CELL)) + 1
        self.rows = [bytearray(self.cols) for _ in range(rows)]

    def _bounds(self, x, y, w, h):
        return (
            int(x // GRID_CELL),
            int((x + w - 1e-9) // GRID_CELL),
            int(y // GRID_CELL),
            int((y + h - 1e-9) // GRID_CELL),
        )

    def is_free(self, x, y, w, h) -> bool:
        ix0, ix1, iy0, iy1 = self._bounds(x, y, w, h)
        rows = self.rows
        for iy in range(iy0, iy1 + 1):
            if any(rows[iy][ix0 : ix1 + 1]):
                return False
        return True

    def occupy(self, x, y, w, h) -> None:
        ix0, ix1, iy0, iy1 = self._bounds(x, y, w, h)
        span = b"\x01" * (ix1 - ix0 + 1)
        for iy in range(iy0, iy1 + 1):
            self.rows[iy][ix0 : ix1 + 1] = span


def _eval_curve(centers: list[float], knots: list[float], x: float) -> float:
    """Monotone piecewise-cubic through the knots, flat outside them."""
    if x <= centers[0]:
        return knots[0]
    if x >= centers[-1]:
        return knots[-1]
    i = bisect_right(centers, x) - 1
    u = (x - centers[i]) / (centers[i + 1] - centers[i])
    blend = u * u * (3 - 2 * u)
    return knots[i] + (knots[i + 1] - knots[i]) * blend
