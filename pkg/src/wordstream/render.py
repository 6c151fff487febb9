"""Serialize a LayoutResult to SVG 1.1 and to the layout-schema/v1 JSON.

The JSON form is canonical: fixed key order, floats rounded to at most six
fractional digits, arrays ordered by (box, category order, rank). Identical
layouts therefore always serialize to identical bytes, and serializing a
parsed document reproduces it exactly.
"""

from __future__ import annotations

import json
from importlib.resources import files
from xml.sax.saxutils import escape, quoteattr

from .layout import LayoutResult

SCHEMA_ID = "layout-schema/v1"

#: Categorical band colors, assigned by stacking position (same three for
#: POS and NER modes); word shades darken with rank.
PALETTE = ("#4e79a7", "#f28e2b", "#59a14f")

_AXIS_FONT = 12


def layer_color(layer_index: int) -> str:
    return PALETTE[layer_index % len(PALETTE)]


def word_color(layer_index: int, rank: int) -> str:
    """Category color darkened by rank so top terms read strongest."""
    base = layer_color(layer_index)
    factor = max(0.55, 1.0 - 0.07 * rank)
    r, g, b = (int(base[i : i + 2], 16) for i in (1, 3, 5))
    return "#{:02x}{:02x}{:02x}".format(int(r * factor), int(g * factor), int(b * factor))


def document(result: LayoutResult) -> dict:
    """The layout as a plain dict in canonical key order."""
    config = result.config
    order = {layer.category: i for i, layer in enumerate(result.layers)}
    return {
        "schema": SCHEMA_ID,
        "config": {
            "minFont": float(config.min_font),
            "maxFont": float(config.max_font),
            "topK": config.top_k,
            "width": float(config.width),
            "height": float(config.height),
            "mode": config.mode.value,
            "metric": config.metric.value,
            "tokenization": config.tokenization.value,
        },
        "viewport": {"width": float(config.width), "height": float(config.height)},
        "timeLabels": list(result.time_labels),
        "xSamples": list(result.x_samples),
        "layers": [
            {
                "category": layer.category,
                "color": layer_color(i),
                "weights": list(layer.weights),
                "top": list(layer.top),
                "bottom": list(layer.bottom),
            }
            for i, layer in enumerate(result.layers)
        ],
        "words": [
            {
                "term": word.term,
                "category": word.category,
                "box": word.box_index,
                "fontSize": word.font_size,
                "x": word.x,
                "y": word.y,
                "w": word.w,
                "h": word.h,
                "value": word.value,
                "color": word_color(order[word.category], word.rank),
            }
            for word in result.words
        ],
        "dropped": [
            {
                "term": item.term,
                "category": item.category,
                "box": item.box_index,
                "reason": item.reason,
            }
            for item in result.dropped
        ],
    }


def emit_json(result: LayoutResult) -> str:
    return canonical_json(document(result))


def canonical_json(doc) -> str:
    """Canonical text form; serialize(parse(s)) == s for any output s."""
    return json.dumps(_round6(doc), ensure_ascii=True, separators=(",", ":"))


def _round6(value):
    if isinstance(value, float):
        return round(value, 6)
    if isinstance(value, dict):
        return {k: _round6(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_round6(v) for v in value]
    return value


def emit_svg(result: LayoutResult) -> str:
    """Well-formed SVG: one path per layer, one text per word, a time axis.

    All coordinates are written in layout units (viewBox equals the
    viewport). Word text elements sit on a baseline at y + h.
    """
    width, height = result.viewport
    xs = result.x_samples
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_fmt(width)} {_fmt(height)}" '
        f'width="{_fmt(width)}" height="{_fmt(height)}">'
    ]

    parts.append('<g class="layers">')
    for i, layer in enumerate(result.layers):
        top = " ".join(f"L {_fmt(x)} {_fmt(y)}" for x, y in zip(xs[1:], layer.top[1:]))
        back = " ".join(
            f"L {_fmt(x)} {_fmt(y)}"
            for x, y in zip(reversed(xs), reversed(layer.bottom))
        )
        d = f"M {_fmt(xs[0])} {_fmt(layer.top[0])} {top} {back} Z"
        parts.append(
            f'<path class="layer" data-category={quoteattr(layer.category)} '
            f'fill="{layer_color(i)}" fill-opacity="0.35" d="{d}"/>'
        )
    parts.append("</g>")

    order = {layer.category: i for i, layer in enumerate(result.layers)}
    parts.append('<g class="words" font-family="Helvetica, Arial, sans-serif">')
    for word in result.words:
        parts.append(
            f'<text class="word" x="{_fmt(word.x)}" y="{_fmt(word.y + word.h)}" '
            f'font-size="{_fmt(word.font_size)}" '
            f'fill="{word_color(order[word.category], word.rank)}" '
            f"data-category={quoteattr(word.category)} "
            f'data-box="{word.box_index}">{escape(word.term)}</text>'
        )
    parts.append("</g>")

    n = len(result.time_labels)
    parts.append(
        f'<g class="axis" font-family="Helvetica, Arial, sans-serif" font-size="{_AXIS_FONT}">'
    )
    for t, label in enumerate(result.time_labels):
        cx = (t + 0.5) * width / n
        parts.append(
            f'<text class="axis-label" x="{_fmt(cx)}" y="{_fmt(height - 6)}" '
            f'text-anchor="middle">{escape(label)}</text>'
        )
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts)


def _fmt(value: float) -> str:
    text = f"{value:.2f}"
    return text.rstrip("0").rstrip(".") if "." in text else text


def load_schema() -> dict:
    """The bundled layout-schema/v1 JSON Schema document."""
    raw = files("wordstream").joinpath("data/layout-schema-v1.json").read_text("utf-8")
    return json.loads(raw)
