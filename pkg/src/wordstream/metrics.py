"""Per-term time series (frequency, sudden change, TF-IDF) and top-K picks.

Each time box is one document. Terms are keyed by (lemma, category); the
same lemma may appear under Noun and Verb with separate series.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from .errors import NoTermsExtractedError
from .types import CategoryMode, Metric, NerTag, PosTag, Token, categories_for

_POS_BUCKETS = {PosTag.NOUN: "Noun", PosTag.VERB: "Verb", PosTag.ADJECTIVE: "Adjective"}
_NER_BUCKETS = {NerTag.PERSON: "Person", NerTag.PLACE: "Place", NerTag.ORGANIZATION: "Organization"}


@dataclass
class TermStats:
    """One term's series across all time boxes within one category."""

    term: str
    category: str
    frequency: list[int]
    sudden: list[float] = field(default_factory=list)
    tfidf: list[float] = field(default_factory=list)
    df: int = 0

    @property
    def total(self) -> int:
        return sum(self.frequency)

    def value(self, metric: Metric, t: int) -> float:
        if metric is Metric.FREQUENCY:
            return float(self.frequency[t])
        if metric is Metric.SUDDEN_CHANGE:
            return self.sudden[t]
        return self.tfidf[t]


@dataclass(frozen=True)
class BoxSelection:
    """Top terms for one (box, category) cell, ordered by metric value."""

    box_index: int
    category: str
    terms: list[tuple[str, float]]


def sudden_change(frequency: list[int]) -> list[float]:
    """S_t = (F_t + 1) / (F_{t-1} + 1), with F_0 taken as 0.

    The denominator is always >= 1, so every S_t is positive; an appearance
    out of nowhere scores highest.
    """
    series = []
    prev = 0
    for f in frequency:
        series.append((f + 1) / (prev + 1))
        prev = f
    return series


def tfidf(frequency: list[int], df: int, n: int) -> list[float]:
    """Raw term frequency times ln(n / df); zero for ubiquitous terms."""
    if not 1 <= df <= n:
        raise ValueError(f"df must be in 1..{n}, got {df}")
    idf = math.log(n / df)
    return [f * idf for f in frequency]


def count_frequencies(
    box_tokens: list[list[Token]], mode: CategoryMode
) -> list[TermStats]:
    """Bucket lemmas per category per box and build full term series.

    POS mode counts Noun/Verb/Adjective tokens into those categories; NER
    mode counts only entity-tagged tokens into Person/Place/Organization.
    Token streams must already be tagged, lemmatized, and stop-filtered.
    """
    n = len(box_tokens)
    counts: dict[tuple[str, str], Counter] = {}
    for t, tokens in enumerate(box_tokens):
        for token in tokens:
            category = _category_of(token, mode)
            if category is None:
                continue
            counts.setdefault((token.lemma, category), Counter())[t] += 1
    if not counts:
        raise NoTermsExtractedError(
            f"no terms survived extraction in {mode.value} mode"
        )

    stats = []
    for (term, category), per_box in sorted(counts.items()):
        frequency = [per_box.get(t, 0) for t in range(n)]
        df = sum(1 for f in frequency if f > 0)
        stats.append(
            TermStats(
                term=term,
                category=category,
                frequency=frequency,
                sudden=sudden_change(frequency),
                tfidf=tfidf(frequency, df, n),
                df=df,
            )
        )
    return stats


def select_top_k(
    stats: list[TermStats], metric: Metric, k: int, n_boxes: int, mode: CategoryMode
) -> list[BoxSelection]:
    """Pick the top-K terms per (box, category) by the chosen metric.

    Only terms present in the box (F_t > 0) compete. Ties break by metric
    value desc, then total frequency desc, then term asc — rankings must be
    deterministic for byte-identical output.
    """
    if k < 1:
        raise ValueError(f"top-k must be >= 1, got {k}")
    by_category: dict[str, list[TermStats]] = {}
    for stat in stats:
        by_category.setdefault(stat.category, []).append(stat)

    selections = []
    for box in range(n_boxes):
        for category in categories_for(mode):
            candidates = [
                s for s in by_category.get(category, ()) if s.frequency[box] > 0
            ]
            candidates.sort(key=lambda s: (-s.value(metric, box), -s.total, s.term))
            selections.append(
                BoxSelection(
                    box_index=box,
                    category=category,
                    terms=[(s.term, s.value(metric, box)) for s in candidates[:k]],
                )
            )
    return selections


def category_weights(
    stats: list[TermStats], n_boxes: int, mode: CategoryMode
) -> dict[str, list[int]]:
    """Total frequency per category per box over ALL retained terms."""
    weights = {c: [0] * n_boxes for c in categories_for(mode)}
    for stat in stats:
        series = weights[stat.category]
        for t, f in enumerate(stat.frequency):
            series[t] += f
    return weights


def _category_of(token: Token, mode: CategoryMode) -> str | None:
    if mode is CategoryMode.POS:
        return _POS_BUCKETS.get(token.pos)
    if token.ner is None:
        return None
    return _NER_BUCKETS.get(token.ner)
