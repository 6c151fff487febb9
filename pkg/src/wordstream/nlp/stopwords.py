"""Stop-word removal via closed-class tags plus an explicit stop-list."""

from __future__ import annotations

from ..types import CLOSED_CLASS_TAGS, Token
from .lexicon import Lexicon


def filter_stopwords(tokens: list[Token], lexicon: Lexicon | None = None) -> list[Token]:
    """Drop determiners, conjunctions, prepositions, pronouns, and stop-list hits.

    A token is a stop-list hit when its lowercased surface or its lemma is
    listed (so "having" goes with "have"). Surviving tokens are unchanged
    and keep their order.
    """
    lexicon = lexicon or Lexicon.default()
    stop = lexicon.stopwords
    kept = []
    for token in tokens:
        if token.pos in CLOSED_CLASS_TAGS:
            continue
        if token.surface.lower() in stop or token.lemma in stop:
            continue
        kept.append(token)
    return kept
