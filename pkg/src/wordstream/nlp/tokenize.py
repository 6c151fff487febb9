"""Tokenization: whitespace words, or noun chunks fused from tag runs."""

from __future__ import annotations

import string

from ..types import PosTag

# Characters trimmed from token edges. Interior apostrophes and hyphens
# survive because only the ends are stripped.
_EDGE_PUNCT = string.punctuation + "‘’“”«»–—…¡¿·•°"


def tokenize_words(text: str) -> list[str]:
    """Split on whitespace runs and strip punctuation off each unit's edges."""
    tokens = []
    for unit in text.split():
        word = unit.strip(_EDGE_PUNCT)
        if word:
            tokens.append(word)
    return tokens


def fuse_noun_chunks(surfaces: list[str], tags: list[PosTag]) -> list[str]:
    """Fuse each maximal Adjective* Noun+ run into one space-joined surface.

    Tokens outside such runs pass through unchanged; an adjective not
    followed by a noun stays a token of its own.
    """
    out: list[str] = []
    i = 0
    n = len(surfaces)
    while i < n:
        j = i
        while j < n and tags[j] is PosTag.ADJECTIVE:
            j += 1
        if j < n and tags[j] is PosTag.NOUN:
            k = j
            while k < n and tags[k] is PosTag.NOUN:
                k += 1
            out.append(" ".join(surfaces[i:k]))
            i = k
        else:
            out.append(surfaces[i])
            i += 1
    return out
