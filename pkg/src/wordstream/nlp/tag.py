"""Rule-based POS and NER tagging over a lexicon.

The POS decision chain per token: lexicon lookup (lowercased), then suffix
rules for unknown words, then numeric literals, then Noun as the default.
One context rule runs over the sequence: an unknown -ing/-ed word right
after a Determiner is retagged Noun ("the studying" vs "am studying").
"""

from __future__ import annotations

import re

from ..types import NerTag, PosTag, Token
from .lexicon import Lexicon

_NUMERIC = re.compile(r"^[+-]?\d+(?:[.,]\d+)*$")

# (suffix, tag, minimum word length) — a suffix only counts when at least
# two characters of stem precede it.
_SUFFIX_RULES = (
    ("ly", PosTag.ADVERB, 4),
    ("ing", PosTag.VERB, 5),
    ("ed", PosTag.VERB, 4),
    ("ous", PosTag.ADJECTIVE, 5),
    ("ful", PosTag.ADJECTIVE, 5),
    ("ive", PosTag.ADJECTIVE, 5),
    ("able", PosTag.ADJECTIVE, 6),
    ("tion", PosTag.NOUN, 6),
    ("ness", PosTag.NOUN, 6),
    ("ment", PosTag.NOUN, 6),
    ("ity", PosTag.NOUN, 5),
)

#: NER lookup order; the first gazetteer containing the word wins.
_NER_PRIORITY = (NerTag.ORGANIZATION, NerTag.PLACE, NerTag.PERSON)


class PosTagger:
    def __init__(self, lexicon: Lexicon | None = None):
        self.lexicon = lexicon or Lexicon.default()
        self._cache: dict[str, tuple[PosTag, bool]] = {}

    def tag(self, surfaces: list[str]) -> list[Token]:
        """Tag every surface; total — each token gets exactly one tag."""
        tokens: list[Token] = []
        prev: PosTag | None = None
        for surface in surfaces:
            pos, known = self._base_tag(surface)
            if (
                not known
                and prev is PosTag.DETERMINER
                and surface.lower().endswith(("ing", "ed"))
            ):
                pos = PosTag.NOUN
            tokens.append(Token(surface=surface, pos=pos))
            prev = pos
        return tokens

    def _base_tag(self, surface: str) -> tuple[PosTag, bool]:
        key = surface.lower()
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        result = self._decide(key)
        self._cache[key] = result
        return result

    def _decide(self, key: str) -> tuple[PosTag, bool]:
        if " " in key:
            # Multi-word surfaces only come from noun-chunk fusion.
            return PosTag.NOUN, True
        pos = self.lexicon.word_to_pos.get(key)
        if pos is not None:
            return pos, True
        for suffix, tag, min_len in _SUFFIX_RULES:
            if len(key) >= min_len and key.endswith(suffix):
                return tag, False
        if _NUMERIC.match(key):
            return PosTag.NUMBER, True
        return PosTag.NOUN, False


class NerTagger:
    """Classify Noun tokens as Person/Place/Organization via gazetteers.

    Unmatched capitalized Nouns that do not open a sentence fall back to
    Person. Callers that tag one sentence at a time get exact sentence-start
    detection; over a flat stream only the first token is treated as one.
    """

    def __init__(self, lexicon: Lexicon | None = None):
        self.lexicon = lexicon or Lexicon.default()

    def tag(self, tokens: list[Token], first_is_sentence_start: bool = True) -> list[Token]:
        for i, token in enumerate(tokens):
            if token.pos is not PosTag.NOUN:
                continue
            key = token.surface.lower()
            for tag in _NER_PRIORITY:
                if key in self.lexicon.gazetteer(tag):
                    token.ner = tag
                    break
            else:
                at_start = i == 0 and first_is_sentence_start
                if token.surface[:1].isupper() and not at_start:
                    token.ner = NerTag.PERSON
        return tokens
