"""Lemmatization: lowercase, exception table, then ordered suffix rules.

Rules are re-applied until the word stops changing, which makes the lemma
function idempotent for arbitrary input ("talkings" -> "talking" -> "talk").
Inflection rules only fire for open-class tags; closed-class words are just
lowercased. The -ing/-ed rules are lexicon-guided: a stripped stem that is
itself a lexicon word is kept ("falling" -> "fall"), otherwise doubled
consonants are undone and silent e is restored when the lexicon knows the
restored form ("hopped" -> "hop", "making" -> "make").
"""

from __future__ import annotations

from ..types import PosTag
from .lexicon import Lexicon

_OPEN_CLASS = frozenset({PosTag.NOUN, PosTag.VERB, PosTag.ADJECTIVE, PosTag.ADVERB})
_VOWELS = frozenset("aeiouy")


class Lemmatizer:
    def __init__(self, lexicon: Lexicon | None = None):
        self.lexicon = lexicon or Lexicon.default()
        self._proper = frozenset().union(*self.lexicon.gazetteers.values()) if self.lexicon.gazetteers else frozenset()
        self._cache: dict[tuple[str, PosTag | None], str] = {}

    def lemma(self, surface: str, pos: PosTag | None = None) -> str:
        """Lowercase root form of ``surface``; idempotent on its outputs."""
        key = (surface.lower(), pos)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        word = key[0]
        if word in self._proper:
            # Gazetteer names are roots; never strip them ("texas", "james").
            result = word
        elif " " in word:
            # Noun chunks: lemmatize the head word, keep the modifiers.
            head_start = word.rfind(" ") + 1
            result = word[:head_start] + self.lemma(word[head_start:], pos)
        else:
            result = self._reduce(word, pos)
        self._cache[key] = result
        return result

    def _reduce(self, word: str, pos: PosTag | None) -> str:
        exceptions = self.lexicon.lemma_exceptions
        known = self.lexicon.word_to_pos
        for _ in range(len(word) + 8):
            replacement = exceptions.get(word)
            if replacement is not None:
                # The exception table is authoritative; a self-mapping pins
                # a word as a root ("seed" must not become "see").
                if replacement == word:
                    return word
                word = replacement
                continue
            stepped = self._apply_rules(word, pos)
            if stepped == word:
                break
            # Never degrade a lexicon word into an unknown string
            # ("sibling" must not become "sibl"); irregular reductions of
            # known forms go through the exception table instead.
            if word in known and stepped not in known and stepped not in exceptions:
                break
            word = stepped
        return word

    def _apply_rules(self, word: str, pos: PosTag | None) -> str:
        if pos is not None and pos not in _OPEN_CLASS:
            return word
        if len(word) >= 6 and word.endswith("ying"):
            return word[:-4] + "y"
        if len(word) >= 5 and word.endswith(("ies", "ied")):
            return word[:-3] + "y"
        if len(word) >= 5 and word.endswith("ing"):
            return self._strip_participle(word, "ing")
        if len(word) >= 4 and word.endswith("ed"):
            return self._strip_participle(word, "ed")
        if pos is PosTag.NOUN:
            return self._strip_plural(word)
        return word

    def _strip_participle(self, word: str, suffix: str) -> str:
        stem = word[: -len(suffix)]
        if len(stem) < 2 or not _VOWELS.intersection(stem):
            return word
        known = self.lexicon.word_to_pos
        if stem in known:
            return stem
        doubled = (
            len(stem) >= 3
            and stem[-1] == stem[-2]
            and stem[-1] not in _VOWELS
        )
        if doubled and stem[:-1] in known:
            return stem[:-1]
        if stem + "e" in known:
            return stem + "e"
        if doubled:
            return stem[:-1]
        return stem

    def _strip_plural(self, word: str) -> str:
        if word.endswith("sses"):
            return word[:-2]
        if len(word) >= 5 and word.endswith(("shes", "ches", "xes", "zes")):
            return word[:-2]
        if len(word) >= 5 and word.endswith("oes"):
            return word[:-2]
        if (
            len(word) >= 4
            and word.endswith("s")
            and not word.endswith(("ss", "us", "is"))
        ):
            return word[:-1]
        return word
