"""Self-contained rule-based NLP: tokenize, tag, lemmatize, filter.

The :class:`Annotator` bundles the pieces behind one lexicon and processes
text sentence by sentence, so NER sees real sentence starts and noun chunks
never cross a sentence boundary. The module-level functions mirror the
individual pipeline steps for direct use.
"""

from __future__ import annotations

import re

from ..types import PosTag, Token, TokenizeMode
from .lemma import Lemmatizer
from .lexicon import LEXICON_DIR_ENV, Lexicon
from .stopwords import filter_stopwords
from .tag import NerTagger, PosTagger
from .tokenize import fuse_noun_chunks, tokenize_words

__all__ = [
    "Annotator",
    "Lexicon",
    "LEXICON_DIR_ENV",
    "Lemmatizer",
    "NerTagger",
    "PosTagger",
    "filter_stopwords",
    "fuse_noun_chunks",
    "lemmatize",
    "ner_tag",
    "pos_tag",
    "tokenize",
    "tokenize_words",
]

_SENTENCE_SPLIT = re.compile(r"(?<=[.!?])\s+")


class Annotator:
    """Tokenize + POS + NER + lemma over one immutable lexicon.

    Instances are safe to share across threads: the lexicon never changes
    after load and the internal caches always store identical values for a
    given key, so results are independent of call order.
    """

    def __init__(self, lexicon: Lexicon | None = None):
        self.lexicon = lexicon or Lexicon.default()
        self.pos_tagger = PosTagger(self.lexicon)
        self.ner_tagger = NerTagger(self.lexicon)
        self.lemmatizer = Lemmatizer(self.lexicon)

    def tokenize(self, text: str, mode: TokenizeMode = TokenizeMode.WORD) -> list[str]:
        """Word mode splits on whitespace; chunk mode fuses Adjective* Noun+ runs."""
        if mode is TokenizeMode.WORD:
            return tokenize_words(text)
        surfaces: list[str] = []
        for sentence in _SENTENCE_SPLIT.split(text):
            words = tokenize_words(sentence)
            if not words:
                continue
            tags = [t.pos for t in self.pos_tagger.tag(words)]
            surfaces.extend(fuse_noun_chunks(words, tags))
        return surfaces

    def annotate(self, text: str, mode: TokenizeMode = TokenizeMode.WORD) -> list[Token]:
        """Full token stream for one text: tagged, NER'd, and lemmatized."""
        tokens: list[Token] = []
        for sentence in _SENTENCE_SPLIT.split(text):
            if mode is TokenizeMode.WORD:
                surfaces = tokenize_words(sentence)
            else:
                surfaces = self.tokenize(sentence, mode)
            if not surfaces:
                continue
            sentence_tokens = self.pos_tagger.tag(surfaces)
            self.ner_tagger.tag(sentence_tokens, first_is_sentence_start=True)
            for token in sentence_tokens:
                token.lemma = self.lemmatizer.lemma(token.surface, token.pos)
            tokens.extend(sentence_tokens)
        return tokens

    def extract(self, text: str, mode: TokenizeMode = TokenizeMode.WORD) -> list[Token]:
        """Annotate and drop stop words; the stream metrics count from."""
        return filter_stopwords(self.annotate(text, mode), self.lexicon)


def tokenize(
    text: str,
    mode: TokenizeMode = TokenizeMode.WORD,
    lexicon: Lexicon | None = None,
) -> list[str]:
    if mode is TokenizeMode.WORD:
        return tokenize_words(text)
    return Annotator(lexicon).tokenize(text, mode)


def pos_tag(surfaces: list[str], lexicon: Lexicon | None = None) -> list[Token]:
    return PosTagger(lexicon).tag(surfaces)


def ner_tag(tokens: list[Token], lexicon: Lexicon | None = None) -> list[Token]:
    return NerTagger(lexicon).tag(tokens)


def lemmatize(surface: str, pos: PosTag | None = None, lexicon: Lexicon | None = None) -> str:
    return Lemmatizer(lexicon).lemma(surface, pos)
