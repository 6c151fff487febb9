"""Lexicon and gazetteer data: plain-text files users can extend.

File formats (all UTF-8, ``#`` starts a comment, blank lines ignored):

* ``lexicon.tsv``          one ``surface<TAB>tag`` per line
* ``lemma_exceptions.tsv`` one ``surface<TAB>lemma`` per line
* ``stopwords.txt``        one surface per line
* ``gazetteer_person.txt`` / ``gazetteer_place.txt`` / ``gazetteer_org.txt``
                           one lowercase entry per line

The bundled directory can be overridden with the ``WSM_LEXICON_DIR``
environment variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from ..types import CLOSED_CLASS_TAGS, NerTag, PosTag

LEXICON_DIR_ENV = "WSM_LEXICON_DIR"

_BUNDLED_DIR = Path(__file__).parent / "data"

_FILES = {
    "lexicon": "lexicon.tsv",
    "exceptions": "lemma_exceptions.tsv",
    "stopwords": "stopwords.txt",
    NerTag.PERSON: "gazetteer_person.txt",
    NerTag.PLACE: "gazetteer_place.txt",
    NerTag.ORGANIZATION: "gazetteer_org.txt",
}


@dataclass(frozen=True)
class Lexicon:
    """Immutable word knowledge shared by the tagger and lemmatizer."""

    word_to_pos: dict[str, PosTag] = field(default_factory=dict)
    lemma_exceptions: dict[str, str] = field(default_factory=dict)
    stopwords: frozenset[str] = frozenset()
    gazetteers: dict[NerTag, frozenset[str]] = field(default_factory=dict)

    @property
    def closed_class_words(self) -> set[str]:
        return {w for w, t in self.word_to_pos.items() if t in CLOSED_CLASS_TAGS}

    def gazetteer(self, tag: NerTag) -> frozenset[str]:
        return self.gazetteers.get(tag, frozenset())

    @classmethod
    def load(cls, directory: str | Path) -> "Lexicon":
        directory = Path(directory)
        word_to_pos = {
            surface.lower(): PosTag(tag)
            for surface, tag in _read_pairs(directory / _FILES["lexicon"])
        }
        exceptions = {
            surface.lower(): lemma.lower()
            for surface, lemma in _read_pairs(directory / _FILES["exceptions"])
        }
        stop = frozenset(w.lower() for w in _read_lines(directory / _FILES["stopwords"]))
        gazetteers = {
            tag: frozenset(w.lower() for w in _read_lines(directory / _FILES[tag]))
            for tag in NerTag
        }
        return cls(
            word_to_pos=word_to_pos,
            lemma_exceptions=exceptions,
            stopwords=stop,
            gazetteers=gazetteers,
        )

    @classmethod
    def default(cls) -> "Lexicon":
        """The bundled lexicon, or the ``WSM_LEXICON_DIR`` override."""
        return _load_cached(str(_default_dir()))


def _default_dir() -> Path:
    override = os.environ.get(LEXICON_DIR_ENV)
    return Path(override) if override else _BUNDLED_DIR


@lru_cache(maxsize=4)
def _load_cached(directory: str) -> Lexicon:
    return Lexicon.load(directory)


def _read_lines(path: Path) -> list[str]:
    if not path.exists():
        return []
    lines = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _read_pairs(path: Path) -> list[tuple[str, str]]:
    pairs = []
    for line in _read_lines(path):
        left, _, right = line.partition("\t")
        if left and right:
            pairs.append((left.strip(), right.strip()))
    return pairs
