"""Shared enums and the token record used across the pipeline."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional


class TableFormat(str, Enum):
    CSV = "csv"
    TSV = "tsv"


class TokenizeMode(str, Enum):
    WORD = "word"
    NOUN_CHUNK = "chunk"


class CategoryMode(str, Enum):
    POS = "pos"
    NER = "ner"


class Metric(str, Enum):
    FREQUENCY = "frequency"
    SUDDEN_CHANGE = "sudden"
    TFIDF = "tfidf"


class PosTag(str, Enum):
    NOUN = "Noun"
    VERB = "Verb"
    ADJECTIVE = "Adjective"
    ADVERB = "Adverb"
    DETERMINER = "Determiner"
    CONJUNCTION = "Conjunction"
    PREPOSITION = "Preposition"
    PRONOUN = "Pronoun"
    NUMBER = "Number"
    OTHER = "Other"


class NerTag(str, Enum):
    PERSON = "Person"
    PLACE = "Place"
    ORGANIZATION = "Organization"


#: Closed-class tags whose tokens are skipped before counting.
CLOSED_CLASS_TAGS = frozenset(
    {PosTag.DETERMINER, PosTag.CONJUNCTION, PosTag.PREPOSITION, PosTag.PRONOUN}
)

#: Category labels per mode, in fixed stacking order.
POS_CATEGORIES = (PosTag.NOUN.value, PosTag.VERB.value, PosTag.ADJECTIVE.value)
NER_CATEGORIES = (NerTag.PERSON.value, NerTag.PLACE.value, NerTag.ORGANIZATION.value)


def categories_for(mode: CategoryMode) -> tuple[str, str, str]:
    return POS_CATEGORIES if mode is CategoryMode.POS else NER_CATEGORIES


@dataclass(slots=True)
class Token:
    """One token: surface form plus lemma, POS tag, and optional NER tag.

    ``ner`` is only ever set when ``pos`` is Noun.
    """

    surface: str
    lemma: str = ""
    pos: Optional[PosTag] = None
    ner: Optional[NerTag] = None
