from __future__ import annotations

import io
import random

import pytest

from wordstream.nlp import Lexicon
from wordstream.types import NerTag, PosTag


@pytest.fixture(scope="session")
def sample_csv() -> bytes:
    from wordstream.cli import sample_bytes

    return sample_bytes()


@pytest.fixture(scope="session")
def tiny_lexicon() -> Lexicon:
    """A hand-built lexicon for rule-level tests with full control."""
    word_to_pos = {
        "the": PosTag.DETERMINER,
        "a": PosTag.DETERMINER,
        "and": PosTag.CONJUNCTION,
        "in": PosTag.PREPOSITION,
        "i": PosTag.PRONOUN,
        "am": PosTag.VERB,
        "is": PosTag.VERB,
        "big": PosTag.ADJECTIVE,
        "data": PosTag.NOUN,
        "analysis": PosTag.NOUN,
        "study": PosTag.VERB,
        "helps": PosTag.VERB,
        "learn": PosTag.VERB,
        "make": PosTag.VERB,
        "run": PosTag.VERB,
        "hop": PosTag.VERB,
        "fall": PosTag.VERB,
        "see": PosTag.VERB,
        "walk": PosTag.VERB,
        "glass": PosTag.NOUN,
        "hero": PosTag.NOUN,
        "pony": PosTag.NOUN,
        "daily": PosTag.ADVERB,
    }
    return Lexicon(
        word_to_pos=word_to_pos,
        lemma_exceptions={"went": "go", "children": "child"},
        stopwords=frozenset({"am", "is", "be"}),
        gazetteers={
            NerTag.ORGANIZATION: frozenset({"google", "github", "microsoft", "myspace"}),
            NerTag.PLACE: frozenset({"texas", "boston"}),
            NerTag.PERSON: frozenset({"alice", "bob"}),
        },
    )


def make_csv(rows: list[tuple[str, str]], headers=("Week", "Response Text")) -> bytes:
    import csv

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue().encode("utf-8")


def big_benchmark_csv(target_bytes: int = 1_500_000, min_rows: int = 5001) -> bytes:
    """Deterministic >=1.5 MB, >5000-row corpus for the runtime budget."""
    rng = random.Random(7)
    vocab = (
        "the student studied a new project and wrote a long report about data "
        "we used google docs and pushed our code to github while alice helped bob "
        "learning felt easier after practice in boston and texas my friends enjoyed "
        "interesting lectures about science history and beautiful design this week"
    ).split()
    rows = []
    size = len("Week,Response Text\n")
    i = 0
    while size < target_bytes or i < min_rows:
        week = i // 100
        time_key = f"Week {week}"
        text = " ".join(rng.choices(vocab, k=40)) + "."
        rows.append((time_key, text))
        size += len(time_key) + len(text) + 2  # comma and newline
        i += 1
    data = make_csv(rows)
    assert len(data) >= target_bytes and len(rows) >= min_rows
    return data
