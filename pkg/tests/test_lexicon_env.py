"""The WSM_LEXICON_DIR environment variable swaps in user data files."""

from wordstream.nlp import Lexicon, PosTagger
from wordstream.nlp.lexicon import LEXICON_DIR_ENV
from wordstream.types import NerTag, PosTag


def write_custom_dir(tmp_path):
    (tmp_path / "lexicon.tsv").write_text(
        "# custom\nzork\tVerb\nthe\tDeterminer\n", encoding="utf-8"
    )
    (tmp_path / "lemma_exceptions.tsv").write_text("zorked\tzork\n", encoding="utf-8")
    (tmp_path / "stopwords.txt").write_text("the\n", encoding="utf-8")
    (tmp_path / "gazetteer_person.txt").write_text("zelda\n", encoding="utf-8")
    (tmp_path / "gazetteer_place.txt").write_text("zembla\n", encoding="utf-8")
    (tmp_path / "gazetteer_org.txt").write_text("zorgcorp\n", encoding="utf-8")


def test_env_override_replaces_bundled_data(tmp_path, monkeypatch):
    write_custom_dir(tmp_path)
    monkeypatch.setenv(LEXICON_DIR_ENV, str(tmp_path))
    lexicon = Lexicon.default()
    assert lexicon.word_to_pos == {"zork": PosTag.VERB, "the": PosTag.DETERMINER}
    assert lexicon.lemma_exceptions == {"zorked": "zork"}
    assert "zelda" in lexicon.gazetteer(NerTag.PERSON)
    assert "zembla" in lexicon.gazetteer(NerTag.PLACE)
    assert "zorgcorp" in lexicon.gazetteer(NerTag.ORGANIZATION)
    tagger = PosTagger(lexicon)
    assert tagger.tag(["zork"])[0].pos is PosTag.VERB


def test_without_env_bundled_data_used(monkeypatch):
    monkeypatch.delenv(LEXICON_DIR_ENV, raising=False)
    lexicon = Lexicon.default()
    assert len(lexicon.word_to_pos) >= 5000
    for gazetteer in lexicon.gazetteers.values():
        assert len(gazetteer) >= 500


def test_comments_and_blanks_ignored(tmp_path, monkeypatch):
    write_custom_dir(tmp_path)
    (tmp_path / "lexicon.tsv").write_text(
        "# header comment\n\nzork\tVerb  # trailing\n", encoding="utf-8"
    )
    monkeypatch.setenv(LEXICON_DIR_ENV, str(tmp_path))
    lexicon = Lexicon.default()
    assert lexicon.word_to_pos == {"zork": PosTag.VERB}
