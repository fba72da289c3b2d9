import json

import pytest
from hypothesis import given, strategies as st

from concord.corpus import (
    AnnotationLabel,
    Corpus,
    Speaker,
    annotation_histogram,
    anonymize,
    audit_anonymization,
    parse_corpus,
    read_corpus,
    serialize_corpus,
    write_corpus,
)
from concord.errors import CorpusParseError, ValidationError


def dialog_line(dialog_id="d1", turns=None, participants=("p1", "p2")):
    if turns is None:
        turns = [
            {"turn_id": "t1", "index": 0, "speaker": "questioner", "text": "is it joy?", "annotation": "similar(e,joy)"},
            {"turn_id": "t2", "index": 1, "speaker": "answerer", "text": "yes."},
        ]
    return json.dumps({"dialog_id": dialog_id, "participants": list(participants), "turns": turns})


class TestParsing:
    def test_minimal_dialog(self):
        corpus = parse_corpus([dialog_line()])
        assert corpus.version_id == 1
        assert corpus.parent_version is None
        assert corpus.n_turns == 2
        assert len(corpus.questions) == 1
        assert corpus.questions[0].label == AnnotationLabel("similar(e,joy)")

    def test_meta_line_sets_version(self):
        corpus = parse_corpus(['{"corpus_version": 3, "parent_version": 2}', dialog_line()])
        assert corpus.version_id == 3
        assert corpus.parent_version == 2

    def test_meta_line_not_first_rejected(self):
        with pytest.raises(CorpusParseError, match="line 2"):
            parse_corpus([dialog_line(), '{"corpus_version": 2}'])

    def test_invalid_json_names_line(self):
        with pytest.raises(CorpusParseError, match="line 1"):
            parse_corpus(["{nope"])

    def test_duplicate_turn_id(self):
        turns = [
            {"turn_id": "t1", "index": 0, "speaker": "questioner", "text": "a?", "annotation": "x"},
            {"turn_id": "t1", "index": 1, "speaker": "answerer", "text": "b."},
        ]
        with pytest.raises(ValidationError, match="duplicate turn_id"):
            parse_corpus([dialog_line(turns=turns)])

    def test_duplicate_dialog_id(self):
        line2 = dialog_line(turns=[{"turn_id": "t9", "index": 0, "speaker": "answerer", "text": "hm."}])
        with pytest.raises(ValidationError, match="duplicate dialog_id"):
            parse_corpus([dialog_line(), line2])

    def test_index_must_match_position(self):
        turns = [{"turn_id": "t1", "index": 1, "speaker": "answerer", "text": "hi."}]
        with pytest.raises(ValidationError, match="indices"):
            parse_corpus([dialog_line(turns=turns)])

    def test_annotation_only_on_questioner(self):
        turns = [{"turn_id": "t1", "index": 0, "speaker": "answerer", "text": "yes.", "annotation": "x"}]
        with pytest.raises(ValidationError, match="questioner"):
            parse_corpus([dialog_line(turns=turns)])

    def test_unknown_speaker(self):
        turns = [{"turn_id": "t1", "index": 0, "speaker": "narrator", "text": "hm."}]
        with pytest.raises(CorpusParseError, match="speaker"):
            parse_corpus([dialog_line(turns=turns)])

    def test_empty_text_rejected(self):
        turns = [{"turn_id": "t1", "index": 0, "speaker": "answerer", "text": "   "}]
        with pytest.raises(ValidationError, match="empty"):
            parse_corpus([dialog_line(turns=turns)])

    def test_empty_label_rejected(self):
        with pytest.raises(ValidationError):
            AnnotationLabel("   ")

    def test_label_trimmed(self):
        assert AnnotationLabel(" x ") == AnnotationLabel("x")


class TestSerialization:
    def test_round_trip_equality(self, demo):
        again = parse_corpus(serialize_corpus(demo).splitlines())
        assert again == demo

    def test_version_one_has_no_meta_line(self, demo):
        assert not serialize_corpus(demo).startswith('{"corpus_version"')

    def test_meta_line_round_trip(self):
        corpus = parse_corpus(['{"corpus_version": 5, "parent_version": 4}', dialog_line()])
        text = serialize_corpus(corpus)
        assert text.splitlines()[0] == '{"corpus_version": 5, "parent_version": 4}'
        assert parse_corpus(text.splitlines()) == corpus

    def test_serialization_deterministic(self, demo):
        assert serialize_corpus(demo) == serialize_corpus(parse_corpus(serialize_corpus(demo).splitlines()))

    def test_file_round_trip(self, demo, tmp_path):
        path = tmp_path / "corpus.jsonl"
        write_corpus(demo, path)
        assert read_corpus(path) == demo
        # LF endings regardless of platform
        assert b"\r" not in path.read_bytes()

    @given(st.text(min_size=1).filter(lambda s: s.strip()))
    def test_any_text_survives_round_trip(self, text):
        turns = [{"turn_id": "t1", "index": 0, "speaker": "questioner", "text": text, "annotation": "x"}]
        corpus = parse_corpus([dialog_line(turns=turns)])
        again = parse_corpus(serialize_corpus(corpus).split("\n"))
        assert again.turn("t1").text == text


class TestLookups:
    def test_turn_and_label(self, demo):
        assert demo.turn("misery-05-q2").text == "misery?"
        assert demo.label_of("misery-05-q2").value == "similar(e,misery)"
        assert demo.is_question("misery-05-q2")
        assert not demo.is_question("misery-05-a1")
        assert demo.has_turn("misery-05-a1")

    def test_unknown_turn(self, demo):
        with pytest.raises(ValidationError, match="unknown turn_id"):
            demo.turn("nope")

    def test_unannotated_turn_has_no_label(self, demo):
        with pytest.raises(ValidationError, match="no annotation"):
            demo.label_of("misery-05-a1")

    def test_histogram_sums_to_questions(self, demo):
        histogram = annotation_histogram(demo)
        assert sum(histogram.values()) == len(demo.questions)
        assert histogram[AnnotationLabel("similar(e,jealousy)")] == 3


class TestAnonymize:
    def corpus(self, text):
        turns = [{"turn_id": "t1", "index": 0, "speaker": "questioner", "text": text, "annotation": "x"}]
        return parse_corpus([dialog_line(turns=turns)])

    def test_replaces_whole_words(self):
        revised, report = anonymize(self.corpus("thanks zorblatt!"), ["zorblatt"])
        assert revised.turn("t1").text == "thanks user0!"
        assert len(report.replacements) == 1
        assert report.replacements[0].replacement_token == "user0"
        assert not report.collisions

    def test_case_sensitive_and_word_bounded(self):
        revised, _ = anonymize(self.corpus("Zorblatt met zorblatts and zorblatt."), ["zorblatt"])
        assert revised.turn("t1").text == "Zorblatt met zorblatts and user0."

    def test_token_index_follows_username_order(self):
        revised, _ = anonymize(self.corpus("qyxx and zorblatt"), ["zorblatt", "qyxx"])
        assert revised.turn("t1").text == "user1 and user0"

    def test_dictionary_collision_skipped_by_default(self):
        corpus = self.corpus("did you have a test tomorrow?")
        revised, report = anonymize(corpus, ["test"])
        assert revised is corpus  # nothing applied, same version
        assert len(report.collisions) == 1

    def test_force_applies_collisions(self):
        revised, report = anonymize(self.corpus("did you have a test tomorrow?"), ["test"], force=True)
        assert revised.turn("t1").text == "did you have a user0 tomorrow?"
        assert report.forced

    def test_version_bumps_only_when_changed(self, demo):
        revised, _ = anonymize(demo, ["zorblatt"])
        assert revised is demo
        revised, _ = anonymize(self.corpus("hi zorblatt"), ["zorblatt"])
        assert revised.version_id == 2
        assert revised.parent_version == 1

    def test_labels_untouched(self):
        revised, _ = anonymize(self.corpus("zorblatt?"), ["zorblatt"])
        assert revised.label_of("t1").value == "x"

    def test_empty_username_rejected(self, demo):
        with pytest.raises(ValidationError):
            anonymize(demo, [" "])

    def test_report_json_shape(self):
        _, report = anonymize(self.corpus("hi zorblatt"), ["zorblatt"])
        payload = json.loads(report.to_json())
        assert payload["replacements"][0] == {
            "turn_id": "t1",
            "original_span": "zorblatt",
            "replacement_token": "user0",
        }


class TestAnonymizationAudit:
    def test_flags_token_after_article_only(self):
        turns = [
            {"turn_id": "t1", "index": 0, "speaker": "questioner", "text": "would you feel it if you had a user13 the next day?", "annotation": "x"},
            {"turn_id": "t2", "index": 1, "speaker": "questioner", "text": "ask user13 about it", "annotation": "y"},
        ]
        suspects = audit_anonymization(parse_corpus([dialog_line(turns=turns)]))
        assert suspects == ["t1"]

    def test_finds_the_demo_prep_casualty(self, demo):
        assert audit_anonymization(demo) == ["anxiety-15-q2"]

    def test_an_article_counts_too(self):
        turns = [{"turn_id": "t1", "index": 0, "speaker": "answerer", "text": "it was an user2 thing"}]
        assert audit_anonymization(parse_corpus([dialog_line(turns=turns)])) == ["t1"]
