import pytest

from bert_backend.data import HEADER, PairRow, TsvError, parse_pairs_tsv, read_pairs_tsv

from conftest import write_tsv


def parse(lines: list[str]) -> list[PairRow]:
    return parse_pairs_tsv("\n".join(lines) + "\n")


GOOD = "a::b\ta\tb\t1\ttrain\tis it joy?\tjoy?"


class TestParse:
    def test_round_trip_through_file(self, tmp_path):
        path = write_tsv(
            tmp_path / "pairs.tsv",
            [
                ("a::b", "a", "b", 1, "train", "tab\there", "line\nbreak"),
                ("b::a", "b", "a", 0, "test", "back\\slash", "plain"),
            ],
        )
        rows = read_pairs_tsv(path)
        assert rows[0] == PairRow("a::b", "tab\there", "line\nbreak", 1, "train")
        assert rows[1] == PairRow("b::a", "back\\slash", "plain", 0, "test")

    def test_blank_lines_skipped(self):
        assert len(parse([HEADER, "", GOOD, ""])) == 1

    def test_all_splits_accepted(self):
        for split in ("train", "val", "test"):
            row = parse([HEADER, GOOD.replace("train", split)])[0]
            assert row.split == split


class TestErrors:
    def test_empty_file(self):
        with pytest.raises(TsvError, match="row 1"):
            parse_pairs_tsv("")

    def test_wrong_header(self):
        with pytest.raises(TsvError, match="row 1"):
            parse(["pair_id\ttext1\ttext2", GOOD])

    def test_column_count(self):
        with pytest.raises(TsvError, match="row 2"):
            parse([HEADER, "a::b\ta\tb\t1\ttrain\tonly one text"])

    def test_row_numbers_count_the_header(self):
        with pytest.raises(TsvError, match="row 3"):
            parse([HEADER, GOOD, "b::a\tb\ta\t2\ttrain\tx\ty"])

    def test_label_must_be_binary(self):
        with pytest.raises(TsvError, match="label"):
            parse([HEADER, GOOD.replace("\t1\t", "\t7\t")])

    def test_split_whitelist(self):
        with pytest.raises(TsvError, match="split"):
            parse([HEADER, GOOD.replace("train", "holdout")])

    def test_duplicate_pair_id(self):
        with pytest.raises(TsvError, match="duplicate"):
            parse([HEADER, GOOD, GOOD])

    def test_dangling_escape(self):
        with pytest.raises(TsvError, match="row 2"):
            parse([HEADER, GOOD + "\\"])

    def test_unknown_escape(self):
        with pytest.raises(TsvError, match="row 2"):
            parse([HEADER, GOOD.replace("joy?", "j\\oy?")])
