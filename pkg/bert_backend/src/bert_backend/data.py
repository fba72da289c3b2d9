"""Reader for the pair TSV exchange format.

Columns: pair_id, q1_id, q2_id, label, split, text1, text2. Cell text
escapes tab, newline and backslash as \\t, \\n and \\\\. Errors carry
1-based row numbers (the header is row 1) so a failed training job can
point at the offending line.
"""

from dataclasses import dataclass
from pathlib import Path

HEADER = "pair_id\tq1_id\tq2_id\tlabel\tsplit\ttext1\ttext2"
SPLITS = ("train", "val", "test")


class TsvError(ValueError):
    def __init__(self, message: str, row_no: int):
        super().__init__(f"row {row_no}: {message}")
        self.row_no = row_no


@dataclass(frozen=True)
class PairRow:
    pair_id: str
    text1: str
    text2: str
    label: int
    split: str


def _unescape(value: str, row_no: int) -> str:
    if "\\" not in value:
        return value
    out: list[str] = []
    i = 0
    while i < len(value):
        ch = value[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        if i + 1 >= len(value):
            raise TsvError("dangling backslash", row_no)
        nxt = value[i + 1]
        if nxt == "t":
            out.append("\t")
        elif nxt == "n":
            out.append("\n")
        elif nxt == "\\":
            out.append("\\")
        else:
            raise TsvError(f"unknown escape \\{nxt}", row_no)
        i += 2
    return "".join(out)


def parse_pairs_tsv(text: str) -> list[PairRow]:
    lines = text.splitlines()
    if not lines:
        raise TsvError("empty file", 1)
    if lines[0] != HEADER:
        raise TsvError("bad header", 1)
    rows: list[PairRow] = []
    seen: set[str] = set()
    for row_no, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        cells = line.split("\t")
        if len(cells) != 7:
            raise TsvError(f"expected 7 columns, found {len(cells)}", row_no)
        pair_id = _unescape(cells[0], row_no)
        if pair_id in seen:
            raise TsvError(f"duplicate pair_id {pair_id!r}", row_no)
        seen.add(pair_id)
        if cells[3] not in ("0", "1"):
            raise TsvError(f"label must be 0 or 1, not {cells[3]!r}", row_no)
        if cells[4] not in SPLITS:
            raise TsvError(f"unknown split {cells[4]!r}", row_no)
        rows.append(
            PairRow(
                pair_id=pair_id,
                text1=_unescape(cells[5], row_no),
                text2=_unescape(cells[6], row_no),
                label=int(cells[3]),
                split=cells[4],
            )
        )
    return rows


def read_pairs_tsv(path: str | Path) -> list[PairRow]:
    return parse_pairs_tsv(Path(path).read_text(encoding="utf-8"))
