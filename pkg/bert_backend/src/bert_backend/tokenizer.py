"""Word-level tokenizer with the classic encoder special tokens.

The published model ships a subword vocabulary; offline we build a
word vocabulary from the training pairs instead, capped at the
configured size with ties broken alphabetically so the mapping is
reproducible from the same data.
"""

import re
from dataclasses import dataclass, field
from collections import Counter
from typing import Iterable, Sequence

SPECIALS = ("[PAD]", "[UNK]", "[CLS]", "[SEP]")
PAD, UNK, CLS, SEP = range(4)

_TOKEN = re.compile(r"[^\W_]+|[^\w\s]", re.UNICODE)


def tokenize(text: str) -> list[str]:
    """Lowercased words and standalone punctuation marks."""
    return _TOKEN.findall(text.lower())


@dataclass(frozen=True)
class WordTokenizer:
    vocab: dict[str, int] = field(default_factory=dict)

    @classmethod
    def fit(cls, texts: Iterable[str], vocab_size: int) -> "WordTokenizer":
        counts = Counter(token for text in texts for token in tokenize(text))
        budget = vocab_size - len(SPECIALS)
        ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:budget]
        vocab = {token: i + len(SPECIALS) for i, (token, _) in enumerate(ranked)}
        return cls(vocab)

    @property
    def size(self) -> int:
        return len(self.vocab) + len(SPECIALS)

    def ids(self, text: str) -> list[int]:
        return [self.vocab.get(token, UNK) for token in tokenize(text)]

    def encode_pair(
        self, text1: str, text2: str, max_sequence_length: int
    ) -> tuple[list[int], list[int]]:
        """[CLS] text1 [SEP] text2 [SEP] plus segment ids, never longer
        than max_sequence_length; the longer segment loses tokens first."""
        a, b = self.ids(text1), self.ids(text2)
        budget = max_sequence_length - 3  # class token + two separators
        while len(a) + len(b) > budget:
            longer = a if len(a) >= len(b) else b
            longer.pop()
        ids = [CLS, *a, SEP, *b, SEP]
        segments = [0] * (len(a) + 2) + [1] * (len(b) + 1)
        return ids, segments

    def to_dict(self) -> dict:
        return {"vocab": self.vocab}

    @classmethod
    def from_dict(cls, obj: dict) -> "WordTokenizer":
        return cls({str(k): int(v) for k, v in obj["vocab"].items()})


def pad_batch(
    encoded: Sequence[tuple[list[int], list[int]]], max_sequence_length: int
) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Right-pad a batch to its longest row; returns ids, segments, mask."""
    width = min(max(len(ids) for ids, _ in encoded), max_sequence_length)
    ids_out, seg_out, mask_out = [], [], []
    for ids, segments in encoded:
        pad = width - len(ids)
        ids_out.append(ids + [PAD] * pad)
        seg_out.append(segments + [0] * pad)
        mask_out.append([1] * len(ids) + [0] * pad)
    return ids_out, seg_out, mask_out
