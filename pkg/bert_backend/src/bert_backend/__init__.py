"""Transformer paraphrase classifier behind the /v1 wire protocol.

The package is deliberately self-contained: it reads the pair TSV
format and speaks the train/predict HTTP contract, but shares no code
with the tooling that produces those files.
"""

from .config import PROFILES, TrainConfig, steps_per_epoch
from .data import PairRow, read_pairs_tsv
from .model import TrainedModel, fine_tune
from .server import build_app
from .tokenizer import SPECIALS, WordTokenizer

__version__ = "0.1.0"

__all__ = [
    "PROFILES",
    "PairRow",
    "SPECIALS",
    "TrainConfig",
    "TrainedModel",
    "WordTokenizer",
    "build_app",
    "fine_tune",
    "read_pairs_tsv",
    "steps_per_epoch",
]
