"""Encoder classifier: build, fine-tune, checkpoint, predict.

The architecture is the standard bidirectional transformer encoder
with a pooled classification head. The head averages over non-padding
positions rather than reading the class token alone: trained from
scratch at desk scale, the class-token readout sits on a long loss
plateau that mean pooling avoids. The tiny profile trains from
scratch; the full profile starts from published pretrained weights
when they are available on disk.
"""

import random
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Callable, Sequence

import torch
from torch import nn
from transformers import BertConfig, BertModel

from .config import TrainConfig, steps_per_epoch
from .data import PairRow
from .tokenizer import WordTokenizer, pad_batch


class PairClassifier(nn.Module):
    """Encoder plus a binary head on the mean of non-padding states."""

    def __init__(self, encoder: BertModel) -> None:
        super().__init__()
        self.encoder = encoder
        self.classifier = nn.Linear(encoder.config.hidden_size, 2)

    def forward(self, input_ids, token_type_ids, attention_mask):
        hidden = self.encoder(
            input_ids=input_ids,
            token_type_ids=token_type_ids,
            attention_mask=attention_mask,
        ).last_hidden_state
        weights = attention_mask.unsqueeze(-1).to(hidden.dtype)
        pooled = (hidden * weights).sum(dim=1) / weights.sum(dim=1)
        return self.classifier(pooled)


def build_model(config: TrainConfig, vocab_size: int) -> PairClassifier:
    if config.model_name:
        return PairClassifier(BertModel.from_pretrained(config.model_name))
    spec = BertConfig(
        vocab_size=vocab_size,
        hidden_size=config.hidden_size,
        num_hidden_layers=config.num_layers,
        num_attention_heads=config.num_heads,
        intermediate_size=config.hidden_size * 4,
        max_position_embeddings=config.max_sequence_length,
        pad_token_id=0,
    )
    return PairClassifier(BertModel(spec, add_pooling_layer=False))


@dataclass
class TrainedModel:
    tokenizer: WordTokenizer
    model: nn.Module
    config: TrainConfig

    @torch.no_grad()
    def scores(self, texts: Sequence[tuple[str, str]], batch_size: int = 64) -> list[float]:
        """Paraphrase probability per (text1, text2)."""
        self.model.eval()
        out: list[float] = []
        limit = self.config.max_sequence_length
        for start in range(0, len(texts), batch_size):
            chunk = texts[start : start + batch_size]
            encoded = [self.tokenizer.encode_pair(t1, t2, limit) for t1, t2 in chunk]
            ids, segments, mask = pad_batch(encoded, limit)
            logits = self.model(
                input_ids=torch.tensor(ids),
                token_type_ids=torch.tensor(segments),
                attention_mask=torch.tensor(mask),
            )
            out.extend(torch.softmax(logits, dim=-1)[:, 1].tolist())
        return out

    def accuracy(self, rows: Sequence[PairRow]) -> float:
        scores = self.scores([(r.text1, r.text2) for r in rows])
        hits = sum(int(s >= 0.5) == r.label for s, r in zip(scores, rows))
        return hits / len(rows)

    def save(self, path: str | Path) -> None:
        payload = {
            "model_state": self.model.state_dict(),
            "tokenizer": self.tokenizer.to_dict(),
            "config": {k: v for k, v in asdict(self.config).items() if k != "extra"},
        }
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        torch.save(payload, tmp)
        tmp.replace(path)  # latest-only retention, swapped atomically

    @classmethod
    def load(cls, path: str | Path) -> "TrainedModel":
        payload = torch.load(path, map_location="cpu", weights_only=False)
        config = TrainConfig(**payload["config"])
        tokenizer = WordTokenizer.from_dict(payload["tokenizer"])
        model = build_model(config, tokenizer.size)
        model.load_state_dict(payload["model_state"])
        return cls(tokenizer, model, config)

    @classmethod
    def untrained(cls, config: TrainConfig) -> "TrainedModel":
        """A randomly initialized model; serves chance-level predictions."""
        torch.manual_seed(config.seed)
        tokenizer = WordTokenizer(vocab={})
        return cls(tokenizer, build_model(config, tokenizer.size), config)


def _schedule(optimizer, warmup_steps: int, total_steps: int):
    def factor(step: int) -> float:
        if warmup_steps and step < warmup_steps:
            return (step + 1) / warmup_steps
        remaining = max(total_steps - warmup_steps, 1)
        return max(0.0, (total_steps - step) / remaining)

    return torch.optim.lr_scheduler.LambdaLR(optimizer, factor)


def fine_tune(
    train_rows: Sequence[PairRow],
    val_rows: Sequence[PairRow],
    config: TrainConfig,
    progress: Callable[[str], None] = lambda message: None,
) -> tuple[TrainedModel, dict]:
    """Adam with linear warmup/decay over ``epochs * ceil(n/batch)`` steps."""
    if not train_rows:
        raise ValueError("training set is empty")
    total_steps = config.check_schedule(len(train_rows))
    torch.manual_seed(config.seed)
    rng = random.Random(config.seed)

    tokenizer = WordTokenizer.fit(
        (text for row in train_rows for text in (row.text1, row.text2)),
        config.vocab_size,
    )
    model = build_model(config, tokenizer.size)
    trained = TrainedModel(tokenizer, model, config)
    optimizer = torch.optim.Adam(model.parameters(), lr=config.learning_rate)
    scheduler = _schedule(optimizer, config.warmup_steps, total_steps)
    loss_fn = nn.CrossEntropyLoss()
    limit = config.max_sequence_length

    order = list(range(len(train_rows)))
    step = 0
    for epoch in range(config.epochs):
        rng.shuffle(order)
        model.train()
        for start in range(0, len(order), config.batch_size):
            batch = [train_rows[i] for i in order[start : start + config.batch_size]]
            encoded = [tokenizer.encode_pair(r.text1, r.text2, limit) for r in batch]
            ids, segments, mask = pad_batch(encoded, limit)
            logits = model(
                input_ids=torch.tensor(ids),
                token_type_ids=torch.tensor(segments),
                attention_mask=torch.tensor(mask),
            )
            loss = loss_fn(logits, torch.tensor([r.label for r in batch]))
            optimizer.zero_grad()
            loss.backward()
            optimizer.step()
            scheduler.step()
            step += 1
        progress(f"epoch {epoch + 1}/{config.epochs} done ({step} steps)")

    summary = {
        "steps": step,
        "steps_per_epoch": steps_per_epoch(len(train_rows), config.batch_size),
        "n_train": len(train_rows),
        "n_val": len(val_rows),
        "val_accuracy": trained.accuracy(val_rows) if val_rows else None,
    }
    return trained, summary
