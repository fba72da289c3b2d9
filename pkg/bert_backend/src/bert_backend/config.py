"""Training configuration profiles.

The full profile mirrors the published uncased English encoder setup
(12 layers of hidden size 768 with 12 attention heads, vocabulary
30522, batch 32, 2 epochs, lr 2e-5, 1250 warmup steps). It expects the
pretrained weights to be available locally and exists for faithful
reproduction runs, not for CI. The tiny profile trains the same
architecture from scratch at desk scale; without pretrained weights it
needs a hotter, longer schedule (lr 1e-3, 8 epochs) to clear the
early plateau on pair tasks.
"""

import math
from dataclasses import dataclass, field, replace
from typing import Mapping


class ConfigError(ValueError):
    """A training configuration violates a documented invariant."""


@dataclass(frozen=True)
class TrainConfig:
    profile: str = "tiny"
    model_name: str | None = None  # pretrained weights id; None trains from scratch
    vocab_size: int = 4096
    hidden_size: int = 128
    num_layers: int = 2
    num_heads: int = 4
    max_sequence_length: int = 48
    batch_size: int = 32
    epochs: int = 8
    learning_rate: float = 1e-3
    warmup_steps: int = 0
    seed: int = 20
    checkpoint_dir: str = "checkpoints"
    extra: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.vocab_size < 8:
            raise ConfigError("vocab_size must leave room beyond the special tokens")
        if self.hidden_size % self.num_heads:
            raise ConfigError("hidden_size must be divisible by num_heads")
        if self.max_sequence_length < 8:
            raise ConfigError("max_sequence_length must be at least 8")
        if self.batch_size < 1 or self.epochs < 0:
            raise ConfigError("batch_size must be >= 1 and epochs >= 0")
        if self.warmup_steps < 0:
            raise ConfigError("warmup_steps must be >= 0")

    def check_schedule(self, n_train: int) -> int:
        """Total optimizer steps; rejects warmups longer than the run."""
        total = self.epochs * steps_per_epoch(n_train, self.batch_size)
        if self.warmup_steps > total:
            raise ConfigError(
                f"warmup_steps ({self.warmup_steps}) exceeds total steps ({total})"
            )
        return total


def steps_per_epoch(n_train: int, batch_size: int) -> int:
    return math.ceil(n_train / batch_size)


PROFILES: dict[str, TrainConfig] = {
    "tiny": TrainConfig(),
    "full": TrainConfig(
        profile="full",
        model_name="bert-base-uncased",
        vocab_size=30522,
        hidden_size=768,
        num_layers=12,
        num_heads=12,
        max_sequence_length=128,
        batch_size=32,
        epochs=2,
        learning_rate=2e-5,
        warmup_steps=1250,
    ),
}

_INT_KEYS = {
    "vocab_size", "hidden_size", "num_layers", "num_heads",
    "max_sequence_length", "batch_size", "epochs", "warmup_steps", "seed",
}
_FLOAT_KEYS = {"learning_rate"}
_STR_KEYS = {"model_name", "checkpoint_dir"}


def config_from_wire(obj: Mapping | None, default_profile: str = "tiny") -> TrainConfig:
    """Build a config from the /v1/train request body's ``config`` object.

    Unknown keys are rejected rather than ignored so a typo cannot
    silently train with defaults.
    """
    obj = dict(obj or {})
    profile = obj.pop("profile", default_profile)
    if profile not in PROFILES:
        raise ConfigError(f"unknown profile {profile!r}; expected one of {sorted(PROFILES)}")
    config = PROFILES[profile]
    updates: dict = {}
    for key, value in obj.items():
        try:
            if key in _INT_KEYS:
                updates[key] = int(value)
            elif key in _FLOAT_KEYS:
                updates[key] = float(value)
            elif key in _STR_KEYS:
                updates[key] = str(value)
            else:
                raise ConfigError(f"unknown config key {key!r}")
        except (TypeError, ValueError) as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"bad value for {key!r}: {value!r}") from None
    return replace(config, **updates) if updates else config
