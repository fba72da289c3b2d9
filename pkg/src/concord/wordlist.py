"""Bundled common-word dictionary used to guard anonymization.

Usernames that are ordinary vocabulary ("test", "cool") would cause
false replacements all over a chat log, so the anonymizer checks each
name against this list before rewriting. Regenerate the data file with
tools/build_wordlist.py; do not edit it by hand.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

_RESOURCE = "common_words_10k.txt"


@lru_cache(maxsize=1)
def common_words() -> frozenset[str]:
    """Return the bundled lowercase vocabulary as a frozen set."""
    text = resources.files(__package__).joinpath("data", _RESOURCE).read_text("utf-8")
    words = set()
    for line in text.splitlines():
        word = line.strip()
        if word and not word.startswith("#"):
            words.add(word.lower())
    return frozenset(words)
