"""Word normalization and letter counting.

A letter is any alphabetic code point after NFC composition and case
folding. Whitespace, hyphens, apostrophes, other punctuation and digits are
ignored unless the policy says otherwise.
"""
from __future__ import annotations

import unicodedata
from dataclasses import dataclass

from lingloop.errors import EncodingError

# Hyphen-like code points toggled by ``count_hyphens``.
HYPHENS = frozenset("-‐‑‒–—−")


@dataclass(frozen=True)
class LetterCountPolicy:
    """Rules for what counts as a letter.

    The defaults count alphabetic code points only. ``count_hyphens`` and
    ``count_spaces`` add hyphen-like characters and whitespace back in, for
    probing how sensitive a language's dynamics are to the choice.
    """

    normalization: str = "NFC"
    count_hyphens: bool = False
    count_spaces: bool = False

    def __post_init__(self):
        if self.normalization != "NFC":
            raise ValueError(f"unsupported normalization {self.normalization!r}")

    def counts(self, ch: str) -> bool:
        if ch.isalpha():
            return True
        if self.count_hyphens and ch in HYPHENS:
            return True
        if self.count_spaces and ch.isspace():
            return True
        return False


DEFAULT_POLICY = LetterCountPolicy()


def decode(data: bytes) -> str:
    """Decode UTF-8, raising :class:`EncodingError` with the byte offset."""
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(exc.start, exc.reason) from None


def normalize(word: str | bytes) -> str:
    if isinstance(word, (bytes, bytearray)):
        word = decode(bytes(word))
    # casefold can emit decomposed sequences (e.g. U+0130), so compose last.
    return unicodedata.normalize("NFC", unicodedata.normalize("NFC", word).casefold())


def count_letters(word: str | bytes, policy: LetterCountPolicy = DEFAULT_POLICY) -> int:
    return sum(1 for ch in normalize(word) if policy.counts(ch))
