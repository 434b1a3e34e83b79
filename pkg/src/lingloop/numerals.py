"""Numeral spelling tables: parsing, closure validation, English rules."""
from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

from lingloop.errors import ClosureError, DomainError, TableError
from lingloop.letters import DEFAULT_POLICY, LetterCountPolicy, count_letters, decode

BOM = "﻿"


@dataclass(frozen=True)
class NumeralTable:
    """Spellings of 1..nmax in one language.

    Construct through :func:`load_table`, :func:`build_english_table` or
    :func:`make_table`; those enforce contiguity and closure.
    """

    language: str
    entries: Mapping[int, str] = field(compare=False)
    nmax: int
    _items: tuple = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", MappingProxyType(dict(sorted(self.entries.items()))))
        object.__setattr__(self, "_items", tuple(self.entries.items()))

    def __getitem__(self, n: int) -> str:
        try:
            return self.entries[n]
        except KeyError:
            raise DomainError(f"n={n} outside table domain 1..{self.nmax}") from None

    def __len__(self):
        return self.nmax

    def serialize(self) -> str:
        return "".join(f"{n}\t{s}\n" for n, s in self._items)


@dataclass(frozen=True)
class ClosureReport:
    nmax: int
    violations: tuple = ()

    @property
    def valid(self) -> bool:
        return not self.violations


def validate_closure(table: NumeralTable, policy: LetterCountPolicy = DEFAULT_POLICY) -> ClosureReport:
    bad = []
    for n, spelling in table.entries.items():
        k = count_letters(spelling, policy)
        if not 1 <= k <= table.nmax:
            bad.append((n, spelling, k))
    return ClosureReport(table.nmax, tuple(bad))


def make_table(language: str, entries: Mapping[int, str],
               policy: LetterCountPolicy = DEFAULT_POLICY) -> NumeralTable:
    """Validate ``entries`` and wrap them as a table.

    Checks run in a fixed order (domain, gaps, empty spellings, closure) so the
    reported error does not depend on input order.
    """
    if not entries:
        raise TableError("empty table")
    keys = sorted(entries)
    if keys[0] < 1:
        raise TableError(f"n={keys[0]} out of range (numbers start at 1)")
    nmax = keys[-1]
    if len(keys) != nmax:
        present = set(keys)
        missing = next(n for n in range(1, nmax + 1) if n not in present)
        raise TableError(f"gap at n={missing}")
    for n in keys:
        if count_letters(entries[n], policy) == 0:
            raise TableError(f"empty spelling at n={n}")
    table = NumeralTable(language, entries, nmax)
    report = validate_closure(table, policy)
    if not report.valid:
        raise ClosureError(report)
    return table


def parse_entries(source: str | bytes) -> dict[int, str]:
    if isinstance(source, (bytes, bytearray)):
        source = decode(bytes(source))
    if source.startswith(BOM):
        source = source[1:]
    entries: dict[int, str] = {}
    for lineno, line in enumerate(source.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        key, tab, spelling = line.partition("\t")
        if not tab:
            raise TableError(f"line {lineno}: expected '<n><TAB><spelling>'")
        key = key.strip()
        if not key.isascii() or not key.isdigit():
            raise TableError(f"line {lineno}: {key!r} is not a decimal number")
        n = int(key)
        if n in entries:
            raise TableError(f"duplicate n={n} at line {lineno}")
        entries[n] = spelling.strip()
    return entries


def load_table(source: str | bytes, policy: LetterCountPolicy = DEFAULT_POLICY,
               language: str = "und") -> NumeralTable:
    return make_table(language, parse_entries(source), policy)


def read_table(path, policy: LetterCountPolicy = DEFAULT_POLICY, language: str | None = None) -> NumeralTable:
    """Load a table file; the language tag defaults to the filename stem."""
    path = Path(path)
    return load_table(path.read_bytes(), policy, language or path.stem)


# -- bundled reference tables ------------------------------------------------

LANGUAGE_NAMES = {
    "de": "German",
    "en": "English",
    "es": "Spanish",
    "id": "Indonesian",
    "it": "Italian",
    "no": "Norwegian",
    "sv": "Swedish",
}


def bundled_dir():
    return resources.files("lingloop") / "data" / "tables"


def bundled_languages() -> list[str]:
    return sorted(p.name[:-4] for p in bundled_dir().iterdir() if p.name.endswith(".tsv"))


def load_bundled(language: str, policy: LetterCountPolicy = DEFAULT_POLICY) -> NumeralTable:
    res = bundled_dir() / f"{language}.tsv"
    if not res.is_file():
        raise KeyError(f"no bundled table for {language!r}")
    return load_table(res.read_bytes(), policy, language)


# -- English ------------------------------------------------------------------

_ONES = ("", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
         "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen",
         "seventeen", "eighteen", "nineteen")
_TENS = ("", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety")


def spell_english(n: int) -> str:
    """English cardinal for 1..999, hyphenated tens-units, no "and"."""
    if isinstance(n, bool) or not isinstance(n, int) or not 1 <= n <= 999:
        raise DomainError(f"spell_english supports 1..999, got {n!r}")
    hundreds, rest = divmod(n, 100)
    parts = []
    if hundreds:
        parts.append(f"{_ONES[hundreds]} hundred")
    if rest >= 20:
        tens, ones = divmod(rest, 10)
        parts.append(_TENS[tens] + (f"-{_ONES[ones]}" if ones else ""))
    elif rest:
        parts.append(_ONES[rest])
    return " ".join(parts)


def build_english_table(nmax: int, policy: LetterCountPolicy = DEFAULT_POLICY) -> NumeralTable:
    if not 1 <= nmax <= 999:
        raise DomainError(f"nmax must be in 1..999, got {nmax}")
    return make_table("en", {n: spell_english(n) for n in range(1, nmax + 1)}, policy)


def required_nmax(longest_word: int, table: NumeralTable | None = None,
                  policy: LetterCountPolicy = DEFAULT_POLICY) -> int:
    """Table size a corpus needs: its longest word or the longest spelling, whichever is larger."""
    longest_spelling = 0
    if table is not None:
        longest_spelling = max(count_letters(s, policy) for s in table.entries.values())
    return max(longest_word, longest_spelling)
