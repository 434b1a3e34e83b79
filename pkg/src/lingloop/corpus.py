"""Word-length distributions and their evolution under the step map.

Distributions hold integer counts plus a total; proportions are derived on
demand, so conservation and basin-mass checks are exact.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from lingloop.dynamics import destinations, find_fixed_points, step_map
from lingloop.errors import DomainError, WordlistError
from lingloop.letters import DEFAULT_POLICY, LetterCountPolicy, count_letters, decode, normalize
from lingloop.numerals import BOM, NumeralTable

DEFAULT_ROUNDS = 8


@dataclass(frozen=True)
class LengthDistribution:
    iteration: int
    counts: dict
    total: int

    def __post_init__(self):
        object.__setattr__(self, "counts", dict(sorted((k, v) for k, v in self.counts.items() if v)))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.counts)

    @property
    def mass(self) -> dict[int, float]:
        return {k: v / self.total for k, v in self.counts.items()}

    def fractions(self) -> dict[int, Fraction]:
        return {k: Fraction(v, self.total) for k, v in self.counts.items()}

    def mode(self) -> int:
        return max(self.counts, key=lambda k: (self.counts[k], -k))


@dataclass(frozen=True)
class CorpusReport:
    language: str
    rounds: int
    series: tuple[LengthDistribution, ...]
    converged_at: int | None

    @property
    def final(self) -> LengthDistribution:
        return self.series[-1]


def load_wordlist(source: str | bytes, policy: LetterCountPolicy = DEFAULT_POLICY,
                  dedup: bool = False) -> list[tuple[str, int]]:
    if isinstance(source, (bytes, bytearray)):
        source = decode(bytes(source))
    if source.startswith(BOM):
        source = source[1:]
    words = []
    seen = set()
    for lineno, line in enumerate(source.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        word = normalize(line)
        n = count_letters(word, policy)
        if n == 0:
            raise WordlistError(f"zero letters at line {lineno}: {line!r}")
        if dedup:
            if word in seen:
                continue
            seen.add(word)
        words.append((word, n))
    if not words:
        raise WordlistError("empty wordlist")
    return words


def read_wordlist(path, policy: LetterCountPolicy = DEFAULT_POLICY, dedup: bool = False):
    return load_wordlist(Path(path).read_bytes(), policy, dedup)


def initial_distribution(words) -> LengthDistribution:
    counts = Counter(n for _, n in words)
    if not counts:
        raise WordlistError("cannot build a distribution from no words")
    return LengthDistribution(0, counts, sum(counts.values()))


def push_forward(dist: LengthDistribution, succ) -> LengthDistribution:
    """Route each length's count through the step map."""
    out: Counter = Counter()
    for length, c in dist.counts.items():
        out[succ[length]] += c
    return LengthDistribution(dist.iteration + 1, out, dist.total)


def _check_support(dist: LengthDistribution, table: NumeralTable):
    too_long = [k for k in dist.counts if not 1 <= k <= table.nmax]
    if too_long:
        raise DomainError(
            f"length {max(too_long)} exceeds table {table.language!r} nmax={table.nmax}; "
            "supply a larger table"
        )


def iterate_distribution(dist: LengthDistribution, table: NumeralTable,
                         policy: LetterCountPolicy = DEFAULT_POLICY,
                         rounds: int = DEFAULT_ROUNDS) -> CorpusReport:
    """Run ``rounds`` routines starting from ``dist``.

    ``converged_at`` is the first iteration whose whole mass sits on fixed
    points; from there on the distribution cannot change. Mass parked on a
    cycle never counts as converged.
    """
    if rounds < 0:
        raise ValueError("rounds must be >= 0")
    _check_support(dist, table)
    succ = step_map(table, policy)
    fixed = set(find_fixed_points(table, policy))
    series = [dist]
    for _ in range(rounds):
        series.append(push_forward(series[-1], succ))
    converged_at = next((d.iteration for d in series if d.support <= fixed), None)
    return CorpusReport(table.language, rounds, tuple(series), converged_at)


def convergence_metrics(report: CorpusReport, target: int = 4, exact: bool = False) -> list:
    """Proportion of words at length ``target`` after each routine."""
    if exact:
        return [Fraction(d.counts.get(target, 0), d.total) for d in report.series]
    return [d.counts.get(target, 0) / d.total for d in report.series]


def limit_masses(dist: LengthDistribution, table: NumeralTable,
                 policy: LetterCountPolicy = DEFAULT_POLICY) -> dict:
    """Count of words that each attractor eventually absorbs."""
    _check_support(dist, table)
    dest = destinations(table, policy)
    out: dict = {}
    for length, c in dist.counts.items():
        a = dest[length - 1]
        out[a] = out.get(a, 0) + c
    return out
