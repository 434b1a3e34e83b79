"""The letter-count step map as a finite functional graph.

``step(n)`` is the number of letters in the spelling of ``n``. Closure of the
table makes it a self-map of 1..nmax, so every orbit ends in either a fixed
point (a loop constant) or a cycle of length >= 2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from lingloop.errors import DomainError
from lingloop.letters import DEFAULT_POLICY, LetterCountPolicy, count_letters
from lingloop.numerals import NumeralTable


@dataclass(frozen=True, order=True)
class FixedPoint:
    k: int

    @property
    def states(self) -> tuple[int, ...]:
        return (self.k,)

    def __str__(self):
        return str(self.k)


@dataclass(frozen=True, order=True)
class Cycle:
    states: tuple[int, ...]

    def __post_init__(self):
        states = tuple(self.states)
        if len(states) < 2 or len(set(states)) != len(states):
            raise ValueError(f"a cycle needs >= 2 distinct states, got {states}")
        i = states.index(min(states))
        object.__setattr__(self, "states", states[i:] + states[:i])

    def __str__(self):
        return "(" + " ".join(map(str, self.states)) + ")"


Attractor = FixedPoint | Cycle


def parse_attractor(text: str) -> Attractor:
    """Inverse of ``str(attractor)``: ``"4"`` or ``"(4 5)"``."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        return Cycle(tuple(int(x) for x in text[1:-1].split()))
    return FixedPoint(int(text))


@dataclass(frozen=True)
class Label:
    kind: str
    constants: tuple[int, ...] = ()

    KINDS = {1: "Positive", 2: "BiPositive", 3: "TriPositive"}

    @classmethod
    def from_inventory(cls, fixed_points, cycles) -> "Label":
        if cycles:
            return cls("Negative")
        if not fixed_points:
            raise AssertionError("functional graph with neither fixed points nor cycles")
        return cls(cls.KINDS.get(len(fixed_points), "MultiPositive"), tuple(fixed_points))

    @property
    def positive(self) -> bool:
        return self.kind != "Negative"

    def __str__(self):
        if self.kind == "Negative":
            return "Negative"
        return f"{self.kind}({','.join(map(str, self.constants))})"


@dataclass(frozen=True)
class Trajectory:
    start: int
    states: tuple[int, ...]
    tail_index: int
    attractor: Attractor

    @property
    def tail(self) -> tuple[int, ...]:
        return self.states[:self.tail_index]


@dataclass(frozen=True)
class Classification:
    language: str
    nmax: int
    fixed_points: tuple[int, ...]
    cycles: tuple[Cycle, ...]
    basin_sizes: dict = field(compare=False)
    label: Label
    # attractor reached from each n, index n-1
    destinations: tuple = field(repr=False, compare=False)

    @property
    def attractors(self) -> list[Attractor]:
        return [FixedPoint(k) for k in self.fixed_points] + list(self.cycles)


def step_map(table: NumeralTable, policy: LetterCountPolicy = DEFAULT_POLICY) -> tuple[int, ...]:
    """Successor of each state; index 0 is a placeholder so ``succ[n]`` works."""
    return _step_map(table, policy)


@lru_cache(maxsize=64)
def _step_map(table, policy):
    return (0,) + tuple(count_letters(table.entries[n], policy) for n in range(1, table.nmax + 1))


def _check(n: int, table: NumeralTable):
    if isinstance(n, bool) or not isinstance(n, int) or not 1 <= n <= table.nmax:
        raise DomainError(f"n={n!r} outside domain 1..{table.nmax} of table {table.language!r}")


def step(n: int, table: NumeralTable, policy: LetterCountPolicy = DEFAULT_POLICY) -> int:
    _check(n, table)
    return step_map(table, policy)[n]


def trajectory(n: int, table: NumeralTable, policy: LetterCountPolicy = DEFAULT_POLICY) -> Trajectory:
    """Orbit of ``n`` up to and including the first repeated state."""
    _check(n, table)
    succ = step_map(table, policy)
    seen: dict[int, int] = {}
    states = []
    while n not in seen:
        seen[n] = len(states)
        states.append(n)
        n = succ[n]
    states.append(n)
    tail_index = seen[n]
    loop = states[tail_index:-1]
    attractor = FixedPoint(loop[0]) if len(loop) == 1 else Cycle(tuple(loop))
    return Trajectory(states[0], tuple(states), tail_index, attractor)


def destinations(table: NumeralTable, policy: LetterCountPolicy = DEFAULT_POLICY) -> tuple:
    """Attractor of every state, memoized along paths; O(nmax) overall."""
    succ = step_map(table, policy)
    dest: list = [None] * (table.nmax + 1)
    for start in range(1, table.nmax + 1):
        if dest[start] is not None:
            continue
        path, on_path = [], {}
        n = start
        while dest[n] is None and n not in on_path:
            on_path[n] = len(path)
            path.append(n)
            n = succ[n]
        if dest[n] is None:
            loop = path[on_path[n]:]
            found = FixedPoint(loop[0]) if len(loop) == 1 else Cycle(tuple(loop))
        else:
            found = dest[n]
        for m in path:
            dest[m] = found
    return tuple(dest[1:])


def find_fixed_points(table: NumeralTable, policy: LetterCountPolicy = DEFAULT_POLICY) -> tuple[int, ...]:
    succ = step_map(table, policy)
    return tuple(n for n in range(1, table.nmax + 1) if succ[n] == n)


def find_cycles(table: NumeralTable, policy: LetterCountPolicy = DEFAULT_POLICY) -> tuple[Cycle, ...]:
    return tuple(sorted({a for a in destinations(table, policy) if isinstance(a, Cycle)}))


def basin(table: NumeralTable, policy: LetterCountPolicy, attractor: Attractor) -> frozenset[int]:
    dest = destinations(table, policy)
    members = frozenset(n for n, a in enumerate(dest, 1) if a == attractor)
    if not members:
        raise DomainError(f"attractor {attractor} does not occur in table {table.language!r}")
    return members


def classify(table: NumeralTable, policy: LetterCountPolicy = DEFAULT_POLICY) -> Classification:
    dest = destinations(table, policy)
    sizes: dict = {}
    for a in dest:
        sizes[a] = sizes.get(a, 0) + 1
    fixed = tuple(sorted(a.k for a in sizes if isinstance(a, FixedPoint)))
    cycles = tuple(sorted(a for a in sizes if isinstance(a, Cycle)))
    ordered = {a: sizes[a] for a in [FixedPoint(k) for k in fixed] + list(cycles)}
    return Classification(
        language=table.language,
        nmax=table.nmax,
        fixed_points=fixed,
        cycles=cycles,
        basin_sizes=ordered,
        label=Label.from_inventory(fixed, cycles),
        destinations=dest,
    )
