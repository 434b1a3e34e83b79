"""Iterated letter-count dynamics over numeral spellings."""
from lingloop.corpus import (
    CorpusReport, LengthDistribution, convergence_metrics, initial_distribution,
    iterate_distribution, limit_masses, load_wordlist,
)
from lingloop.dynamics import (
    Classification, Cycle, FixedPoint, Label, Trajectory, basin, classify,
    find_cycles, find_fixed_points, step, trajectory,
)
from lingloop.errors import (
    ClosureError, DomainError, EncodingError, LingLoopError, TableError, ValidationError, WordlistError,
)
from lingloop.letters import DEFAULT_POLICY, LetterCountPolicy, count_letters, normalize
from lingloop.numerals import (
    ClosureReport, NumeralTable, build_english_table, load_bundled, load_table, spell_english,
    validate_closure,
)

__version__ = "0.1.0"
