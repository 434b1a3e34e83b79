import random
import string

import pytest

from lingloop.numerals import load_bundled

BUNDLED = ("de", "en", "es", "id", "it", "no", "sv")

_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for name, value in report.user_properties:
        if name == "criterion":
            prev = _criteria.get(value, True)
            _criteria[value] = prev and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for title in sorted(_criteria, key=lambda t: int(t.split(".")[0])):
        terminalreporter.write_line(f"{'PASS' if _criteria[title] else 'FAIL'}  {title}")


@pytest.fixture(scope="session")
def tables():
    return {tag: load_bundled(tag) for tag in BUNDLED}


@pytest.fixture(scope="session")
def english_words():
    """A desk-scale English dictionary list; falls back to random letters."""
    try:
        from english_words import get_english_words_set
    except ImportError:
        rng = random.Random(7)
        return ["".join(rng.choices(string.ascii_lowercase, k=rng.randint(1, 20))) for _ in range(100_000)]
    words = sorted(w for w in get_english_words_set(["gcide"], lower=True, alpha=True) if w.isalpha() and len(w) <= 30)
    return words
