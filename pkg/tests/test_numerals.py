import random

import pytest
from hypothesis import given, settings, strategies as st

from lingloop.errors import ClosureError, DomainError, EncodingError, TableError
from lingloop.letters import DEFAULT_POLICY, count_letters
from lingloop.numerals import (
    bundled_languages, build_english_table, load_bundled, load_table, make_table,
    parse_entries, required_nmax, spell_english, validate_closure,
)
from oracles import enumerate_letters

TEN = "\n".join(f"{n}\t{w}" for n, w in enumerate(
    "one two three four five six seven eight nine ten".split(), 1))


def test_load_table_fixture():
    t = load_table(TEN, DEFAULT_POLICY, "en")
    assert t.nmax == 10
    assert t[4] == "four"
    assert t.language == "en"


def test_comments_blank_lines_and_bom():
    src = "﻿# header\n\n1\ta\n# mid\n2\tbb\n\n"
    t = load_table(src)
    assert dict(t.entries) == {1: "a", 2: "bb"}
    assert load_table(src.encode("utf-8")) == t


def test_gap_reports_first_missing():
    src = "\n".join(line for line in TEN.splitlines() if not line.startswith("3\t"))
    with pytest.raises(TableError, match=r"gap at n=3"):
        load_table(src)


def test_duplicate():
    with pytest.raises(TableError, match=r"duplicate n=2"):
        load_table("1\ta\n2\tbb\n2\tcc\n")


def test_empty_spelling():
    with pytest.raises(TableError, match=r"empty spelling at n=2"):
        load_table("1\ta\n2\t\n")
    with pytest.raises(TableError, match=r"empty spelling at n=2"):
        load_table("1\ta\n2\t--\n")


def test_malformed_lines():
    with pytest.raises(TableError, match="line 1"):
        load_table("1 one\n")
    with pytest.raises(TableError, match="not a decimal"):
        load_table("x\tone\n")
    with pytest.raises(TableError, match="out of range"):
        load_table("0\tzero\n1\ta\n")
    with pytest.raises(EncodingError):
        load_table(b"1\t\xfe\n")


def test_closure_violation_carries_report():
    src = "1\ta\n2\tabcdefghi\n3\tabc\n4\tabcd\n5\tab\n"
    with pytest.raises(ClosureError) as err:
        load_table(src)
    report = err.value.report
    assert not report.valid
    assert report.violations == ((2, "abcdefghi", 9),)
    assert "closure violation" in str(err.value)


def test_validate_closure_minimal():
    assert validate_closure(make_table("x", {1: "a"})).valid
    with pytest.raises(ClosureError) as err:
        make_table("x", {1: "abc"})
    assert err.value.report.violations == ((1, "abc", 3),)


@pytest.mark.parametrize("n, expected", [
    (4, "four"), (21, "twenty-one"), (100, "one hundred"),
    (13, "thirteen"), (40, "forty"), (101, "one hundred one"),
    (115, "one hundred fifteen"), (999, "nine hundred ninety-nine"), (30, "thirty"),
])
def test_spell_english(n, expected):
    assert spell_english(n) == expected


@pytest.mark.parametrize("n", [0, 1000, -3, True, 2.0])
def test_spell_english_domain(n):
    with pytest.raises(DomainError):
        spell_english(n)


def test_english_table_examples():
    t10 = build_english_table(10)
    assert count_letters(t10[3]) == enumerate_letters("three") == 5
    t30 = build_english_table(30)
    assert count_letters(t30[17]) == enumerate_letters("seventeen") == 9
    assert validate_closure(t30).valid


@pytest.mark.parametrize("nmax", [1, 2, 3, 4])
def test_english_table_too_small(nmax):
    # "three" needs 5 letters, so tables below 5 cannot be closed
    with pytest.raises(ClosureError):
        build_english_table(nmax)


def test_english_table_closed_everywhere():
    for nmax in range(5, 1000):
        assert validate_closure(build_english_table(nmax)).valid


def test_round_trip(tables):
    for t in tables.values():
        again = load_table(t.serialize(), DEFAULT_POLICY, t.language)
        assert again == t
        assert dict(again.entries) == dict(t.entries)


@settings(max_examples=50)
@given(st.randoms(use_true_random=False))
def test_line_order_irrelevant(rnd):
    lines = build_english_table(40).serialize().splitlines()
    rnd.shuffle(lines)
    assert load_table("\n".join(lines), language="en") == build_english_table(40)


def test_bundled_set_complete():
    assert set(bundled_languages()) >= {"en", "de", "it", "sv", "no", "id", "es"}
    for tag in bundled_languages():
        t = load_bundled(tag)
        assert t.nmax >= 30
        assert validate_closure(t).valid


def test_bundled_english_matches_generator(tables):
    assert tables["en"] == build_english_table(tables["en"].nmax)


def test_out_of_domain_lookup(tables):
    with pytest.raises(DomainError):
        tables["en"][0]


def test_required_nmax():
    t = build_english_table(30)
    longest_spelling = max(count_letters(s) for s in t.entries.values())
    assert longest_spelling == enumerate_letters("twenty-three") == 11
    assert required_nmax(7, t) == 11
    assert required_nmax(25, t) == 25


def test_parse_entries_is_plain_dict():
    assert parse_entries("2\tb\n1\ta") == {2: "b", 1: "a"}
