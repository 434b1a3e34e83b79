import unicodedata

import pytest
from hypothesis import given, strategies as st

from lingloop.errors import EncodingError
from lingloop.letters import LetterCountPolicy, count_letters, normalize
from oracles import enumerate_letters


def test_normalize_examples():
    assert normalize("Four") == "four"
    decomposed = "señor"
    assert len(decomposed) == 6
    assert normalize(decomposed) == "señor"
    assert len(normalize(decomposed)) == 5
    assert normalize("") == ""


def test_normalize_bytes_reports_offset():
    with pytest.raises(EncodingError) as err:
        normalize(b"ab\xffcd")
    assert err.value.offset == 2
    assert "byte offset 2" in str(err.value)


@pytest.mark.parametrize("word, expected", [
    ("four", 4),
    ("twenty-one", 9),
    ("", 0),
    ("one hundred", 10),
])
def test_count_letters_examples(word, expected):
    assert enumerate_letters(word) == expected
    assert count_letters(word) == expected


def test_diacritics_count_once():
    assert count_letters("dieciséis") == 9
    assert count_letters("diéciseis") == 9
    assert count_letters("åtta") == 4


def test_digraphs_are_two_letters():
    assert count_letters("ll") == 2
    assert count_letters("ch") == 2


def test_ignored_classes():
    assert count_letters("don't") == 4
    assert count_letters("a1b2c3") == 3
    assert count_letters("---") == 0
    assert count_letters("x.y,z!") == 3


def test_policy_flags():
    hyph = LetterCountPolicy(count_hyphens=True)
    spaces = LetterCountPolicy(count_spaces=True)
    assert count_letters("twenty-one", hyph) == 10
    assert count_letters("one hundred", hyph) == 10
    assert count_letters("one hundred", spaces) == 11
    assert count_letters("twenty-one", spaces) == 9


def test_policy_rejects_other_normalization():
    with pytest.raises(ValueError):
        LetterCountPolicy(normalization="NFD")


@given(st.text())
def test_normalize_idempotent(w):
    assert normalize(normalize(w)) == normalize(w)


@given(st.text())
def test_count_bounded_by_codepoints(w):
    # casefold can expand (ß -> ss), so bound by the normalized form
    assert count_letters(w) <= len(normalize(w))


@given(st.text())
def test_count_is_pure(w):
    assert count_letters(w) == count_letters(w)


ascii_words = st.text(alphabet=st.characters(min_codepoint=32, max_codepoint=126))


@given(ascii_words, ascii_words)
def test_concatenation_additive(a, b):
    assert count_letters(a + b) == count_letters(a) + count_letters(b)


@given(st.text())
def test_case_invariance(w):
    assert count_letters(w.upper()) == count_letters(w)
    assert count_letters(w.lower()) == count_letters(w)


def test_count_matches_composed_length_for_latin():
    for w in ["señor", "Ångström", "façade", "naïve"]:
        nfd = unicodedata.normalize("NFD", w)
        assert count_letters(nfd) == count_letters(w) == len(w)
