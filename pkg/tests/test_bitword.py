import pytest
from hypothesis import given, strategies as st

from bdenum.bitword import BitWord, mask_to_word, word_to_mask


def test_string_round_trip_and_layout():
    w = BitWord.from_str("0110")
    assert (w.value, w.length) == (6, 4)
    assert str(w) == "0110"
    assert w.bits == (0, 1, 1, 0)
    assert w.at(1) == 0 and w.at(2) == 1
    assert w.position(0) == 0 and w.position(1) == 1


def test_equality_needs_same_length():
    assert BitWord.from_str("01") != BitWord.from_str("001")
    assert BitWord.from_str("01") == BitWord(1, 2)


def test_rejects_overflow_and_bad_text():
    with pytest.raises(ValueError):
        BitWord(4, 2)
    with pytest.raises(ValueError):
        BitWord.from_str("012")
    with pytest.raises(IndexError):
        BitWord.from_str("01").at(3)


@given(st.text(alphabet="01", max_size=20), st.text(alphabet="01", max_size=20))
def test_concat_then_split(a, b):
    wa, wb = BitWord.from_str(a), BitWord.from_str(b)
    joined = wa.concat(wb)
    assert str(joined) == a + b
    assert joined.split(len(a)) == (wa, wb)


@given(st.integers(min_value=0, max_value=2**12 - 1))
def test_mask_layout_round_trip(mask):
    w = mask_to_word(mask, 12)
    assert word_to_mask(w) == mask
    assert all(w.at(i + 1) == (mask >> i & 1) for i in range(12))
