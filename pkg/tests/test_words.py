import pytest
from hypothesis import given, strategies as st

from lacodes import words

N = 16
word16 = st.integers(min_value=0, max_value=(1 << N) - 1)


def w(*coords):
    return words.word_from_support(N, coords)


def test_exponent():
    assert words.exponent(16) == 4
    assert words.exponent(4) == 2
    for bad in (0, 1, 2, 3, 6, 24):
        with pytest.raises(ValueError):
            words.exponent(bad)


def test_weight():
    assert words.weight(0) == 0
    assert words.weight(w(0, 8)) == 2
    assert words.weight((1 << N) - 1) == 16


def test_distance():
    assert words.distance(w(3, 7), w(3, 7)) == 0
    assert words.distance(0, (1 << N) - 1) == 16
    assert words.distance(w(0), w(1)) == 2


def test_add():
    x = w(0, 8)
    assert words.add(x, 0) == x
    assert words.add(x, x) == 0
    assert words.add(w(0, 8), w(8, 9)) == w(0, 9)


def test_parity():
    assert words.parity(0) == 0
    assert words.parity(w(5)) == 1
    assert words.parity(w(2, 11)) == 0


def test_serialization_round_trip():
    x = w(0, 3, 15)
    s = words.to_bits(x, N)
    assert s == "1001000000000001"
    assert words.from_bits(s) == (x, N)
    with pytest.raises(ValueError):
        words.from_bits("10a1")
    with pytest.raises(ValueError):
        words.to_bits(1 << N, N)


@pytest.mark.parametrize("level", [1, 2, 3, 4])
def test_array_round_trip(level):
    for k in range(N):
        i, j = words.array_cell(N, level, k)
        assert words.array_coord(N, level, i, j) == k


def test_array_rows():
    x = w(0, 4, 9)
    rows = words.array_rows(x, N, 2)
    assert len(rows) == 4 and all(r < 16 for r in rows)
    assert rows[0] == 0b1000 and rows[1] == 0b1000 and rows[2] == 0b0100


def test_parity_check_examples():
    # single 1 at coordinate 0 contributes only through row 0
    assert words.parity_check(w(0), N, 2) == 0b1000
    # rows cancel: coordinates 0 and 8 sit in the same column at level 1
    assert words.parity_check(w(0, 8), N, 1) == 0
    with pytest.raises(ValueError):
        words.parity_check(0, N, 5)


@given(word16, word16)
def test_parity_check_linear(a, b):
    for level in (1, 2, 3):
        pa = words.parity_check(a, N, level)
        pb = words.parity_check(b, N, level)
        assert words.parity_check(a ^ b, N, level) == pa ^ pb


@given(word16)
def test_parity_check_preserves_parity(x):
    for level in (1, 2, 3):
        assert words.parity(words.parity_check(x, N, level)) == words.parity(x)


def test_neighborhood_of_zero():
    omega = words.neighborhood([0], N)
    assert omega == {1 << pos for pos in range(N)}
    assert all(words.weight(y) == 1 for y in omega)


def test_neighborhood_monotone_and_parity():
    small = words.neighborhood([0], N)
    bigger = words.neighborhood([0, w(0, 1)], N)
    assert small <= bigger
    assert all(words.parity(y) == 1 for y in bigger)


def test_even_odd_words():
    evens = list(words.even_words(4))
    assert evens == [0b0000, 0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100, 0b1111]
    assert len(list(words.odd_words(4))) == 8
