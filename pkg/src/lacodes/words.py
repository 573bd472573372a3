"""Binary word algebra on fixed-length words.

A word of length n (n = 2^m) is stored as a plain int; coordinate 0 is the
most significant bit, so the serialized bit string reads in coordinate
order.  At level t (1 <= t <= m) a word is viewed as a 2^t x 2^(m-t) array:
coordinate k sits in row k // 2^(m-t), column k % 2^(m-t).
"""

from __future__ import annotations

from typing import Iterable, Iterator


def exponent(n: int) -> int:
    """Return m for n = 2^m, requiring m >= 2."""
    m = n.bit_length() - 1
    if n <= 0 or n != 1 << m or m < 2:
        raise ValueError(f"word length must be 2^m with m >= 2, got {n}")
    return m


def coord_mask(n: int, k: int) -> int:
    """Mask with a single 1 at coordinate k."""
    if not 0 <= k < n:
        raise ValueError(f"coordinate {k} out of range for length {n}")
    return 1 << (n - 1 - k)


def word_from_support(n: int, coords: Iterable[int]) -> int:
    w = 0
    for k in coords:
        w |= coord_mask(n, k)
    return w


def support(w: int, n: int) -> tuple[int, ...]:
    return tuple(k for k in range(n) if (w >> (n - 1 - k)) & 1)


def weight(w: int) -> int:
    """Number of 1-coordinates."""
    return w.bit_count()


def distance(a: int, b: int) -> int:
    """Hamming distance."""
    return (a ^ b).bit_count()


def add(a: int, b: int) -> int:
    """Coordinate-wise mod-2 sum (xor)."""
    return a ^ b


def parity(w: int) -> int:
    """0 for an even number of ones, 1 for odd."""
    return w.bit_count() & 1


def to_bits(w: int, n: int) -> str:
    """Serialize as n characters '0'/'1', coordinate 0 first."""
    if w >> n:
        raise ValueError(f"word {w:#x} does not fit length {n}")
    return format(w, f"0{n}b")


def from_bits(s: str) -> tuple[int, int]:
    """Parse a bit string, returning (word, length)."""
    if not s or s.strip("01"):
        raise ValueError(f"not a binary string: {s!r}")
    return int(s, 2), len(s)


def array_shape(n: int, level: int) -> tuple[int, int]:
    """(rows, cols) of the level-t array view."""
    m = exponent(n)
    if not 1 <= level <= m:
        raise ValueError(f"level {level} out of range 1..{m}")
    return 1 << level, n >> level


def array_coord(n: int, level: int, row: int, col: int) -> int:
    """Coordinate index of array cell (row, col) at the given level."""
    rows, cols = array_shape(n, level)
    if not (0 <= row < rows and 0 <= col < cols):
        raise ValueError(f"cell ({row}, {col}) outside {rows}x{cols} array")
    return row * cols + col


def array_cell(n: int, level: int, k: int) -> tuple[int, int]:
    """(row, col) of coordinate k at the given level."""
    _, cols = array_shape(n, level)
    if not 0 <= k < n:
        raise ValueError(f"coordinate {k} out of range for length {n}")
    return divmod(k, cols)


def array_rows(w: int, n: int, level: int) -> list[int]:
    """The 2^t row words (each of length 2^(m-t)), top row first."""
    rows, cols = array_shape(n, level)
    mask = (1 << cols) - 1
    return [(w >> (n - (i + 1) * cols)) & mask for i in range(rows)]


def parity_check(w: int, n: int, level: int) -> int:
    """Fold the level-t array: xor of all rows, a word of length 2^(m-t)."""
    _, cols = array_shape(n, level)
    mask = (1 << cols) - 1
    p = 0
    while w:
        p ^= w & mask
        w >>= cols
    return p


def neighborhood(words: Iterable[int], n: int) -> set[int]:
    """All words at Hamming distance exactly 1 from some input word."""
    out: set[int] = set()
    for w in words:
        for pos in range(n):
            out.add(w ^ (1 << pos))
    return out


def even_words(n: int) -> Iterator[int]:
    """All words of even weight, ascending.  Scans 2^n values; n <= 16 use."""
    for w in range(1 << n):
        if not w.bit_count() & 1:
            yield w


def odd_words(n: int) -> Iterator[int]:
    """All words of odd weight, ascending."""
    for w in range(1 << n):
        if w.bit_count() & 1:
            yield w
