"""The structured word sets the construction is scaffolded on.

Per level t the module provides the seed set (even words duplicated into
array rows 0 and 1), the level codes built by summing seed sets (the top
level code is the extended Hamming code), the level neighborhoods and
closures with both definitional and closed-form membership, and the bold
span sets that bold components fill.

Definitional computations scan the full space and are restricted to small
n (the 2^15-element scan at n = 16); closed forms work at any supported
length.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .words import (
    array_shape,
    even_words,
    exponent,
    neighborhood,
    parity,
    parity_check,
    weight,
)

# Full-space scans (definitional closure, set enumerations) stay below this.
ENUMERATION_LIMIT = 1 << 16


def _check_level(n: int, level: int) -> int:
    m = exponent(n)
    if not 1 <= level <= m - 1:
        raise ValueError(f"level {level} out of range 1..{m - 1} for n={n}")
    return m


def seed_words(n: int, level: int) -> list[int]:
    """Level-t seed set: rows 0 and 1 both equal to an even word, rest zero.

    Ordered by ascending value of the duplicated word.
    """
    _check_level(n, level)
    _, cols = array_shape(n, level)
    hi, lo = n - cols, n - 2 * cols
    return [(v << hi) | (v << lo) for v in range(1 << cols) if not v.bit_count() & 1]


def seed_count(n: int, level: int) -> int:
    _check_level(n, level)
    return 1 << ((n >> level) - 1)


def in_seed(w: int, n: int, level: int) -> bool:
    _check_level(n, level)
    _, cols = array_shape(n, level)
    if w & ((1 << (n - 2 * cols)) - 1):
        return False
    hi = w >> (n - cols)
    lo = (w >> (n - 2 * cols)) & ((1 << cols) - 1)
    return hi == lo and not hi.bit_count() & 1


def _seed_basis(n: int, level: int) -> list[int]:
    # Even words of length c are spanned by the c-1 weight-2 words e0+ek.
    _, cols = array_shape(n, level)
    hi, lo = n - cols, n - 2 * cols
    base = 1 << (cols - 1)
    out = []
    for k in range(1, cols):
        v = base | (1 << (cols - 1 - k))
        out.append((v << hi) | (v << lo))
    return out


@lru_cache(maxsize=None)
def level_basis(n: int, level: int) -> tuple[int, ...]:
    """Echelonized basis of the level-t code (the span of seed sets 1..t)."""
    _check_level(n, level)
    vectors: list[int] = []
    for i in range(1, level + 1):
        vectors.extend(_seed_basis(n, i))
    basis: dict[int, int] = {}
    for v in vectors:
        w = v
        while w:
            p = w.bit_length() - 1
            if p in basis:
                w ^= basis[p]
            else:
                basis[p] = w
                break
    return tuple(basis[p] for p in sorted(basis, reverse=True))


def _reduce(w: int, basis: tuple[int, ...]) -> int:
    for b in basis:
        if w.bit_length() == b.bit_length():
            w ^= b
    return w


def in_level_code(w: int, n: int, level: int) -> bool:
    """Membership in the level-t code (a linear space)."""
    return _reduce(w, level_basis(n, level)) == 0


def level_code_size(n: int, level: int) -> int:
    _check_level(n, level)
    return 1 << ((n >> level) * ((1 << level) - 1) - level)


def level_code_words(n: int, level: int) -> list[int]:
    """Explicit ascending enumeration of the level-t code."""
    size = level_code_size(n, level)
    if size > ENUMERATION_LIMIT:
        raise ValueError(f"level code of size {size} exceeds enumeration limit")
    words = [0]
    for b in level_basis(n, level):
        words += [w ^ b for w in words]
    return sorted(words)


def hamming_code(n: int) -> list[int]:
    """The extended Hamming code of length n, ascending."""
    return level_code_words(n, exponent(n) - 1)


def in_level_neighborhood(w: int, n: int, level: int) -> bool:
    """Closed-form membership in the neighborhood of the level-t code."""
    _check_level(n, level)
    return weight(parity_check(w, n, level)) == 1


def level_neighborhood_size(n: int, level: int) -> int:
    m = _check_level(n, level)
    return 1 << ((n >> level) * ((1 << level) - 1) + m - level)


def in_level_closure(w: int, n: int, level: int) -> bool:
    """Closed-form membership in the closure of the level-t code.

    Below the top level this is the kernel of the level parity fold; at the
    top level the closure is all of the even-weight space.
    """
    m = _check_level(n, level)
    if level == m - 1:
        return parity(w) == 0
    return parity_check(w, n, level) == 0


def level_closure_size(n: int, level: int) -> int:
    m = _check_level(n, level)
    if level == m - 1:
        return 1 << (n - 1)
    return 1 << ((n >> level) * ((1 << level) - 1))


@lru_cache(maxsize=None)
def closure_basis(n: int, level: int) -> tuple[int, ...]:
    """Basis of the closed-form level closure (a linear space)."""
    m = _check_level(n, level)
    if level == m - 1:
        # even-weight space: e0+ek for all k
        return tuple((1 << (n - 1)) | (1 << (n - 1 - k)) for k in range(1, n))
    rows, cols = array_shape(n, level)
    out = []
    for i in range(1, rows):
        for j in range(cols):
            out.append((1 << (n - 1 - j)) | (1 << (n - 1 - (i * cols + j))))
    return tuple(out)


def closure_of(words: Iterable[int], n: int) -> set[int]:
    """Definitional closure: even words whose whole neighborhood is covered.

    Scans the even-weight space; n must stay within the enumeration limit.
    """
    if (1 << n) > ENUMERATION_LIMIT:
        raise ValueError(f"definitional closure infeasible at n={n}")
    ws = set(words)
    for w in ws:
        if parity(w):
            raise ValueError(f"odd-parity word {w:#x} in closure input")
    omega = neighborhood(ws, n)
    out = set()
    for x in even_words(n):
        if all((x ^ (1 << pos)) in omega for pos in range(n)):
            out.add(x)
    return out


def in_bold_span(w: int, n: int, level: int) -> bool:
    """Membership in the level-t bold span.

    Level 1 is the seed set itself; above that the span is cut out of the
    level parity-fold kernel by one more bit: the total parity of the
    even-indexed array rows.
    """
    _check_level(n, level)
    if level == 1:
        return in_seed(w, n, 1)
    if parity_check(w, n, level) != 0:
        return False
    rows, cols = array_shape(n, level)
    mask = (1 << cols) - 1
    total = 0
    for i in range(0, rows, 2):
        total ^= ((w >> (n - (i + 1) * cols)) & mask).bit_count() & 1
    return total == 0


def bold_span_dimension(n: int, level: int) -> int:
    _check_level(n, level)
    if level == 1:
        return (n >> 1) - 1
    return n - (n >> level) - 1


@lru_cache(maxsize=None)
def bold_span_basis(n: int, level: int) -> tuple[int, ...]:
    """Echelonized basis of the level-t bold span."""
    _check_level(n, level)
    if level == 1:
        vectors = _seed_basis(n, 1)
    else:
        vectors = list(_seed_basis(n, level)) + list(closure_basis(n, level - 1))
    basis: dict[int, int] = {}
    for v in vectors:
        w = v
        while w:
            p = w.bit_length() - 1
            if p in basis:
                w ^= basis[p]
            else:
                basis[p] = w
                break
    out = tuple(basis[p] for p in sorted(basis, reverse=True))
    assert len(out) == bold_span_dimension(n, level)
    return out


def bold_span_words(n: int, level: int) -> list[int]:
    """Explicit ascending enumeration of the level-t bold span."""
    size = 1 << bold_span_dimension(n, level)
    if size > ENUMERATION_LIMIT:
        raise ValueError(f"bold span of size {size} exceeds enumeration limit")
    words = [0]
    for b in bold_span_basis(n, level):
        words += [w ^ b for w in words]
    return sorted(words)


def closure_words(n: int, level: int) -> list[int]:
    """Explicit ascending enumeration of the closed-form level closure."""
    size = level_closure_size(n, level)
    if size > ENUMERATION_LIMIT:
        raise ValueError(f"closure of size {size} exceeds enumeration limit")
    words = [0]
    for b in closure_basis(n, level):
        words += [w ^ b for w in words]
    return sorted(words)
