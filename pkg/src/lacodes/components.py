"""Predicates on word sets: components, affine spans, boldness, degeneracy."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .isometries import Isometry
from .scaffold import (
    _check_level,
    bold_span_basis,
    bold_span_dimension,
    in_bold_span,
    in_level_neighborhood,
    level_code_size,
    level_neighborhood_size,
)
from .words import exponent, parity


@dataclass(frozen=True)
class AffineSubspace:
    """offset + rowspace(basis); basis echelonized, offset the minimum element."""

    n: int
    offset: int
    basis: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return 1 << len(self.basis)

    def contains(self, w: int) -> bool:
        x = w ^ self.offset
        for b in self.basis:
            if x.bit_length() == b.bit_length():
                x ^= b
        return x == 0

    def words(self) -> list[int]:
        if self.dimension > 24:
            raise ValueError("subspace too large to enumerate")
        out = [self.offset]
        for b in self.basis:
            out += [w ^ b for w in out]
        return sorted(out)

    def translate(self, v: int) -> "AffineSubspace":
        return affine_span_from_basis(self.n, self.offset ^ v, self.basis)


def _echelonize(vectors) -> tuple[int, ...]:
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
    # reduce above the pivots for a canonical form
    pivots = sorted(basis, reverse=True)
    for idx, p in enumerate(pivots):
        for q in pivots[:idx]:
            if (basis[q] >> p) & 1:
                basis[q] ^= basis[p]
    return tuple(basis[p] for p in pivots)


def affine_span_from_basis(n: int, offset: int, basis) -> AffineSubspace:
    basis = _echelonize(basis)
    # canonical offset: reduce, giving the minimum element of the coset
    x = offset
    for b in basis:
        if (x >> (b.bit_length() - 1)) & 1:
            x ^= b
    return AffineSubspace(n, x, basis)


def affine_span(words, n: int) -> AffineSubspace:
    """Smallest affine subspace containing the given nonempty set."""
    it = iter(words)
    try:
        first = next(it)
    except StopIteration:
        raise ValueError("affine span of an empty set") from None
    return affine_span_from_basis(n, first, (w ^ first for w in it))


def is_component(words, n: int, order: int) -> bool:
    """Cardinality and neighborhood of the level-`order` code, exactly."""
    _check_level(n, order)
    ws = set(words)
    for w in ws:
        if parity(w):
            raise ValueError(f"odd-parity member {w:#x}")
    if len(ws) != level_code_size(n, order):
        return False
    omega: set[int] = set()
    for w in ws:
        for pos in range(n):
            y = w ^ (1 << pos)
            if not in_level_neighborhood(y, n, order):
                return False
            omega.add(y)
    return len(omega) == level_neighborhood_size(n, order)


def is_shifted_component(words, n: int, order: int, shift: int) -> bool:
    """Component of the given order after translating back by `shift`.

    The shift must be supported on the first 2^(m-order) coordinates.
    Sets leaving the even-weight space are not shifted components.
    """
    _check_level(n, order)
    if shift & ((1 << (n - (n >> order))) - 1):
        raise ValueError("shift support exceeds the first 2^(m-t) coordinates")
    ws = set(words)
    if any(parity(w) for w in ws) or parity(shift):
        return False
    return is_component((w ^ shift for w in ws), n, order)


def is_bold(words, n: int, order: int) -> bool:
    """Does the component's affine span fill the whole bold span?

    Exact: checks the span dimension and that offset and every basis
    vector lie in the bold span (which is linear).
    """
    ws = set(words)
    if not is_component(ws, n, order):
        raise ValueError("not a component of the requested order")
    span = affine_span(ws, n)
    if span.dimension != bold_span_dimension(n, order):
        return False
    if not in_bold_span(span.offset, n, order):
        return False
    return all(in_bold_span(b, n, order) for b in span.basis)


def bold_span_subspace(n: int, level: int) -> AffineSubspace:
    """The level's bold span as an explicit subspace."""
    return AffineSubspace(n, 0, bold_span_basis(n, level))


def is_degenerate(members: Mapping[int, Isometry] | Sequence[Isometry], index_words: Sequence[int]) -> bool:
    """Is a collection of representatives degenerate over its index space?

    ``index_words`` enumerates a linear subspace L (first element may or
    may not be 0; 0 must be present).  Degenerate means: all members share
    one coordinate permutation and the map r -> shift_r extends affinely
    from a basis of L, i.e. shift over any combination equals the
    corresponding combination of basis shifts.
    """
    if isinstance(members, Mapping):
        table = dict(members)
    else:
        if len(members) != len(index_words):
            raise ValueError("one member per index word required")
        table = dict(zip(index_words, members))
    if set(table) != set(index_words):
        raise ValueError("members not indexed by the given subspace")
    if 0 not in table:
        raise ValueError("index space must contain the zero word")
    perms = {g.perm for g in table.values()}
    if len(perms) != 1:
        return False
    # greedy basis of L with reduction bookkeeping: echelon vector -> member word
    echelon: dict[int, tuple[int, int]] = {}  # pivot -> (vector, combo mask)
    order: list[int] = []
    for r in index_words:
        x, combo = r, 0
        while x:
            p = x.bit_length() - 1
            if p in echelon:
                vec, msk = echelon[p]
                x ^= vec
                combo ^= msk
            else:
                echelon[p] = (x, combo | (1 << len(order)))
                order.append(r)
                break
    v0 = table[0].shift
    for r in index_words:
        x, combo = r, 0
        while x:
            p = x.bit_length() - 1
            vec, msk = echelon[p]
            x ^= vec
            combo ^= msk
        predicted = v0
        for idx, base_word in enumerate(order):
            if (combo >> idx) & 1:
                predicted ^= table[base_word].shift ^ v0
        if predicted != table[r].shift:
            return False
    return True
