"""Isometries of the binary Hamming space and the canonical coset transversals.

An isometry is a coordinate permutation followed by a translation; the
(perm, shift) normal form is unique.  Two nested stabilizer groups matter
per level t:

* the neighborhood stabilizer: isometries preserving the neighborhood of
  the level-t code (structurally: column-respecting permutations of the
  level-t array plus closure translations; at the top level everything
  with an even shift);
* the partition stabilizer: the subgroup also preserving the splitting of
  that neighborhood into its per-seed pieces (structurally: within-column
  row maps preserve or swap the even/odd row-index classes, and the shift
  lies in the bold span; at the top level the permutation respects the
  next-to-top column structure and the shift folds to all-0 or all-1).

A coset of the partition stabilizer inside the neighborhood stabilizer is
canonically described by a `CosetRep`: unordered half-splits of the rows
of every column (or, at the top level, an unordered 4-block partition of
all coordinates) plus a translation class.  `realize` turns the datum into
a concrete isometry, `factor` splits any stabilizer element into
(representative, partition-stabilizer remainder).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from random import Random
from typing import Iterator

from .scaffold import _check_level, in_bold_span, in_level_closure
from .words import array_shape, exponent, parity, word_from_support

ENUMERATION_CAP = 50_000_000


@lru_cache(maxsize=4096)
def _perm_tables(perm: tuple[int, ...], n: int) -> tuple[tuple[int, ...], ...]:
    # byte -> image word, one table per 8-bit chunk counted from the LSB
    nchunks = (n + 7) // 8
    tables = []
    for chunk in range(nchunks):
        table = []
        for byte in range(256):
            img = 0
            for b in range(8):
                pos = chunk * 8 + b
                if pos < n and (byte >> b) & 1:
                    img |= 1 << (n - 1 - perm[n - 1 - pos])
            table.append(img)
        tables.append(tuple(table))
    return tuple(tables)


@dataclass(frozen=True)
class Isometry:
    """Distance-preserving map w -> shift + perm(w) in normal form.

    perm moves the bit at coordinate i to coordinate perm[i].
    """

    n: int
    perm: tuple[int, ...]
    shift: int

    def __post_init__(self):
        if len(self.perm) != self.n or set(self.perm) != set(range(self.n)):
            raise ValueError("perm is not a permutation of 0..n-1")
        if self.shift >> self.n:
            raise ValueError("shift does not fit the word length")

    @classmethod
    def identity(cls, n: int) -> "Isometry":
        return cls(n, tuple(range(n)), 0)

    @classmethod
    def translation(cls, n: int, v: int) -> "Isometry":
        return cls(n, tuple(range(n)), v)

    @classmethod
    def from_permutation(cls, n: int, perm) -> "Isometry":
        return cls(n, tuple(perm), 0)

    @property
    def is_translation(self) -> bool:
        return self.perm == tuple(range(self.n))

    def permute(self, w: int) -> int:
        """Apply only the permutation part."""
        out = 0
        x = w
        for table in _perm_tables(self.perm, self.n):
            if not x:
                break
            out |= table[x & 0xFF]
            x >>= 8
        return out

    def apply(self, w: int) -> int:
        return self.shift ^ self.permute(w)

    def apply_set(self, words) -> set[int]:
        return {self.apply(w) for w in words}

    def compose(self, other: "Isometry") -> "Isometry":
        """self after other: apply(other.apply(w))."""
        if self.n != other.n:
            raise ValueError("length mismatch")
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        return Isometry(self.n, perm, self.shift ^ self.permute(other.shift))

    def inverse(self) -> "Isometry":
        inv = [0] * self.n
        for i, j in enumerate(self.perm):
            inv[j] = i
        g = Isometry(self.n, tuple(inv), 0)
        return Isometry(self.n, g.perm, g.permute(self.shift))


def column_action(perm: tuple[int, ...], n: int, level: int) -> list[int] | None:
    """Column image per column if perm respects level-t columns, else None."""
    rows, cols = array_shape(n, level)
    out = []
    for j in range(cols):
        images = {perm[i * cols + j] % cols for i in range(rows)}
        if len(images) != 1:
            return None
        out.append(images.pop())
    if len(set(out)) != cols:
        return None
    return out


def _row_action(perm: tuple[int, ...], n: int, level: int, j: int) -> list[int]:
    rows, cols = array_shape(n, level)
    return [perm[i * cols + j] // cols for i in range(rows)]


def in_neighborhood_stabilizer(g: Isometry, level: int) -> bool:
    """Structural membership test for the level-t neighborhood stabilizer."""
    m = _check_level(g.n, level)
    if level == m - 1:
        return parity(g.shift) == 0
    if column_action(g.perm, g.n, level) is None:
        return False
    return in_level_closure(g.shift, g.n, level)


def in_partition_stabilizer(g: Isometry, level: int) -> bool:
    """Structural membership test for the level-t partition stabilizer."""
    m = _check_level(g.n, level)
    n = g.n
    if level == m - 1:
        if column_action(g.perm, n, m - 2) is None:
            return False
        from .words import parity_check

        fold = parity_check(g.shift, n, m - 2)
        return fold == 0 or fold == (1 << (n >> (m - 2))) - 1
    cols = n >> level
    rows = 1 << level
    if column_action(g.perm, n, level) is None:
        return False
    for j in range(cols):
        row_map = _row_action(g.perm, n, level, j)
        flips = {(i ^ row_map[i]) & 1 for i in range(rows)}
        if len(flips) != 1:
            return False
    return in_bold_span(g.shift, n, level)


def translation_generator(n: int, level: int) -> int:
    """Shift generating the nontrivial translation class below the top level.

    Support {0, 2^(m-t)}: rows 0 and 1 of column 0.  Lies in the level
    closure but not in the bold span.
    """
    _check_level(n, level)
    return word_from_support(n, (0, n >> level))


def top_shift_words(n: int) -> tuple[int, int, int, int]:
    """The four translation-class anchors at the top level."""
    e1 = word_from_support(n, (0, 1))
    e2 = word_from_support(n, (0, 2))
    return (0, e1, e2, e1 ^ e2)


@dataclass(frozen=True)
class CosetRep:
    """Canonical datum for one coset of the partition stabilizer.

    Below the top level, ``blocks[j]`` is the sorted half of the row
    indices of column j that contains row 0 (the unordered half-split of
    that column) and ``shift_class`` is 0 or 1.  At the top level,
    ``blocks`` is the unordered partition of all coordinates into four
    equal blocks, sorted internally and ordered by minimum element, and
    ``shift_class`` is 0..3.

    Enumeration and sampling produce canonical data; anything read from
    the outside goes through `validate_rep`.
    """

    n: int
    level: int
    blocks: tuple[tuple[int, ...], ...]
    shift_class: int


def validate_rep(rep: CosetRep) -> None:
    """Raise on malformed partition data."""
    m = _check_level(rep.n, rep.level)
    if rep.level == m - 1:
        q = rep.n // 4
        if len(rep.blocks) != 4 or any(len(b) != q for b in rep.blocks):
            raise ValueError("need 4 coordinate blocks of size n/4")
        flat = sorted(k for b in rep.blocks for k in b)
        if flat != list(range(rep.n)):
            raise ValueError("blocks do not tile the coordinate set")
        if [min(b) for b in rep.blocks] != sorted(min(b) for b in rep.blocks):
            raise ValueError("blocks not ordered by minimum element")
        if any(tuple(sorted(b)) != b for b in rep.blocks):
            raise ValueError("blocks not internally sorted")
        if not 0 <= rep.shift_class < 4:
            raise ValueError("shift class out of range 0..3")
    else:
        rows, cols = array_shape(rep.n, rep.level)
        if len(rep.blocks) != cols:
            raise ValueError(f"need one row block per column ({cols})")
        for b in rep.blocks:
            if len(b) != rows // 2 or b[0] != 0:
                raise ValueError("row block must contain row 0, half-sized")
            if tuple(sorted(set(b))) != b or max(b) >= rows:
                raise ValueError(f"malformed row block {b}")
        if not 0 <= rep.shift_class < 2:
            raise ValueError("shift class out of range 0..1")


def identity_rep(n: int, level: int) -> CosetRep:
    """The representative realizing the identity isometry."""
    m = exponent(n)
    if level == m - 1:
        cols = n >> (m - 2)
        blocks = tuple(tuple(range(c, n, cols)) for c in range(cols))
        return CosetRep(n, level, blocks, 0)
    rows, cols = array_shape(n, level)
    evens = tuple(range(0, rows, 2))
    return CosetRep(n, level, (evens,) * cols, 0)


def realize(rep: CosetRep) -> Isometry:
    """Canonical isometry of a representative.

    Below the top level the permutation acts within each column: even rows
    (ascending) map onto the stored block (ascending), odd rows onto its
    complement (ascending); the result is perm o translate, so the normal
    form shift is perm(b) where b is 0 or the translation generator.  At
    the top level the next-to-top columns map (ascending) onto the blocks
    (ascending) and b is the shift-class anchor.
    """
    validate_rep(rep)
    n, level = rep.n, rep.level
    m = exponent(n)
    perm = [0] * n
    if level == m - 1:
        cols = n >> (m - 2)
        for cidx, block in enumerate(rep.blocks):
            for src, dst in zip(range(cidx, n, cols), block):
                perm[src] = dst
        b = top_shift_words(n)[rep.shift_class]
    else:
        rows, cols = array_shape(n, level)
        for j, block in enumerate(rep.blocks):
            comp = tuple(sorted(set(range(rows)) - set(block)))
            for i, r in zip(range(0, rows, 2), block):
                perm[i * cols + j] = r * cols + j
            for i, r in zip(range(1, rows, 2), comp):
                perm[i * cols + j] = r * cols + j
        b = translation_generator(n, level) if rep.shift_class else 0
    g = Isometry(n, tuple(perm), 0)
    return Isometry(n, g.perm, g.permute(b))


def coset_count(n: int, level: int) -> int:
    """Exact number of cosets (= representatives) at the given level."""
    m = _check_level(n, level)
    if level == m - 1:
        return factorial(n) // (6 * factorial(n // 4) ** 4)
    rows = 1 << level
    return 2 * (comb(rows, rows // 2) // 2) ** (n >> level)


def enumerate_reps(n: int, level: int, cap: int = ENUMERATION_CAP) -> Iterator[CosetRep]:
    """Yield every representative exactly once; refuses oversized levels."""
    m = _check_level(n, level)
    total = coset_count(n, level)
    if total > cap:
        raise ValueError(f"{total} representatives exceed enumeration cap {cap}")
    if level == m - 1:
        yield from _enumerate_top_reps(n)
        return
    rows, cols = array_shape(n, level)
    halves = [
        (0,) + rest for rest in itertools.combinations(range(1, rows), rows // 2 - 1)
    ]
    for blocks in itertools.product(halves, repeat=cols):
        for shift_class in (0, 1):
            yield CosetRep(n, level, blocks, shift_class)


def _enumerate_top_reps(n: int) -> Iterator[CosetRep]:
    level = exponent(n) - 1
    q = n // 4
    classes = (0, 1, 2, 3)
    coords = tuple(range(n))
    for rest0 in itertools.combinations(coords[1:], q - 1):
        block0 = (0,) + rest0
        left1 = tuple(k for k in coords[1:] if k not in rest0)
        for rest1 in itertools.combinations(left1[1:], q - 1):
            block1 = (left1[0],) + rest1
            left2 = tuple(k for k in left1[1:] if k not in rest1)
            for rest2 in itertools.combinations(left2[1:], q - 1):
                block2 = (left2[0],) + rest2
                block3 = tuple(k for k in left2[1:] if k not in rest2)
                blocks = (block0, block1, block2, block3)
                for shift_class in classes:
                    yield CosetRep(n, level, blocks, shift_class)


def sample_rep(n: int, level: int, rng: Random) -> CosetRep:
    """Uniform representative."""
    m = _check_level(n, level)
    if level == m - 1:
        coords = list(range(n))
        rng.shuffle(coords)
        q = n // 4
        blocks = sorted(
            (tuple(sorted(coords[i * q : (i + 1) * q])) for i in range(4)),
            key=lambda b: b[0],
        )
        return CosetRep(n, level, tuple(blocks), rng.randrange(4))
    rows, cols = array_shape(n, level)
    blocks = tuple(
        tuple(sorted([0] + rng.sample(range(1, rows), rows // 2 - 1)))
        for _ in range(cols)
    )
    return CosetRep(n, level, blocks, rng.randrange(2))


def factor(g: Isometry, level: int) -> tuple[CosetRep, Isometry]:
    """Split a neighborhood-stabilizer element as realize(rep) o remainder.

    The representative datum is read off the permutation (block images of
    the even/odd row classes per target column, or of the next-to-top
    columns); the translation class is inferred from the residual shift.
    """
    if not in_neighborhood_stabilizer(g, level):
        raise ValueError("not a neighborhood-stabilizer element")
    n = g.n
    m = exponent(n)
    if level == m - 1:
        cols = n >> (m - 2)
        images = [
            tuple(sorted(g.perm[k] for k in range(c, n, cols))) for c in range(cols)
        ]
        blocks = tuple(sorted(images, key=lambda b: b[0]))
        base = realize(CosetRep(n, level, blocks, 0))
        residual = base.inverse().compose(g).shift
        from .words import parity_check

        fold = parity_check(residual, n, m - 2)
        full = (1 << (n >> (m - 2))) - 1
        anchors = top_shift_words(n)
        for shift_class, anchor in enumerate(anchors):
            cls = parity_check(anchor, n, m - 2)
            if fold == cls or fold == cls ^ full:
                rep = CosetRep(n, level, blocks, shift_class)
                break
        else:  # pragma: no cover - fold of an even word is always classified
            raise AssertionError("unclassifiable translation fold")
    else:
        rows, cols = array_shape(n, level)
        col_map = column_action(g.perm, n, level)
        assert col_map is not None
        parts: list[tuple[int, ...] | None] = [None] * cols
        for j in range(cols):
            row_map = _row_action(g.perm, n, level, j)
            even_img = sorted(row_map[0::2])
            odd_img = sorted(row_map[1::2])
            parts[col_map[j]] = tuple(even_img if 0 in even_img else odd_img)
        blocks = tuple(parts)  # type: ignore[arg-type]
        base = realize(CosetRep(n, level, blocks, 0))
        residual = base.inverse().compose(g).shift
        if in_bold_span(residual, n, level):
            rep = CosetRep(n, level, blocks, 0)
        else:
            gen = translation_generator(n, level)
            if not in_bold_span(residual ^ gen, n, level):  # pragma: no cover
                raise AssertionError("residual shift in neither translation class")
            rep = CosetRep(n, level, blocks, 1)
    d = realize(rep)
    h = d.inverse().compose(g)
    assert in_partition_stabilizer(h, level)
    return rep, h


def random_stabilizer_element(n: int, level: int, rng: Random) -> Isometry:
    """Uniform element of the level-t neighborhood stabilizer.

    Built from the structure: a column permutation, independent row
    permutations per column, and a uniform closure shift (at the top
    level: any permutation and a uniform even shift).
    """
    m = _check_level(n, level)
    if level == m - 1:
        perm = list(range(n))
        rng.shuffle(perm)
        shift = rng.getrandbits(n - 1) << 1
        if parity(shift):
            shift |= 1
        return Isometry(n, tuple(perm), shift)
    rows, cols = array_shape(n, level)
    col_perm = list(range(cols))
    rng.shuffle(col_perm)
    perm = [0] * n
    for j in range(cols):
        row_perm = list(range(rows))
        rng.shuffle(row_perm)
        for i in range(rows):
            perm[i * cols + j] = row_perm[i] * cols + col_perm[j]
    # uniform fold-kernel shift: free rows 1.., top row balances them
    shift = 0
    top = 0
    for _ in range(rows - 1):
        row = rng.getrandbits(cols)
        top ^= row
        shift = (shift << cols) | row
    shift |= top << (cols * (rows - 1))
    return Isometry(n, tuple(perm), shift)


def rep_to_string(rep: CosetRep) -> str:
    """Serialize: D<t>:cols=<block;...>:b=<k> or D<t>:blocks=<b|b|b|b>:b=<k>."""
    m = exponent(rep.n)
    if rep.level == m - 1:
        body = "|".join(",".join(str(k) for k in b) for b in rep.blocks)
        return f"D{rep.level}:blocks={body}:b={rep.shift_class}"
    body = ";".join(",".join(str(r) for r in b) for b in rep.blocks)
    return f"D{rep.level}:cols={body}:b={rep.shift_class}"


def rep_from_string(s: str, n: int) -> CosetRep:
    try:
        head, body, tail = s.split(":")
        level = int(head[1:])
        if head[0] != "D":
            raise ValueError
        key, payload = body.split("=", 1)
        shift_class = int(tail.removeprefix("b="))
        if key == "blocks":
            blocks = tuple(
                tuple(int(k) for k in b.split(",")) for b in payload.split("|")
            )
        elif key == "cols":
            blocks = tuple(
                tuple(int(k) for k in b.split(",")) for b in payload.split(";")
            )
        else:
            raise ValueError
    except (ValueError, IndexError) as exc:
        raise ValueError(f"malformed representative {s!r}") from exc
    rep = CosetRep(n, level, blocks, shift_class)
    validate_rep(rep)
    return rep
