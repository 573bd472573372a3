"""The recursive construction engine.

A code is produced by one complete assignment tree: for every level
t = 2..m-1 and every suffix of seed choices above it, one local
automorphism acting on the level-(t-1) part, plus a single top-level
isometry.  Level t of the recursion unions the shifted images of its
children over the level-t seed words; the leaves are the level-1 seed set.

Three validation modes:

* ``la1`` - assignments are arbitrary neighborhood-stabilizer elements;
* ``la2`` - assignments are canonical coset representatives;
* ``la3`` - additionally every per-suffix collection of representatives is
  nondegenerate, which is what makes distinct trees give distinct codes.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from random import Random
from typing import Iterator, Union

import numpy as np

from .components import is_degenerate
from .isometries import (
    CosetRep,
    Isometry,
    in_neighborhood_stabilizer,
    random_stabilizer_element,
    realize,
    sample_rep,
    validate_rep,
)
from .scaffold import seed_count, seed_words
from .words import exponent

MODES = ("la1", "la2", "la3")
REJECTION_CAP = 10_000

Assignment = Union[Isometry, CosetRep]
TreeKey = tuple[int, tuple[int, ...]]


class InvalidTreeError(ValueError):
    pass


@dataclass
class AssignmentTree:
    """Complete indexed family of local automorphisms for one construction run.

    ``assignments`` maps (level, path) to the local automorphism used when
    assembling that level; ``path`` lists the seed indices (own level
    first) up to the top, and is empty for the single top-level entry.
    ``la1`` trees hold raw isometries, ``la2``/``la3`` trees hold coset
    representatives.
    """

    n: int
    mode: str
    assignments: dict[TreeKey, Assignment] = field(default_factory=dict)

    def isometry_at(self, key: TreeKey) -> Isometry:
        entry = self.assignments[key]
        return entry if isinstance(entry, Isometry) else realize(entry)


def tree_keys(n: int) -> list[TreeKey]:
    """Every (level, path) an assignment tree must fill, in canonical order."""
    m = exponent(n)
    keys: list[TreeKey] = []
    counts = {t: seed_count(n, t) for t in range(1, m)}

    def suffixes(t: int) -> list[tuple[int, ...]]:
        out: list[tuple[int, ...]] = [()]
        for lev in range(m - 1, t - 1, -1):
            out = [(i,) + suf for suf in out for i in range(counts[lev])]
        # ordering: lexicographic by path
        return sorted(out)

    for t in range(2, m):
        keys.extend((t, (i,) + suf) for suf in suffixes(t + 1) for i in range(counts[t]))
    keys.append((m, ()))
    return sorted(keys)


def identity_tree(n: int, mode: str = "la2") -> AssignmentTree:
    """All-identity tree; with representatives it rebuilds the Hamming code."""
    from .isometries import identity_rep

    m = exponent(n)
    tree = AssignmentTree(n, mode)
    for t, path in tree_keys(n):
        if mode == "la1":
            tree.assignments[(t, path)] = Isometry.identity(n)
        else:
            tree.assignments[(t, path)] = identity_rep(n, t - 1)
    return tree


def validate_tree(tree: AssignmentTree) -> str | None:
    """None if the tree is valid for its mode, else the first violation."""
    if tree.mode not in MODES:
        return f"unknown mode {tree.mode!r}"
    m = exponent(tree.n)
    required = tree_keys(tree.n)
    have = set(tree.assignments)
    for key in required:
        if key not in have:
            return f"missing assignment t={key[0]} path={key[1]}"
    extra = have - set(required)
    if extra:
        t, path = min(extra)
        return f"unexpected assignment t={t} path={path}"
    for t, path in required:
        entry = tree.assignments[(t, path)]
        if tree.mode == "la1":
            if not isinstance(entry, Isometry):
                return f"t={t} path={path}: la1 trees need raw isometries"
            if entry.n != tree.n:
                return f"t={t} path={path}: wrong word length"
            if not in_neighborhood_stabilizer(entry, t - 1):
                return f"t={t} path={path}: not a level-{t - 1} local automorphism"
        else:
            if not isinstance(entry, CosetRep):
                return f"t={t} path={path}: {tree.mode} trees need representatives"
            if entry.n != tree.n or entry.level != t - 1:
                return f"t={t} path={path}: representative of the wrong level"
            try:
                validate_rep(entry)
            except ValueError as exc:
                return f"t={t} path={path}: {exc}"
    if tree.mode == "la3":
        for t in range(2, m):
            index = seed_words(tree.n, t)
            for suffix in sorted({path[1:] for lv, path in required if lv == t}):
                members = [
                    realize(tree.assignments[(t, (i,) + suffix)])
                    for i in range(len(index))
                ]
                if is_degenerate(members, index):
                    return f"degenerate collection at t={t} suffix={suffix}"
    return None


def _require_valid(tree: AssignmentTree) -> None:
    problem = validate_tree(tree)
    if problem is not None:
        raise InvalidTreeError(problem)


def build_code(tree: AssignmentTree) -> list[int]:
    """Evaluate the tree into a sorted codeword list (materialized sizes only)."""
    _require_valid(tree)
    n = tree.n
    m = exponent(n)
    if n > 16:
        raise ValueError("materialized build is n<=16 scale; use build_code_array")

    def level_set(t: int, path: tuple[int, ...]) -> list[int]:
        if t == 1:
            return seed_words(n, 1)
        out: list[int] = []
        for i, r in enumerate(seed_words(n, t)):
            g = tree.isometry_at((t, (i,) + path))
            out.extend(r ^ g.apply(w) for w in level_set(t - 1, (i,) + path))
        return out

    top = tree.isometry_at((m, ()))
    code = sorted(top.apply(w) for w in level_set(m - 1, ()))
    expected = 1 << (n - m - 1)
    if len(code) != expected or len(set(code)) != expected:
        raise AssertionError("construction did not produce a full distinct code")
    return code


def _leaf_isometries(tree: AssignmentTree) -> Iterator[Isometry]:
    """Composed isometry mapping the leaf seed set to the code, per leaf path."""
    n = tree.n
    m = exponent(n)
    seeds = {t: seed_words(n, t) for t in range(2, m)}

    def walk(t: int, path: tuple[int, ...], acc: Isometry) -> Iterator[Isometry]:
        if t == 1:
            yield acc
            return
        for i, r in enumerate(seeds[t]):
            g = tree.isometry_at((t, (i,) + path))
            step = acc.compose(Isometry.translation(n, r)).compose(g)
            yield from walk(t - 1, (i,) + path, step)

    yield from walk(m - 1, (), tree.isometry_at((m, ())))


def _np_tables(g: Isometry, dtype) -> tuple[list[np.ndarray], int]:
    from .isometries import _perm_tables

    return [np.array(t, dtype=dtype) for t in _perm_tables(g.perm, g.n)], g.shift


def build_code_array(tree: AssignmentTree) -> np.ndarray:
    """Evaluate the tree into a sorted array of codewords (streaming build)."""
    _require_valid(tree)
    n = tree.n
    if n > 64:
        raise ValueError("word length above 64 is unsupported")
    dtype = np.uint32 if n <= 32 else np.uint64
    leaves = np.array(seed_words(n, 1), dtype=dtype)
    chunks = []
    for g in _leaf_isometries(tree):
        tables, shift = _np_tables(g, dtype)
        out = np.full(leaves.shape, shift, dtype=dtype)
        for i, table in enumerate(tables):
            out ^= table[(leaves >> (8 * i)) & 0xFF]
        chunks.append(out)
    code = np.concatenate(chunks)
    code.sort(kind="stable")
    if code.size != 1 << (n - exponent(n) - 1) or np.any(code[1:] == code[:-1]):
        raise AssertionError("construction did not produce a full distinct code")
    return code


def _node_rng(n: int, seed: int, tag: str, t: int, path: tuple[int, ...]) -> Random:
    label = f"{n}|{seed}|{tag}|{t}|{','.join(map(str, path))}"
    digest = hashlib.sha256(label.encode()).digest()
    return Random(int.from_bytes(digest, "big"))


def sample_tree(n: int, seed: int, mode: str = "la3") -> AssignmentTree:
    """Deterministic random tree for (n, seed, mode).

    Randomness is derived per node (per collection for ``la3``), so the
    result does not depend on evaluation order.  ``la3`` collections are
    rejection-sampled until nondegenerate.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    m = exponent(n)
    tree = AssignmentTree(n, mode)
    keys = tree_keys(n)
    if mode in ("la1", "la2"):
        for t, path in keys:
            rng = _node_rng(n, seed, mode, t, path)
            if mode == "la1":
                tree.assignments[(t, path)] = random_stabilizer_element(n, t - 1, rng)
            else:
                tree.assignments[(t, path)] = sample_rep(n, t - 1, rng)
        return tree
    rng = _node_rng(n, seed, mode, m, ())
    tree.assignments[(m, ())] = sample_rep(n, m - 1, rng)
    for t in range(2, m):
        index = seed_words(n, t)
        for suffix in sorted({path[1:] for lv, path in keys if lv == t}):
            rng = _node_rng(n, seed, mode + "-collection", t, suffix)
            for attempt in range(REJECTION_CAP):
                reps = [sample_rep(n, t - 1, rng) for _ in index]
                if not is_degenerate([realize(r) for r in reps], index):
                    break
            else:
                raise RuntimeError(
                    f"nondegenerate collection not found in {REJECTION_CAP} tries"
                )
            for i, rep in enumerate(reps):
                tree.assignments[(t, (i,) + suffix)] = rep
    return tree


def puncture(code, n: int, check: bool = True) -> list[int]:
    """Delete the last coordinate of every codeword, giving a length n-1 code."""
    from .analysis import verify_extended_perfect

    words = sorted(code)
    if check:
        report = verify_extended_perfect(words, n)
        if not report.extended_perfect:
            raise ValueError("input is not an extended 1-perfect code")
    out = sorted(w >> 1 for w in words)
    if len(set(out)) != len(words):
        raise AssertionError("coordinate deletion collided")
    return out
