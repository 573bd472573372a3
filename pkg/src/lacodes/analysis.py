"""Verification and invariants of generated codes.

Extended-perfectness is checked by marking, for every codeword, its n
neighbors in a bitmap over the odd-weight words (indexed by the word with
the last coordinate dropped).  With ``issued = n * |C|`` marks and ``hit``
distinct marked slots:

* neighborhoods are pairwise disjoint  iff  hit == issued,
* they cover all odd words            iff  hit == 2^(n-1).

Large lengths reuse the same argument over range-partitioned bitmaps so
the working set stays bounded (the length-32 verification touches a
2^31-slot space through 128 MiB windows).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .components import AffineSubspace, affine_span
from .words import exponent

# odd-word bitmap kept as one bool array up to this length
_SMALL_N = 16
_RANGE_BITS = 27  # 2^27-slot bool windows (128 MiB) for the big path


@dataclass
class CodeReport:
    """Flat verification record for one code."""

    n: int
    cardinality: int
    cardinality_ok: bool
    min_distance_at_least_4: bool
    omega_disjoint: bool
    omega_covers_odd: bool
    rank: int | None = None
    rank_deficiency: int | None = None
    kernel_dimension: int | None = None

    @property
    def extended_perfect(self) -> bool:
        return self.cardinality_ok and self.omega_disjoint and self.omega_covers_odd

    def render(self) -> str:
        lines = [
            f"n={self.n}",
            f"cardinality={self.cardinality}",
            f"cardinality_ok={int(self.cardinality_ok)}",
            f"min_distance_at_least_4={int(self.min_distance_at_least_4)}",
            f"omega_disjoint={int(self.omega_disjoint)}",
            f"omega_covers_odd={int(self.omega_covers_odd)}",
            f"extended_perfect={int(self.extended_perfect)}",
        ]
        if self.rank is not None:
            lines.append(f"rank={self.rank}")
            lines.append(f"rank_deficiency={self.rank_deficiency}")
        if self.kernel_dimension is not None:
            lines.append(f"kernel_dimension={self.kernel_dimension}")
        return "\n".join(lines)


def _as_array(code, n: int) -> np.ndarray:
    dtype = np.uint32 if n <= 32 else np.uint64
    if isinstance(code, np.ndarray):
        return code.astype(dtype, copy=False)
    arr = np.fromiter((int(w) for w in code), dtype=dtype)
    return arr


def _parity_bits(arr: np.ndarray, n: int) -> np.ndarray:
    par = arr.copy()
    s = 1
    while s < n:
        par ^= par >> par.dtype.type(s)
        s <<= 1
    return par & par.dtype.type(1)


def _coverage_counts(code: np.ndarray, n: int) -> tuple[int, int]:
    """(issued marks, distinct odd words hit) for the neighbor stream."""
    issued = int(code.size) * n
    slots = 1 << (n - 1)
    if n <= _SMALL_N:
        hit = np.zeros(slots, dtype=bool)
        for pos in range(n):
            hit[(code ^ code.dtype.type(1 << pos)) >> 1] = True
        return issued, int(np.count_nonzero(hit))
    # big path: window the slot space; the word interval feeding a window is
    # a power-of-two aligned block, so its xor-image is again one aligned
    # block and the contributing codewords are one slice of the sorted array
    code = np.sort(code)
    hit_total = 0
    size = min(1 << _RANGE_BITS, slots)
    for base in range(0, slots, size):
        lo = 2 * base
        span = 2 * size
        window = np.zeros(size, dtype=bool)
        for pos in range(n):
            bit = 1 << pos
            start = lo if bit < span else lo ^ bit
            # dtype-matched needles keep searchsorted on the binary-search path
            i0 = np.searchsorted(code, code.dtype.type(start), side="left")
            i1 = np.searchsorted(code, code.dtype.type(start + span - 1), side="right")
            if i0 < i1:
                vals = (code[i0:i1] ^ code.dtype.type(bit)) >> 1
                window[vals - base] = True
        hit_total += int(np.count_nonzero(window))
    return issued, hit_total


def verify_extended_perfect(code, n: int) -> CodeReport:
    """Exact perfectness verdict; even-weight input enforced."""
    m = exponent(n)
    arr = _as_array(code, n)
    if arr.size == 0:
        raise ValueError("empty code")
    if np.any(_parity_bits(arr, n)):
        raise ValueError("odd-parity codeword present")
    expected = 1 << (n - m - 1)
    issued, hit = _coverage_counts(arr, n)
    disjoint = hit == issued
    covers = hit == (1 << (n - 1))
    return CodeReport(
        n=n,
        cardinality=int(arr.size),
        cardinality_ok=int(arr.size) == expected,
        min_distance_at_least_4=disjoint,
        omega_disjoint=disjoint,
        omega_covers_odd=covers,
    )


def verify_perfect(code, length: int) -> bool:
    """Is every length-`length` word within distance 1 of exactly one codeword?"""
    dtype = np.uint32 if length < 32 else np.uint64
    arr = _as_array(code, length).astype(dtype, copy=False)
    issued = int(arr.size) * (length + 1)
    slots = 1 << length
    if issued != slots:
        return False
    if slots <= (1 << _RANGE_BITS):
        hit = np.zeros(slots, dtype=bool)
        hit[arr] = True
        for pos in range(length):
            hit[arr ^ dtype(1 << pos)] = True
        return int(np.count_nonzero(hit)) == slots
    arr = np.sort(arr)
    hit_total = 0
    size = min(1 << _RANGE_BITS, slots)
    for base in range(0, slots, size):
        window = np.zeros(size, dtype=bool)
        for pos in range(-1, length):
            bit = 0 if pos < 0 else 1 << pos
            start = base if bit < size else base ^ bit
            i0 = np.searchsorted(arr, dtype(start), side="left")
            i1 = np.searchsorted(arr, dtype(start + size - 1), side="right")
            if i0 < i1:
                vals = arr[i0:i1] ^ dtype(bit)
                window[vals - base] = True
        hit_total += int(np.count_nonzero(window))
    return hit_total == slots


def gf2_rank(vectors: Iterable[int]) -> int:
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
    return len(basis)


def rank(code, n: int) -> int:
    """Dimension of the affine span."""
    if isinstance(code, np.ndarray):
        return _rank_array(code)
    words = list(code)
    if not words:
        raise ValueError("empty code")
    c0 = int(words[0])
    return gf2_rank(int(w) ^ c0 for w in words)


def _rank_array(code: np.ndarray) -> int:
    if code.size == 0:
        raise ValueError("empty code")
    basis: dict[int, int] = {}
    offset = np.uint64(int(code[0]))
    one = np.uint64(1)
    for start in range(0, code.size, 1 << 20):
        chunk = code[start : start + (1 << 20)].astype(np.uint64) ^ offset
        while True:
            for p in sorted(basis, reverse=True):
                mask = ((chunk >> np.uint64(p)) & one).astype(bool)
                chunk[mask] ^= np.uint64(basis[p])
            nz = chunk[chunk != 0]
            if nz.size == 0:
                break
            v = int(nz[0])
            basis[v.bit_length() - 1] = v
    return len(basis)


def rank_deficiency(code, n: int) -> int:
    return (n - 1) - rank(code, n)


def _member_mask(sorted_arr: np.ndarray, values: np.ndarray) -> np.ndarray:
    # chunked so the int64 position arrays stay small
    out = np.empty(values.shape, dtype=bool)
    step = 1 << 22
    for lo in range(0, values.size, step):
        chunk = values[lo : lo + step]
        pos = np.searchsorted(sorted_arr, chunk)
        pos[pos == sorted_arr.size] = 0
        out[lo : lo + step] = sorted_arr[pos] == chunk
    return out


def kernel(code, n: int) -> AffineSubspace:
    """All translations fixing the code setwise (a linear subspace).

    Candidates are the differences to one fixed codeword; random probes
    thin them before the exact all-shifts test, which keeps the exact test
    to a handful of survivors.
    """
    arr = np.sort(_as_array(code, n))
    c0 = arr[0]
    candidates = arr ^ c0
    probe_rng = np.random.default_rng(0)
    for i in probe_rng.integers(0, arr.size, size=12):
        probe = arr[int(i)]
        candidates = candidates[_member_mask(arr, candidates ^ probe)]
        if candidates.size <= 1:
            break
    periods = [
        int(k) for k in candidates if bool(np.all(_member_mask(arr, arr ^ k)))
    ]
    span = affine_span(periods, n)
    assert span.offset == 0 and span.size == len(periods)
    return span


def kernel_dimension(code, n: int) -> int:
    return kernel(code, n).dimension


def distinct(code_a, code_b) -> bool:
    if isinstance(code_a, np.ndarray) and isinstance(code_b, np.ndarray):
        return not np.array_equal(np.sort(code_a), np.sort(code_b))
    return set(int(w) for w in code_a) != set(int(w) for w in code_b)


def analyze(code, n: int, with_kernel: bool | None = None) -> CodeReport:
    """Full report: perfectness plus rank, deficiency and kernel dimension."""
    arr = _as_array(code, n)
    report = verify_extended_perfect(arr, n)
    report.rank = rank(arr, n)
    report.rank_deficiency = (n - 1) - report.rank
    if with_kernel is None:
        with_kernel = n <= _SMALL_N
    if with_kernel:
        report.kernel_dimension = kernel_dimension(arr, n)
    return report


def weight_distribution(code, n: int) -> dict[int, int]:
    """Codeword count per Hamming weight."""
    out: dict[int, int] = {}
    for w in code:
        wt = int(w).bit_count()
        out[wt] = out.get(wt, 0) + 1
    return dict(sorted(out.items()))
