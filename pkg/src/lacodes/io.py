"""Line-oriented file formats for codes and assignment trees.

Code file::

    n=16 complete=1
    0000000011111111
    ...

one codeword per line as a bit string (coordinate 0 first), lines sorted
ascending as binary numbers, trailing newline.  ``complete=1`` asserts the
body holds the full code for its length.

Tree file::

    n=16
    mode=la3
    assign t=2 path=0,0 rep=D1:cols=0;0;0;0;0;0;0;0:b=1
    ...
    assign t=4 path=- rep=D3:blocks=...:b=2

one line per assignment, paths as comma-separated seed indices (own level
first), ``path=-`` for the top level.  ``la1`` trees serialize raw
isometries as ``rep=perm=<comma list>;shift=<bit string>``.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .construction import MODES, AssignmentTree, tree_keys
from .isometries import CosetRep, Isometry, rep_from_string, rep_to_string
from .words import exponent, from_bits, to_bits


class FileFormatError(ValueError):
    """Malformed code or tree file; message carries the position."""


def write_code_file(path, code, n: int, complete: bool = True) -> None:
    p = Path(path)
    with p.open("w", encoding="ascii") as fh:
        fh.write(f"n={n} complete={int(complete)}\n")
        if isinstance(code, np.ndarray):
            _write_array_body(fh, code, n)
        else:
            for w in sorted(int(w) for w in code):
                fh.write(to_bits(w, n))
                fh.write("\n")


def _write_array_body(fh, code: np.ndarray, n: int) -> None:
    code = np.sort(code)
    chunk = 1 << 18
    for start in range(0, code.size, chunk):
        block = code[start : start + chunk]
        rows = np.empty((block.size, n + 1), dtype=np.uint8)
        for k in range(n):
            rows[:, k] = 48 + ((block >> (n - 1 - k)) & 1).astype(np.uint8)
        rows[:, n] = 10  # newline
        fh.write(rows.tobytes().decode("ascii"))


def read_code_file(path) -> tuple[list[int], int, bool]:
    """Returns (sorted words, n, complete flag)."""
    p = Path(path)
    with p.open("r", encoding="ascii") as fh:
        header = fh.readline().rstrip("\n")
        fields = dict(
            tok.split("=", 1) for tok in header.split() if "=" in tok
        )
        if "n" not in fields:
            raise FileFormatError(f"{p}:1: header must carry n=<int>")
        try:
            n = int(fields["n"])
            exponent(n)
        except ValueError as exc:
            raise FileFormatError(f"{p}:1: bad length {fields['n']!r}") from exc
        complete = fields.get("complete", "0") == "1"
        words = []
        prev = -1
        for lineno, line in enumerate(fh, start=2):
            s = line.rstrip("\n")
            if not s:
                raise FileFormatError(f"{p}:{lineno}: blank line")
            try:
                w, length = from_bits(s)
            except ValueError as exc:
                raise FileFormatError(f"{p}:{lineno}: {exc}") from exc
            if length != n:
                raise FileFormatError(f"{p}:{lineno}: expected {n} bits, got {length}")
            if w <= prev:
                raise FileFormatError(f"{p}:{lineno}: lines not strictly ascending")
            prev = w
            words.append(w)
    if complete and len(words) != 1 << (n - exponent(n) - 1):
        raise FileFormatError(f"{p}: complete=1 but body holds {len(words)} words")
    return words, n, complete


def _iso_to_string(g: Isometry) -> str:
    perm = ",".join(str(i) for i in g.perm)
    return f"perm={perm};shift={to_bits(g.shift, g.n)}"


def _iso_from_string(s: str, n: int) -> Isometry:
    head, _, tail = s.partition(";")
    if not head.startswith("perm=") or not tail.startswith("shift="):
        raise ValueError(f"malformed isometry {s!r}")
    perm = tuple(int(x) for x in head.removeprefix("perm=").split(","))
    shift, length = from_bits(tail.removeprefix("shift="))
    if length != n:
        raise ValueError(f"shift length {length} != {n}")
    return Isometry(n, perm, shift)


def write_tree_file(path, tree: AssignmentTree) -> None:
    p = Path(path)
    with p.open("w", encoding="ascii") as fh:
        fh.write(f"n={tree.n}\n")
        fh.write(f"mode={tree.mode}\n")
        for t, key_path in sorted(tree.assignments):
            entry = tree.assignments[(t, key_path)]
            path_txt = ",".join(str(i) for i in key_path) if key_path else "-"
            if isinstance(entry, CosetRep):
                rep_txt = rep_to_string(entry)
            else:
                rep_txt = _iso_to_string(entry)
            fh.write(f"assign t={t} path={path_txt} rep={rep_txt}\n")


def read_tree_file(path) -> AssignmentTree:
    p = Path(path)
    with p.open("r", encoding="ascii") as fh:
        header = fh.readline().rstrip("\n")
        if not header.startswith("n="):
            raise FileFormatError(f"{p}:1: expected n=<int>")
        try:
            n = int(header.removeprefix("n="))
            exponent(n)
        except ValueError as exc:
            raise FileFormatError(f"{p}:1: bad length") from exc
        mode_line = fh.readline().rstrip("\n")
        if not mode_line.startswith("mode="):
            raise FileFormatError(f"{p}:2: expected mode=<la1|la2|la3>")
        mode = mode_line.removeprefix("mode=")
        if mode not in MODES:
            raise FileFormatError(f"{p}:2: unknown mode {mode!r}")
        tree = AssignmentTree(n, mode)
        for lineno, line in enumerate(fh, start=3):
            s = line.rstrip("\n")
            if not s:
                raise FileFormatError(f"{p}:{lineno}: blank line")
            try:
                tag, t_txt, path_txt, rep_txt = s.split(" ", 3)
                if tag != "assign":
                    raise ValueError("expected 'assign'")
                t = int(t_txt.removeprefix("t="))
                raw_path = path_txt.removeprefix("path=")
                key_path = (
                    () if raw_path == "-" else tuple(int(x) for x in raw_path.split(","))
                )
                body = rep_txt.removeprefix("rep=")
                entry: Isometry | CosetRep
                if body.startswith("perm="):
                    entry = _iso_from_string(body, n)
                else:
                    entry = rep_from_string(body, n)
            except ValueError as exc:
                raise FileFormatError(f"{p}:{lineno}: {exc}") from exc
            if (t, key_path) in tree.assignments:
                raise FileFormatError(f"{p}:{lineno}: duplicate assignment")
            tree.assignments[(t, key_path)] = entry
    missing = set(tree_keys(n)) - set(tree.assignments)
    if missing:
        t, key_path = min(missing)
        raise FileFormatError(f"{p}: missing assignment t={t} path={key_path}")
    return tree
