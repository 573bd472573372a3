"""Report rendering: bound tables as CSV plus matplotlib figures."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from . import analysis, counting

BOUND_COLUMNS = [
    "n",
    "vasilev",
    "krotov2000",
    "la_exact",
    "la_upper",
    "noneq_extended",
    "noneq_punctured",
    "upper_avgust",
    "upper_avgust_alt",
]


def bounds_rows(lengths) -> list[dict[str, float]]:
    """One row of log2 values per length."""
    rows = []
    for n in lengths:
        hist = counting.historical_bounds(n)
        noneq_ext, noneq_punct = counting.nonequivalence_bounds(n)
        rows.append(
            {
                "n": n,
                "vasilev": hist["vasilev"],
                "krotov2000": hist["krotov2000"],
                "la_exact": counting.log2_int(counting.la_code_count(n)),
                "la_upper": counting.log2_int(counting.la_code_count_upper(n)),
                "noneq_extended": noneq_ext,
                "noneq_punctured": noneq_punct,
                "upper_avgust": hist["upper_avgust"],
                "upper_avgust_alt": hist["upper_avgust_alt"],
            }
        )
    return rows


def write_bounds_csv(path, rows) -> None:
    with Path(path).open("w", newline="", encoding="ascii") as fh:
        writer = csv.DictWriter(fh, fieldnames=BOUND_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: row[k] for k in BOUND_COLUMNS})


def bounds_figure(path, rows) -> None:
    """Lower/upper bound comparison, log2 counts on a log axis."""
    ns = [row["n"] for row in rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    series = [
        ("vasilev", "doubling construction", "o"),
        ("krotov2000", "two-factor bound", "s"),
        ("la_exact", "local-automorphism count", "D"),
        ("upper_avgust", "upper bound", "^"),
    ]
    for key, label, marker in series:
        ax.plot(ns, [row[key] for row in rows], marker=marker, label=label)
    ax.set_yscale("log", base=2)
    ax.set_xscale("log", base=2)
    ax.set_xticks(ns, [str(x) for x in ns])
    ax.set_xlabel("word length n")
    ax.set_ylabel("log2(number of codes)")
    ax.legend(fontsize=8)
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def weight_figure(path, code, n: int) -> None:
    """Weight distribution histogram of a code."""
    dist = analysis.weight_distribution(code, n)
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.bar(list(dist.keys()), list(dist.values()), width=0.8)
    ax.set_xlabel("Hamming weight")
    ax.set_ylabel("codewords")
    ax.set_xticks(range(0, n + 1, 2))
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_weight_csv(path, code, n: int) -> None:
    dist = analysis.weight_distribution(code, n)
    with Path(path).open("w", newline="", encoding="ascii") as fh:
        writer = csv.writer(fh)
        writer.writerow(["weight", "count"])
        for wt, count in dist.items():
            writer.writerow([wt, count])
