"""Built-in oracle suites wiring the brute-force checks to the CLI.

Each check recomputes a structural fact two independent ways (closed form
vs definitional scan, formula vs enumeration, construction vs verifier)
and fails loudly on any mismatch.  `quick` runs the sub-second suites;
`full` adds the heavy enumerations.
"""

from __future__ import annotations

import itertools
import time
from random import Random
from typing import Callable

from . import analysis, components, construction, counting, isometries, scaffold, words


def _check_scaffold_sizes(n: int) -> str:
    m = words.exponent(n)
    for t in range(1, m):
        assert len(scaffold.seed_words(n, t)) == scaffold.seed_count(n, t)
        code = scaffold.level_code_words(n, t)
        assert len(code) == scaffold.level_code_size(n, t)
        assert all(scaffold.in_level_code(w, n, t) for w in code)
    return f"seed/level-code sizes at n={n}"


def _check_recursion(n: int) -> str:
    m = words.exponent(n)
    prev = set(scaffold.seed_words(n, 1))
    for t in range(2, m):
        cur = {r ^ a for r in scaffold.seed_words(n, t) for a in prev}
        assert cur == set(scaffold.level_code_words(n, t))
        prev = cur
    hamming = set(scaffold.hamming_code(n))
    assert prev == hamming
    return "level recursion rebuilds the top code"


def _check_closed_forms(n: int) -> str:
    m = words.exponent(n)
    for t in range(1, m):
        code = scaffold.level_code_words(n, t)
        omega = words.neighborhood(code, n)
        assert len(omega) == scaffold.level_neighborhood_size(n, t)
        assert all(scaffold.in_level_neighborhood(w, n, t) for w in omega)
        closure = scaffold.closure_of(code, n)
        assert len(closure) == scaffold.level_closure_size(n, t)
        assert all(scaffold.in_level_closure(w, n, t) for w in closure)
        assert closure == set(scaffold.closure_words(n, t))
    return "closed forms match definitional neighborhoods/closures"


def _check_closure_equivalence(n: int) -> str:
    rng = Random(2024)
    evens = scaffold.seed_words(n, 1)
    for _ in range(20):
        a = set(rng.sample(evens, 5))
        # enlarging a set by one of its closure words keeps the neighborhood
        enlarged = a | {rng.choice(sorted(scaffold.closure_of(a, n)))}
        assert words.neighborhood(enlarged, n) == words.neighborhood(a, n)
        assert scaffold.closure_of(enlarged, n) == scaffold.closure_of(a, n)
        b = set(rng.sample(evens, 5))
        same_omega = words.neighborhood(a, n) == words.neighborhood(b, n)
        same_closure = scaffold.closure_of(a, n) == scaffold.closure_of(b, n)
        assert same_omega == same_closure
    return "neighborhood equality iff closure equality (sampled)"


def _check_bold_span(n: int) -> str:
    m = words.exponent(n)
    for t in range(2, m):
        closure = scaffold.closure_words(n, t - 1)
        definitional = {r ^ x for r in scaffold.seed_words(n, t) for x in closure}
        closed = set(scaffold.bold_span_words(n, t))
        assert definitional == closed
        assert all(scaffold.in_bold_span(w, n, t) for w in definitional)
    return "bold span equals seed + closure definition"


def _check_rep_enumeration(n: int) -> str:
    for t in (1, 2):
        reps = list(isometries.enumerate_reps(n, t))
        assert len(reps) == isometries.coset_count(n, t)
        realized = [isometries.realize(r) for r in reps]
        for i, gi in enumerate(realized):
            inv = gi.inverse()
            for j, gj in enumerate(realized):
                if i != j:
                    assert not isometries.in_partition_stabilizer(inv.compose(gj), t)
    return "level 1-2 representatives enumerate pairwise inequivalent"


def _check_rep_stream(n: int) -> str:
    t = words.exponent(n) - 1
    count = sum(1 for _ in isometries.enumerate_reps(n, t))
    assert count == isometries.coset_count(n, t)
    return f"top-level representative stream counts {count}"


def _check_factorization(n: int, samples: int = 300) -> str:
    rng = Random(99)
    m = words.exponent(n)
    for t in range(1, m):
        for _ in range(samples):
            g = isometries.random_stabilizer_element(n, t, rng)
            rep, h = isometries.factor(g, t)
            assert isometries.realize(rep).compose(h).perm == g.perm
            assert isometries.realize(rep).compose(h).shift == g.shift
    return f"{samples} factorizations per level reconstruct exactly"


def _check_degeneracy_counts(n: int) -> str:
    reps1 = [isometries.realize(r) for r in isometries.enumerate_reps(n, 1)]
    index2 = scaffold.seed_words(n, 2)
    total = 0
    for choice in itertools.product(range(len(reps1)), repeat=len(index2)):
        members = [reps1[i] for i in choice]
        total += components.is_degenerate(members, index2)
    expected = len(reps1) * len(index2)
    assert total == expected, (total, expected)
    return f"degenerate collections over the level-2 index: {total}"


def _check_identity_tree(n: int) -> str:
    tree = construction.identity_tree(n, "la2")
    assert construction.validate_tree(tree) is None
    code = construction.build_code(tree)
    assert code == scaffold.hamming_code(n)
    report = analysis.analyze(code, n)
    assert report.extended_perfect and report.rank == n - words.exponent(n) - 1
    return "identity tree rebuilds the top code"


def _check_sampled_codes(n: int, count: int) -> str:
    seen = set()
    for seed in range(count):
        tree = construction.sample_tree(n, seed, "la3")
        assert construction.validate_tree(tree) is None
        code = construction.build_code(tree)
        report = analysis.analyze(code, n)
        assert report.extended_perfect
        assert report.rank_deficiency == 2
        assert report.kernel_dimension is not None and report.kernel_dimension >= 4
        seen.add(tuple(code))
    assert len(seen) == count
    return f"{count} sampled codes verified, pairwise distinct"


def _check_puncturing(n: int) -> str:
    hamming = scaffold.hamming_code(n)
    short = construction.puncture(hamming, n)
    assert analysis.verify_perfect(short, n - 1)
    code = construction.build_code(construction.sample_tree(n, 7, "la3"))
    assert analysis.verify_perfect(construction.puncture(code, n), n - 1)
    return "punctured codes tile the shortened space"


def _check_counting(n: int) -> str:
    assert counting.la_code_count(16) == 15692092416000000
    assert counting.la_code_count(n) == counting.la_code_count_kform(n)
    assert counting.la_code_count(n) <= counting.la_code_count_upper(n)
    upper = counting.log2_int(counting.la_code_count_upper(n))
    assert abs(counting.asymptotic_log2(n) - upper) < 1e-6
    bounds = counting.historical_bounds(n)
    exact = counting.log2_int(counting.la_code_count(n))
    assert bounds["vasilev"] < bounds["krotov2000"] < exact <= upper
    return "count anchors, algebraic cross-forms and bound ordering"


def suites(n: int, level: str) -> list[tuple[str, Callable[[], str]]]:
    checks: list[tuple[str, Callable[[], str]]] = [
        ("scaffold-sizes", lambda: _check_scaffold_sizes(n)),
        ("level-recursion", lambda: _check_recursion(n)),
        ("closed-forms", lambda: _check_closed_forms(n)),
        ("closure-equivalence", lambda: _check_closure_equivalence(n)),
        ("bold-span", lambda: _check_bold_span(n)),
        ("representatives", lambda: _check_rep_enumeration(n)),
        ("factorization", lambda: _check_factorization(n)),
        ("identity-tree", lambda: _check_identity_tree(n)),
        ("sampled-codes", lambda: _check_sampled_codes(n, 10 if level == "quick" else 30)),
        ("puncturing", lambda: _check_puncturing(n)),
        ("counting", lambda: _check_counting(n)),
    ]
    if level == "full":
        checks.insert(6, ("representative-stream", lambda: _check_rep_stream(n)))
        checks.insert(7, ("degeneracy-counts", lambda: _check_degeneracy_counts(n)))
    return checks


def run(n: int = 16, level: str = "quick", emit=print) -> bool:
    """Run the suites; emit one line per check; True when everything holds."""
    if level not in ("quick", "full"):
        raise ValueError("level must be 'quick' or 'full'")
    ok = True
    for name, check in suites(n, level):
        start = time.monotonic()
        try:
            detail = check()
        except AssertionError as exc:
            ok = False
            emit(f"FAIL {name}: {exc}")
            continue
        emit(f"ok {name}: {detail} ({time.monotonic() - start:.2f}s)")
    return ok
