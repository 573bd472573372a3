"""Acceptance criteria, one test per criterion, at the stated tolerances.

Each test prints one PASS line (visible with `pytest -s` or on failure);
runtime budgets are asserted against a monotonic clock.
"""

import itertools
import time
from contextlib import contextmanager
from random import Random

import pytest

from lacodes import analysis, components, construction, counting, isometries, scaffold, words

N = 16


@contextmanager
def budget(criterion: str, seconds: float):
    start = time.monotonic()
    yield
    elapsed = time.monotonic() - start
    assert elapsed < seconds, f"{criterion}: {elapsed:.1f}s over the {seconds:.0f}s budget"
    print(f"PASS {criterion} ({elapsed:.2f}s)")


def test_criterion_01_exact_count():
    with budget("1 exact count at n=16", 1):
        assert counting.la_code_count(16) == 15692092416000000


def test_criterion_02_log2_count_32():
    with budget("2 log2 count at n=32", 1):
        assert abs(counting.log2_int(counting.la_code_count(32)) - 2363.79) <= 0.01


def test_criterion_03_representative_counts():
    with budget("3 representative counts", 30):
        reps1 = list(isometries.enumerate_reps(N, 1))
        assert len(reps1) == 2 == isometries.coset_count(N, 1)
        reps2 = list(isometries.enumerate_reps(N, 2))
        assert len(reps2) == 162 == isometries.coset_count(N, 2)
        for reps, level in ((reps1, 1), (reps2, 2)):
            realized = [isometries.realize(r) for r in reps]
            for gi in realized:
                inv = gi.inverse()
                for gj in realized:
                    if gi is not gj:
                        assert not isometries.in_partition_stabilizer(
                            inv.compose(gj), level
                        )
        streamed = sum(1 for _ in isometries.enumerate_reps(N, 3))
        assert streamed == 10510500 == isometries.coset_count(N, 3)


def test_criterion_04_neighborhood_closure_oracle():
    with budget("4 closed forms vs definitional", 30):
        omega_sizes = {1: 2048, 2: 16384, 3: 32768}
        closure_sizes = {1: 256, 2: 4096, 3: 32768}
        for t in (1, 2, 3):
            code = scaffold.level_code_words(N, t)
            omega = words.neighborhood(code, N)
            assert len(omega) == omega_sizes[t] == scaffold.level_neighborhood_size(N, t)
            closed = {x for x in range(1 << N) if scaffold.in_level_neighborhood(x, N, t)}
            assert closed == omega
            closure = scaffold.closure_of(code, N)
            assert len(closure) == closure_sizes[t] == scaffold.level_closure_size(N, t)
            closed_theta = {
                x for x in words.even_words(N) if scaffold.in_level_closure(x, N, t)
            }
            assert closed_theta == closure


def test_criterion_05_bold_span_oracle():
    with budget("5 bold span closed form vs definitional", 10):
        sizes = {2: 2048, 3: 8192}
        for t in (2, 3):
            definitional = {
                r ^ x
                for r in scaffold.seed_words(N, t)
                for x in scaffold.closure_words(N, t - 1)
            }
            closed = {x for x in range(1 << N) if scaffold.in_bold_span(x, N, t)}
            assert definitional == closed
            assert len(closed) == sizes[t]


def test_criterion_06_degenerate_collection_counts():
    with budget("6 exhaustive degeneracy counts", 10):
        reps1 = [isometries.realize(r) for r in isometries.enumerate_reps(N, 1)]
        idx2 = scaffold.seed_words(N, 2)
        count1 = sum(
            components.is_degenerate([reps1[i] for i in choice], idx2)
            for choice in itertools.product(range(2), repeat=len(idx2))
        )
        assert (count1, 2 ** len(idx2)) == (16, 256)
        reps2 = [isometries.realize(r) for r in isometries.enumerate_reps(N, 2)]
        idx3 = scaffold.seed_words(N, 3)
        count2 = sum(
            components.is_degenerate([a, b], idx3) for a in reps2 for b in reps2
        )
        assert (count2, len(reps2) ** 2) == (324, 26244)


def test_criterion_07_hundred_seeded_codes():
    with budget("7 construction soundness over 100 seeds", 60):
        codes = []
        for seed in range(100):
            tree = construction.sample_tree(N, seed, "la3")
            code = construction.build_code(tree)
            report = analysis.analyze(code, N)
            assert report.extended_perfect and report.cardinality == 2048
            assert report.rank == 13 and report.rank_deficiency == 2
            assert report.kernel_dimension >= 4
            codes.append(tuple(code))
        assert len(set(codes)) == 100


def test_criterion_08_identity_tree_oracle():
    with budget("8 identity tree rebuilds the linear code", 1):
        code = construction.build_code(construction.identity_tree(N, "la2"))
        hamming = scaffold.hamming_code(N)
        assert code == hamming
        assert len(code) == 2048
        r = analysis.rank(code, N)
        assert r == 11 and len(code) == 1 << r  # affine span equality: linear
        assert min(words.weight(w) for w in code if w) == 4


def test_criterion_09_puncturing():
    with budget("9 puncturing tiles the shortened space", 10):
        hamming = scaffold.hamming_code(N)
        assert analysis.verify_perfect(construction.puncture(hamming, N), N - 1)
        for seed in range(10):
            code = construction.build_code(construction.sample_tree(N, seed, "la3"))
            short = construction.puncture(code, N, check=False)
            assert len(short) == len(code)
            assert analysis.verify_perfect(short, N - 1)


def test_criterion_10_factorization():
    with budget("10 factorization of 1000 elements per level", 10):
        rng = Random(1000)
        for level in (1, 2):
            for _ in range(1000):
                g = isometries.random_stabilizer_element(N, level, rng)
                rep, h = isometries.factor(g, level)
                assert isometries.in_partition_stabilizer(h, level)
                assert isometries.realize(rep).compose(h) == g


def test_criterion_11_bound_ordering():
    with budget("11 bound ordering and asymptotic ratio", 1):
        for n in (16, 32):
            bounds = counting.historical_bounds(n)
            exact = counting.log2_int(counting.la_code_count(n))
            upper = counting.log2_int(counting.la_code_count_upper(n))
            assert bounds["vasilev"] < bounds["krotov2000"] < exact <= upper
        gap = counting.log2_int(counting.la_code_count_upper(32)) - counting.log2_int(
            counting.la_code_count(32)
        )
        assert 0 <= gap < 1e-6


@pytest.mark.big
def test_criterion_12_length_32_smoke():
    with budget("12 length-32 generate and verify", 900):
        tree = construction.sample_tree(32, 0, "la3")
        assert construction.validate_tree(tree) is None
        code = construction.build_code_array(tree)
        assert code.size == 1 << 26
        report = analysis.verify_extended_perfect(code, 32)
        assert report.extended_perfect
        assert analysis.rank(code, 32) == 29  # deficiency 2 at n=32
