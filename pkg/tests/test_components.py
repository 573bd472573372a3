import itertools
from random import Random

import pytest

from lacodes import scaffold, words
from lacodes.components import (
    affine_span,
    is_bold,
    is_component,
    is_degenerate,
    is_shifted_component,
)
from lacodes.isometries import (
    Isometry,
    enumerate_reps,
    random_stabilizer_element,
    realize,
    sample_rep,
)

N = 16


def test_affine_span_single_word():
    w = words.word_from_support(N, [1, 6])
    span = affine_span([w], N)
    assert span.dimension == 0
    assert span.offset == w
    assert span.contains(w) and not span.contains(0)


def test_affine_span_of_linear_code():
    code = scaffold.hamming_code(N)
    span = affine_span(code, N)
    assert span.dimension == 11
    assert span.offset == 0
    assert sorted(span.words()) == code


def test_affine_span_translation_equivariant():
    rng = Random(4)
    pts = [rng.randrange(1 << N) for _ in range(9)]
    v = rng.randrange(1 << N)
    moved = affine_span([p ^ v for p in pts], N)
    base = affine_span(pts, N)
    assert moved.dimension == base.dimension
    assert sorted(moved.words()) == sorted(w ^ v for w in base.words())


def test_affine_span_empty():
    with pytest.raises(ValueError):
        affine_span([], N)


@pytest.mark.parametrize("order", [1, 2, 3])
def test_level_code_is_component(order):
    assert is_component(scaffold.level_code_words(N, order), N, order)


def test_component_rejects_odd_member():
    with pytest.raises(ValueError):
        is_component([0, 1], N, 1)


def test_component_breaks_on_replacement():
    code = set(scaffold.level_code_words(N, 2))
    outside = next(
        x
        for x in words.even_words(N)
        if not scaffold.in_level_closure(x, N, 2)
    )
    broken = (code - {max(code)}) | {outside}
    assert not is_component(broken, N, 2)


def test_component_invariant_under_stabilizer():
    rng = Random(11)
    for order in (1, 2, 3):
        code = scaffold.level_code_words(N, order)
        for _ in range(5):
            g = random_stabilizer_element(N, order, rng)
            assert is_component(g.apply_set(code), N, order)


def test_shifted_component_examples():
    code = scaffold.level_code_words(N, 2)
    assert is_shifted_component(code, N, 2, 0)
    # a seed word of the next level shifts the lower code to a shifted component
    for r in scaffold.seed_words(N, 3):
        assert is_shifted_component([w ^ r for w in code], N, 2, r)
    # odd-parity members mean it is not a shifted component at all
    e = words.word_from_support(N, [0])
    assert not is_shifted_component([w ^ e for w in code], N, 2, e)


def test_shifted_component_support_check():
    code = scaffold.level_code_words(N, 2)
    with pytest.raises(ValueError):
        is_shifted_component(code, N, 2, words.word_from_support(N, [N - 1, N - 2]))


def test_bold_examples():
    assert is_bold(scaffold.seed_words(N, 1), N, 1)
    # the level-2 code spans only itself: dimension 10 < 11
    assert not is_bold(scaffold.level_code_words(N, 2), N, 2)
    assert affine_span(scaffold.level_code_words(N, 2), N).dimension == 10


def test_bold_requires_component():
    with pytest.raises(ValueError):
        is_bold([0], N, 1)


def _assemble(members, order):
    seeds = scaffold.seed_words(N, order)
    lower = scaffold.level_code_words(N, order - 1)
    out = []
    for r, g in zip(seeds, members):
        out.extend(r ^ g.apply(w) for w in lower)
    return out


def test_bold_propagation_through_collections():
    # nondegenerate collections produce bold unions, degenerate ones do not
    rng = Random(12)
    index = scaffold.seed_words(N, 2)
    reps = [realize(r) for r in enumerate_reps(N, 1)]
    for _ in range(10):
        members = [reps[rng.randrange(2)] for _ in index]
        union = _assemble(members, 2)
        assert is_component(union, N, 2)
        assert is_bold(union, N, 2) == (not is_degenerate(members, index))
    # all 16 degenerate level-1 collections give non-bold unions
    degenerate_count = 0
    for choice in itertools.product(range(2), repeat=len(index)):
        members = [reps[i] for i in choice]
        if is_degenerate(members, index):
            degenerate_count += 1
            assert not is_bold(_assemble(members, 2), N, 2)
    assert degenerate_count == 16


def test_union_of_shifted_components_is_component():
    rng = Random(13)
    for order in (2, 3):
        seeds = scaffold.seed_words(N, order)
        lower = scaffold.level_code_words(N, order - 1)
        union = []
        for r in seeds:
            g = random_stabilizer_element(N, order - 1, rng)
            part = [r ^ g.apply(w) for w in lower]
            assert is_shifted_component(part, N, order - 1, r)
            union.extend(part)
        assert is_component(union, N, order)


def test_distinct_rep_images_differ():
    # distinct representatives send bold components to distinct sets
    rng = Random(14)
    base = scaffold.bold_span_words(N, 1)  # the level-1 code itself, bold
    reps = [realize(r) for r in enumerate_reps(N, 2)]
    bold_parts = []
    for _ in range(3):
        members = [realize(sample_rep(N, 1, rng)) for _ in scaffold.seed_words(N, 2)]
        if not is_degenerate(members, scaffold.seed_words(N, 2)):
            bold_parts.append(_assemble(members, 2))
    for d1, d2 in itertools.combinations(rng.sample(reps, 12), 2):
        for part in bold_parts:
            assert d1.apply_set(part) != d2.apply_set(part)


def test_degenerate_constant_collection():
    rng = Random(15)
    index = scaffold.seed_words(N, 2)
    g = realize(sample_rep(N, 1, rng))
    assert is_degenerate([g] * len(index), index)


def test_degenerate_pair_iff_same_permutation():
    index = scaffold.seed_words(N, 3)  # two index words: any two shifts are affine
    realized = [realize(r) for r in enumerate_reps(N, 2)]
    count = 0
    for a in realized:
        for b in realized:
            expect = a.perm == b.perm
            assert is_degenerate([a, b], index) == expect
            count += expect
    assert count == 324


def test_degenerate_exhaustive_level1():
    index = scaffold.seed_words(N, 2)
    reps = [realize(r) for r in enumerate_reps(N, 1)]
    total = sum(
        is_degenerate([reps[i] for i in choice], index)
        for choice in itertools.product(range(2), repeat=len(index))
    )
    assert total == 16 == 2 * len(index)


def test_affine_function_count():
    # affine two-valued functions on an 8-element index space: 2 * 8
    index = scaffold.seed_words(N, 2)
    zero = Isometry.identity(N)
    one = Isometry.translation(N, words.word_from_support(N, [0, 8]))
    count = 0
    for choice in itertools.product((zero, one), repeat=len(index)):
        count += is_degenerate(list(choice), index)
    assert count == 2 * len(index)


def test_degenerate_input_validation():
    index = scaffold.seed_words(N, 3)
    g = Isometry.identity(N)
    with pytest.raises(ValueError):
        is_degenerate([g], index)
    with pytest.raises(ValueError):
        is_degenerate({1: g, 2: g}, [1, 2])  # no zero word
