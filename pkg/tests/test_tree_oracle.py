import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flipenum import recurrences as rec
from flipenum import reference as ref
from flipenum.errors import IntegrityError, UsageError
from flipenum.tree_oracle import (
    ColoredTree,
    canonical_form,
    census,
    census_from_trees,
    enumerate_trees,
    mirror,
    noniso_sibling_count,
    size,
    two_color_iso,
)


def random_tree(rng, n, colors):
    if n == 0:
        return None
    k = rng.randrange(n)
    return ColoredTree(random_tree(rng, k, colors), random_tree(rng, n - 1 - k, colors), rng.randrange(colors))


def random_flip(rng, t):
    if t is None:
        return None
    a, b = random_flip(rng, t.left), random_flip(rng, t.right)
    if rng.random() < 0.5:
        a, b = b, a
    return ColoredTree(a, b, t.color)


@st.composite
def trees(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    colors = draw(st.sampled_from([1, 2]))
    return random_tree(random.Random(draw(st.integers(0, 2**32))), n, colors)


def test_enumerate_counts():
    assert list(enumerate_trees(0, 1)) == [None]
    assert sum(1 for _ in enumerate_trees(5, 1)) == 42
    assert sum(1 for _ in enumerate_trees(3, 2)) == 40
    for n in range(8):
        ts = list(enumerate_trees(n, 1))
        assert len(ts) == rec.catalan(n)
        assert len(set(ts)) == len(ts)
        assert all(size(t) == n for t in ts)
        assert all(t.color == 0 for t in ts if t is not None)


def test_enumerate_cap():
    with pytest.raises(UsageError):
        list(enumerate_trees(10, 2))
    with pytest.raises(UsageError):
        list(enumerate_trees(13, 1))
    with pytest.raises(UsageError):
        list(enumerate_trees(2, 3))
    assert sum(1 for _ in enumerate_trees(2, 2, cap=2)) == 8


def test_colour_validated():
    with pytest.raises(UsageError):
        ColoredTree(color=2)


def test_two_color_iso_examples():
    leaf_w, leaf_b = ColoredTree(color=0), ColoredTree(color=1)
    assert two_color_iso(None, None)
    assert not two_color_iso(leaf_w, leaf_b)
    assert not two_color_iso(leaf_w, None)
    rng = random.Random(7)
    for _ in range(200):
        t = random_tree(rng, rng.randrange(12), 2)
        assert two_color_iso(t, mirror(t))


def test_iso_matches_codes_exhaustively():
    pools = [list(itertools.chain.from_iterable(enumerate_trees(n, 1) for n in range(7)))]
    pools.append(list(itertools.chain.from_iterable(enumerate_trees(n, 2) for n in range(5))))
    for pool in pools:
        codes = [canonical_form(t) for t in pool]
        for i, a in enumerate(pool):
            for j, b in enumerate(pool):
                assert (codes[i] == codes[j]) == two_color_iso(a, b)


def test_iso_matches_codes_random_pairs():
    rng = random.Random(20240501)
    hits = 0
    for trial in range(100_000):
        n = rng.randrange(13)
        colors = 1 + (trial & 1)
        a = random_tree(rng, n, colors)
        b = random_flip(rng, a) if rng.random() < 0.5 else random_tree(rng, n, colors)
        same = canonical_form(a) == canonical_form(b)
        assert same == two_color_iso(a, b)
        hits += same
    assert 40_000 < hits < 100_000


def test_distinct_codes_on_three_node_coloured_trees():
    codes = {canonical_form(t) for t in enumerate_trees(3, 2)}
    assert len(codes) == 14 == sum(ref.BCOLOR_TABLE[3])


def test_noniso_examples():
    path2 = ColoredTree(ColoredTree())
    full3 = ColoredTree(ColoredTree(), ColoredTree())
    path3 = ColoredTree(None, ColoredTree(ColoredTree()))
    assert noniso_sibling_count(path2) == 1
    assert noniso_sibling_count(full3) == 0
    assert noniso_sibling_count(path3) == 2


@given(trees())
def test_mirror_invariance(t):
    assert canonical_form(t) == canonical_form(mirror(t))
    assert noniso_sibling_count(t) == noniso_sibling_count(mirror(t))
    assert mirror(mirror(t)) == t


def test_census_examples():
    assert census(7, 1).l_profile() == [1, 0, 1, 7, 7, 6, 1, 0]
    assert census(8, 2).l_profile(4) == [0, 2, 20, 206, 540, 1104, 710, 70, 0]
    empty = census(0, 1)
    assert empty.total_classes() == 1
    assert empty.rows[(0, 0)].class_count == 1
    assert empty.rows[(0, 0)].ordered_tree_count == 1


def test_census_fast_path_agrees_with_explicit_path():
    for colors, top in ((1, 8), (2, 6)):
        for n in range(top + 1):
            fast, slow = census(n, colors), census_from_trees(n, colors)
            assert fast.rows == slow.rows


def test_census_matches_k2():
    for n in range(12):
        assert census(n, 1).l_profile() == rec.table("k2", 11).row(n)


def test_census_totals():
    for colors, top in ((1, 10), (2, 7)):
        for n in range(top + 1):
            c = census(n, colors)
            assert c.total_trees() == rec.catalan(n) * colors**n
            assert all(card == 1 << l for l, _, card in c.class_sizes.values())


def test_census_detects_broken_invariant(monkeypatch):
    # make canonical_form ignore colours, which merges classes with different c
    import flipenum.tree_oracle as mod

    real = mod.canonical_form

    def _bleach(t):
        return None if t is None else ColoredTree(_bleach(t.left), _bleach(t.right), 0)

    monkeypatch.setattr(mod, "canonical_form", lambda t: real(_bleach(t)))
    with pytest.raises(IntegrityError):
        census_from_trees(3, 2)
