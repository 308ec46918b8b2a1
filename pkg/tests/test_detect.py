"""Alpha tables, path witnesses, embeddings and the jump-member detector
against their brute-force twins."""

import random

import pytest

from jumpramsey.construct import lift, pentagon_coloring
from jumpramsey.core import Color, Embedding, TripleColoring, all_triples
from jumpramsey.detect import (
    alpha_table,
    find_blue_embedding,
    find_blue_jump_member,
    longest_red_path,
)
from jumpramsey.family import jump_min, monotone_path, power_path
from oracles import (
    alpha_map,
    longest_path,
    naive_embedding,
    naive_member,
    random_triples,
)


def test_alpha_table_on_random_hosts():
    rng = random.Random(23)
    for _ in range(40):
        N = rng.randint(3, 7)
        c = random_triples(N, rng)
        table = alpha_table(c)
        want = alpha_map(c)
        for (u, v), a in want.items():
            assert table.value(u, v) == a
        assert table.max_value == max(want.values())


def test_alpha_table_blue_target():
    rng = random.Random(29)
    for _ in range(20):
        c = random_triples(6, rng)
        table = alpha_table(c, Color.BLUE)
        want = alpha_map(c, Color.BLUE)
        for (u, v), a in want.items():
            assert table.value(u, v) == a


def test_alpha_extremes():
    c = TripleColoring.all_red(6)
    table = alpha_table(c)
    assert table.value(5, 6) == 5
    assert table.max_value == 5
    c = TripleColoring.all_blue(6)
    assert alpha_table(c).max_value == 1
    assert alpha_table(c, Color.BLUE).max_value == 5


def test_red_step_fact():
    # a red triple pushes the depth of its back pair strictly up
    rng = random.Random(31)
    for _ in range(200):
        N = rng.randint(4, 9)
        c = random_triples(N, rng)
        table = alpha_table(c)
        for (u, v, w) in all_triples(N):
            if c.is_red(u, v, w):
                assert table.value(v, w) >= table.value(u, v) + 1
            elif table.value(u, v) >= table.value(v, w):
                assert c.is_blue(u, v, w)


def test_longest_red_path_matches_oracle():
    rng = random.Random(37)
    for _ in range(60):
        N = rng.randint(4, 8)
        c = random_triples(N, rng)
        depth, emb = longest_red_path(c)
        want_depth, want_seq = longest_path(c)
        assert depth == want_depth
        assert emb.vertices == want_seq


def test_longest_red_path_tiny_hosts():
    assert longest_red_path(TripleColoring(1, 0)) == (0, Embedding((1,)))
    depth, emb = longest_red_path(TripleColoring(2, 0))
    assert depth == 1 and emb.vertices == (1, 2)


def test_find_blue_embedding_matches_oracle():
    rng = random.Random(41)
    patterns = [
        monotone_path(4),
        monotone_path(5),
        power_path(6, 4),
        jump_min(2)[0],
    ]
    for _ in range(60):
        N = rng.randint(4, 8)
        c = random_triples(N, rng)
        for pattern in patterns:
            emb = find_blue_embedding(c, pattern)
            want = naive_embedding(c, pattern)
            if want is None:
                assert emb is None
            else:
                assert emb is not None and emb.vertices == want


def test_find_blue_embedding_edge_cases():
    c = TripleColoring.all_blue(5)
    assert find_blue_embedding(c, monotone_path(6)) is None
    empty = monotone_path(0)
    assert find_blue_embedding(c, empty).vertices == ()
    # edgeless pattern on two vertices embeds as the first two hosts
    assert find_blue_embedding(c, monotone_path(2)).vertices == (1, 2)


def test_find_blue_jump_member_exhaustive_small_host():
    for bits in range(1 << 10):
        c = TripleColoring(5, bits)
        for n in (1, 2):
            got = find_blue_jump_member(c, n)
            want = naive_member(c, n)
            if want is None:
                assert got is None
            else:
                verts, spec = got
                assert (verts, spec.sorted_jumps) == want


def test_find_blue_jump_member_random_hosts():
    rng = random.Random(43)
    for _ in range(120):
        N = rng.randint(5, 9)
        n = rng.randint(1, 2)
        c = random_triples(N, rng)
        got = find_blue_jump_member(c, n)
        want = naive_member(c, n)
        if want is None:
            assert got is None
        else:
            verts, spec = got
            assert (verts, spec.sorted_jumps) == want


def test_member_on_all_blue_hosts():
    verts, spec = find_blue_jump_member(TripleColoring.all_blue(5), 2)
    assert verts == (1, 2, 3, 4, 5)
    assert spec.sorted_jumps == (2, 4)
    verts, spec = find_blue_jump_member(TripleColoring.all_blue(9), 2)
    assert verts == (1, 2, 3, 4, 5)
    assert spec.sorted_jumps == (2, 4)


def test_member_argument_checks():
    c = TripleColoring.all_blue(5)
    with pytest.raises(ValueError):
        find_blue_jump_member(c, 0)
    assert find_blue_jump_member(c, 3) is None  # needs 7 vertices


def test_pentagon_lift_defeats_both_detectors():
    c = lift(pentagon_coloring())
    depth, _ = longest_red_path(c)
    assert depth == 2
    assert find_blue_jump_member(c, 2) is None
