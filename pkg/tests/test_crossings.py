import random

import networkx as nx
import pytest

from stringcross.crossings import (
    CROSSING, RIGOROUS, NonUniqueExtremum, crossing_table, enumerate_crossings,
    enumerate_rigorous, fragment_ok, level_changes, level_pairs, order_matrix, precedes,
    r_vec, s_vec, select_extremal, turning_points,
)
from stringcross.lusztig import F_map
from stringcross.wiring import build, orient
from stringcross.words import enumerate_words

WORKED_WORD = (2, 1, 2, 3, 4, 3, 2, 1, 3, 2)


def paths_by_networkx(word, a, kind):
    """
    Independent enumeration: all simple vertex paths of the oriented diagram
    from the start to the end vertex, filtered by the fragment rule.  Two
    wires meet at most once, so a vertex sequence fixes the wires used.
    """
    d = build(word)
    o = orient(d, a, reversed=(kind == RIGOROUS))
    g = nx.DiGraph()
    for s, t, p in o.edges:
        if s not in ("L", "R") and t not in ("L", "R"):
            g.add_edge(s, t, wire=p)
    if kind == CROSSING:
        start, end = d.leftmost(a), d.leftmost(a + 1)
    else:
        start, end = d.rightmost(a), d.rightmost(a + 1)
    if start == end:
        return {((start, a),)}
    found = set()
    for verts in nx.all_simple_paths(g, start, end):
        wires = [a] + [g.edges[u, v]["wire"] for u, v in zip(verts, verts[1:])]
        ok = True
        for k, arrive, leave in zip(verts, wires, wires[1:]):
            q = d.vertex(k).other(arrive)
            if leave == arrive and not fragment_ok(arrive, q, a):
                ok = False
        if ok:
            found.add(tuple(zip(verts, wires)))
    return found


def as_pairs(paths):
    return {tuple((k, p) for k, p, _ in g.steps) for g in paths}


@pytest.mark.parametrize("n", [3, 4])
def test_enumeration_matches_networkx_exhaustive(n):
    for w in enumerate_words(n):
        for a in range(1, n):
            for kind in (CROSSING, RIGOROUS):
                ours = as_pairs(crossing_table(w, a, kind).paths)
                assert ours == paths_by_networkx(w, a, kind), (w, a, kind)


def test_enumeration_matches_networkx_sampled_rank_five():
    rng = random.Random(11)
    for w in rng.sample(enumerate_words(5), 25):
        for a in range(1, 5):
            for kind in (CROSSING, RIGOROUS):
                assert as_pairs(crossing_table(w, a, kind).paths) == paths_by_networkx(w, a, kind)


def test_rank_three_crossings():
    (g,) = enumerate_crossings((1, 2, 1), 1)
    assert g.positions == (1,) and g.arrival_wires == (1,)
    gA, gB = enumerate_crossings((1, 2, 1), 2)
    assert gA.positions == (1, 2)
    assert gB.positions == (1, 3, 2)
    assert turning_points(gA) == {1, 2}
    assert r_vec(gA) == (-1, 1, 0) and s_vec(gA) == (0, 1, 0)
    assert r_vec(gB) == (0, 0, 1) and s_vec(gB) == (-1, 1, 1)
    assert precedes(gA, gB) and not precedes(gB, gA)


def test_rank_three_rigorous_paths_give_the_cone():
    forms = {g.r for a in (1, 2) for g in enumerate_rigorous((1, 2, 1), a)}
    assert forms == {(1, 0, 0), (0, 1, -1), (0, 0, 1)}
    assert all(g.kind == RIGOROUS for g in enumerate_rigorous((1, 2, 1), 2))


def worked_gamma():
    want = ((3, 2), (3, 1), (1, 2), (2, 5), (2, 4), (4, 5), (4, 1))
    for g in enumerate_crossings(WORKED_WORD, 3):
        if tuple((p, q) for _, p, q in g.steps) == want:
            return g
    raise AssertionError("worked path not enumerated")


def test_worked_example():
    g = worked_gamma()
    assert g.positions == (1, 2, 3, 7, 9, 6, 4)
    assert {(p, q) for (k, p, q), t in zip(g.steps, g.turning) if t} == {(3, 1), (1, 2), (2, 4)}
    assert g.r == (0, -1, 1, 0, 0, 0, 0, 0, 1, 0)
    assert g.s == (-1, 0, 0, 1, 0, -1, 1, 0, 1, 0)
    assert level_pairs(g) == [(3, 2), (2, 2), (2, 2), (2, 3), (3, 4), (4, 3), (3, 4)]
    assert len(enumerate_crossings(WORKED_WORD, 3)) == 8


def test_worked_example_order():
    g = worked_gamma()
    (h,) = [p for p in enumerate_crossings(WORKED_WORD, 3)
            if tuple((a, b) for _, a, b in p.steps) == ((3, 2), (2, 1), (1, 4))]
    assert h.positions == (1, 3, 4)
    assert precedes(h, g) and not precedes(g, h)


def test_straight_through_vertices_never_turn():
    for w in enumerate_words(4):
        for a in (1, 2, 3):
            for g in enumerate_crossings(w, a):
                for (k, p, q), (k2, p2, _), t in zip(g.steps, g.steps[1:], g.turning):
                    assert t == (p2 != p)


@pytest.mark.parametrize("n", [3, 4])
def test_f_of_s_is_r(n):
    for w in enumerate_words(n):
        for a in range(1, n):
            for g in enumerate_crossings(w, a):
                assert F_map(w, g.s) == g.r


@pytest.mark.parametrize("n", [3, 4])
def test_s_sums_per_colour(n):
    for w in enumerate_words(n):
        for a in range(1, n):
            for g in enumerate_crossings(w, a):
                for b in range(1, n):
                    assert sum(v for i, v in zip(w, g.s) if i == b) == (a == b)
                assert level_changes(g) == [g.s[k - 1] for k in g.positions]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_order_is_a_partial_order(n):
    words = enumerate_words(n)
    if n == 5:
        words = random.Random(2).sample(words, 40)
    for w in words:
        for a in range(1, n):
            m = order_matrix(w, a)
            k = len(m)
            for i in range(k):
                assert m[i][i]
                for j in range(k):
                    if i != j:
                        assert not (m[i][j] and m[j][i]), (w, a, i, j)
                    for l in range(k):
                        if m[i][j] and m[j][l]:
                            assert m[i][l]


def test_select_extremal_examples():
    paths = enumerate_crossings((1, 2, 1), 2)
    gA, gB = paths
    assert select_extremal((1, 1, 0), paths, "r", "min") == (0, gA)
    assert select_extremal((2, 1, 0), paths, "r", "min") == (0, gB)
    assert select_extremal((0, 0, 0), paths, "r", "min") == (0, gA)
    assert select_extremal((0, 0, 0), paths, "r", "max") == (0, gB)
    with pytest.raises(ValueError):
        select_extremal((0, 0, 0), [], "r", "min")


def test_extremal_refuses_incomparable_ties():
    table = crossing_table((1, 2, 1), 2)
    broken = type(table)(table.paths, table.r, table.s, ((True, False), (False, True)))
    with pytest.raises(NonUniqueExtremum):
        broken.extremal([0, 1], "min")


def test_precedes_rejects_mismatched_paths():
    (g,) = enumerate_crossings((1, 2, 1), 1)
    h = enumerate_crossings((1, 2, 1), 2)[0]
    with pytest.raises(ValueError):
        precedes(g, h)


def test_colour_out_of_range():
    with pytest.raises(ValueError):
        enumerate_crossings((1, 2, 1), 3)


def test_json_shape():
    js = enumerate_crossings((1, 2, 1), 2)[1].to_json()
    assert js == {"a": 2, "kind": "crossing", "positions": [1, 3, 2], "arrival_wires": [2, 2, 3],
                  "turning": [3], "r": [0, 0, 1], "s": [-1, 1, 1]}
