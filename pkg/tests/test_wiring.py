from fractions import Fraction

import pytest

from stringcross.wiring import ascii_art, build, orient, planar_geometry
from stringcross.words import enumerate_words, reflection_ordering


def test_build_rank_three():
    d = build((1, 2, 1))
    assert [v.inversion for v in d.vertices] == [(1, 2), (1, 3), (2, 3)]
    assert [v.level for v in d.vertices] == [0, 1, 0]
    assert d.gap_tables[0] == (1, 2, 3)
    assert d.gap_tables[-1] == (3, 2, 1)


def test_build_worked_word_first_vertex():
    d = build((2, 1, 2, 3, 4, 3, 2, 1, 3, 2))
    assert d.vertex(1).inversion == (2, 3)
    assert d.vertex(1).level == 1


def test_build_rejects_non_reduced():
    with pytest.raises(ValueError):
        build((1, 1, 2))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_every_pair_crosses_once(n):
    for w in enumerate_words(n)[:60]:
        d = build(w)
        inv = [v.inversion for v in d.vertices]
        assert inv == reflection_ordering(w)
        assert len(set(inv)) == len(inv)
        assert [v.level for v in d.vertices] == [i - 1 for i in w]
        for k, (v, i) in enumerate(zip(d.vertices, w)):
            # the level counts the wires strictly below the crossing
            below = d.gap_tables[k][: i - 1]
            assert len(below) == v.level


def test_orientation():
    d = build((1, 2, 1))
    o = orient(d, 2)
    assert o.direction == {1: 1, 2: 1, 3: -1}
    assert orient(d, 1).direction == {1: 1, 2: -1, 3: -1}
    r = orient(d, 2, reversed=True)
    assert r.direction == {1: -1, 2: -1, 3: 1}
    flipped = {(t, s, p) for s, t, p in o.edges}
    assert flipped == set(r.edges)
    with pytest.raises(ValueError):
        orient(d, 3)


def test_oriented_edges_have_boundary_stubs():
    o = orient(build((1, 2, 1)), 1)
    assert ("L", 1, 1) in o.edges        # wire 1 enters from the left
    assert (1, "L", 2) in o.edges         # wire 2 leaves to the left from vertex 1
    assert sum(1 for s, t, p in o.edges if "L" in (s, t)) == 3


def test_planar_geometry_rank_three():
    lines = planar_geometry(build((1, 2, 1)))
    heights = [y for x, y in lines[1] if x.denominator == 2]
    # gap tables: (1,2,3) (2,1,3) (2,3,1) (3,2,1) -> wire 1 at heights 0,1,2,2
    assert heights == [0, 1, 2, 2]
    assert lines[1][0] == (Fraction(0), Fraction(0))
    assert lines[3][-1] == (Fraction(4), Fraction(0))
    assert (Fraction(2), Fraction(3, 2)) in lines[1]  # vertex 2 at (2, i_2 - 1/2)


def test_planar_geometry_endpoints():
    for w in enumerate_words(4):
        lines = planar_geometry(build(w))
        for p, pts in lines.items():
            assert pts[0] == (0, p - 1)
            assert pts[-1] == (len(w) + 1, 4 - p)


def test_ascii_art():
    art = ascii_art(build((1, 2, 1)))
    assert art.splitlines() == ["3   3   1   1",
                                "2   1 X 3   2",
                                "1 X 2   2 X 3"]


def test_json():
    js = build((1, 2, 1)).to_json()
    assert js["vertices"][1] == {"position": 2, "inversion": [1, 3], "level": 1}
