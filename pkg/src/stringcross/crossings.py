"""
Reineke crossings (a-crossings) and a-rigorous paths in wiring diagrams.

A step of a path is ``(position, arrival_wire, other_wire)``.  The path enters
its first vertex along wire ``a`` and conceptually leaves its last vertex along
wire ``a + 1`` (towards the left boundary for crossings, the right boundary
for rigorous paths), which decides whether the last vertex is a turning point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .wiring import build, orient, planar_geometry

__all__ = [
    "CROSSING", "RIGOROUS", "CrossingPath", "NonUniqueExtremum",
    "enumerate_crossings", "enumerate_rigorous", "enumerate_paths",
    "turning_points", "r_vec", "s_vec", "level_changes", "level_pairs", "precedes",
    "order_matrix", "select_extremal", "crossing_table", "path_polygon",
    "fragment_ok", "enclosed_faces",
]

CROSSING = "crossing"
RIGOROUS = "rigorous"


class NonUniqueExtremum(RuntimeError):
    """The extremal element of an argmax set is not unique."""


@dataclass(frozen=True)
class CrossingPath:
    word: tuple[int, ...]
    a: int
    kind: str
    steps: tuple[tuple[int, int, int], ...]

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self.steps)

    @property
    def arrival_wires(self) -> tuple[int, ...]:
        return tuple(s[1] for s in self.steps)

    @cached_property
    def turning(self) -> tuple[bool, ...]:
        last = len(self.steps) - 1
        flags = []
        for idx, (_, p, _) in enumerate(self.steps):
            leaving = self.steps[idx + 1][1] if idx < last else self.a + 1
            flags.append(leaving != p)
        return tuple(flags)

    @cached_property
    def r(self) -> tuple[int, ...]:
        return r_vec(self)

    @cached_property
    def s(self) -> tuple[int, ...]:
        return s_vec(self)

    def label(self) -> str:
        return "(" + ",".join(f"v[{p},{q}]" for _, p, q in self.steps) + ")"

    def to_json(self):
        return {"a": self.a, "kind": self.kind, "positions": list(self.positions),
                "arrival_wires": list(self.arrival_wires),
                "turning": sorted(turning_points(self)),
                "r": list(self.r), "s": list(self.s)}


def fragment_ok(p: int, q: int, a: int) -> bool:
    """May a path run straight through vertex (p, q) along wire p?"""
    if q <= a:
        return p > q
    return p < q


def enumerate_paths(word, a: int, kind: str = CROSSING) -> tuple[CrossingPath, ...]:
    return _enumerate(tuple(word), a, kind)


@lru_cache(maxsize=None)
def _enumerate(word, a, kind):
    diagram = build(word)
    if not 1 <= a <= diagram.n - 1:
        raise ValueError(f"colour {a} out of range 1..{diagram.n - 1}")
    oriented = orient(diagram, a, reversed=(kind == RIGOROUS))
    if kind == CROSSING:
        start, target = diagram.leftmost(a), diagram.leftmost(a + 1)
    elif kind == RIGOROUS:
        start, target = diagram.rightmost(a), diagram.rightmost(a + 1)
    else:
        raise ValueError(f"unknown path kind {kind!r}")

    found = []
    steps = []
    visited = set()

    def dfs(k, p):
        q = diagram.vertex(k).other(p)
        steps.append((k, p, q))
        visited.add(k)
        if k == target:
            found.append(tuple(steps))
        else:
            for d in sorted((p, q)):
                if d == p and not fragment_ok(p, q, a):
                    continue
                nxt = oriented.successor(d, k)
                if nxt is not None and nxt not in visited:
                    dfs(nxt, d)
        steps.pop()
        visited.discard(k)

    dfs(start, a)
    paths = [CrossingPath(word, a, kind, s) for s in found]
    paths.sort(key=lambda g: g.steps)
    for g in paths:
        _check_path(g, oriented)
    return tuple(paths)


def _check_path(path: CrossingPath, oriented):
    """Independent re-validation of an enumerated path."""
    diagram = oriented.base
    steps = path.steps
    for (k, p, q), (k2, p2, _) in zip(steps, steps[1:]):
        assert p2 in (p, q) and oriented.successor(p2, k) == k2, "broken edge"
        if p2 == p:
            assert fragment_ok(p, q, path.a), "forbidden fragment"
    if path.kind == CROSSING:
        assert path.a in diagram.vertex(steps[0][0]).inversion
        assert steps[0][0] == diagram.leftmost(path.a)
        assert steps[-1][0] == diagram.leftmost(path.a + 1)
        changes = level_changes(path)
        assert all(c == s for c, s in zip(changes, (path.s[k - 1] for k in path.positions))), \
            "level bookkeeping violated"
    else:
        assert steps[0][0] == diagram.rightmost(path.a)
        assert steps[-1][0] == diagram.rightmost(path.a + 1)


def enumerate_crossings(word, a: int) -> tuple[CrossingPath, ...]:
    return enumerate_paths(word, a, CROSSING)


def enumerate_rigorous(word, a: int) -> tuple[CrossingPath, ...]:
    return enumerate_paths(word, a, RIGOROUS)


def turning_points(path: CrossingPath) -> set[int]:
    return {s[0] for s, t in zip(path.steps, path.turning) if t}


def _sgn(v: int) -> int:
    return (v > 0) - (v < 0)


def r_vec(path: CrossingPath) -> tuple[int, ...]:
    out = [0] * len(path.word)
    for (k, p, q), t in zip(path.steps, path.turning):
        if t:
            out[k - 1] = _sgn(q - p)
    return tuple(out)


def s_vec(path: CrossingPath) -> tuple[int, ...]:
    a = path.a
    out = [0] * len(path.word)
    for (k, p, q), t in zip(path.steps, path.turning):
        if (p <= a) != (q <= a):
            out[k - 1] = 1
        elif not t:
            out[k - 1] = -1
    return tuple(out)


def level_pairs(path: CrossingPath) -> list[tuple[int, int]]:
    """(level-(v), level+(v)) for every vertex of a crossing, in path order.

    The level seen by the path on either side of a vertex is the 1-based
    height of the wire it travels on in the adjacent gap.
    """
    diagram = build(path.word)
    a = path.a
    out = []
    last = len(path.steps) - 1
    for idx, (k, p, q) in enumerate(path.steps):
        d_in = 1 if p <= a else -1
        gap_in = k - 1 if d_in > 0 else k
        before = diagram.height(p, gap_in) + 1
        leaving = path.steps[idx + 1][1] if idx < last else a + 1
        d_out = 1 if leaving <= a else -1
        gap_out = k if d_out > 0 else k - 1
        after = diagram.height(leaving, gap_out) + 1
        out.append((before, after))
    return out


def level_changes(path: CrossingPath) -> list[int]:
    """level+(v) - level-(v) for every vertex of a crossing, in path order."""
    return [after - before for before, after in level_pairs(path)]


def _wire_between(line, x0, x1):
    """Points of a wire polyline from abscissa ``x0`` to ``x1`` (either direction)."""
    xs = [pt[0] for pt in line]
    i, j = xs.index(x0), xs.index(x1)
    if i <= j:
        return list(line[i:j + 1])
    return list(reversed(line[j:i + 1]))


@lru_cache(maxsize=None)
def path_polygon(path: CrossingPath) -> tuple:
    """Closed polygon of a path, completed along the boundary it starts from."""
    diagram = build(path.word)
    lines = planar_geometry(diagram)
    a = path.a
    edge = Fraction(0) if path.kind == CROSSING else Fraction(diagram.N + 1)
    first = path.steps[0][0]
    pts = _wire_between(lines[a], edge, Fraction(first))
    for (k, _, _), (k2, p2, _) in zip(path.steps, path.steps[1:]):
        pts.extend(_wire_between(lines[p2], Fraction(k), Fraction(k2))[1:])
    last = path.steps[-1][0]
    pts.extend(_wire_between(lines[a + 1], Fraction(last), edge)[1:])
    return tuple(pts)


def _on_segment(pt, u, v) -> bool:
    (x, y), (x1, y1), (x2, y2) = pt, u, v
    if (x2 - x1) * (y - y1) != (y2 - y1) * (x - x1):
        return False
    return min(x1, x2) <= x <= max(x1, x2) and min(y1, y2) <= y <= max(y1, y2)


def _in_closed_polygon(pt, poly) -> bool:
    m = len(poly)
    for idx in range(m):
        if _on_segment(pt, poly[idx], poly[(idx + 1) % m]):
            return True
    x, y = pt
    inside = False
    for idx in range(m):
        (x1, y1), (x2, y2) = poly[idx], poly[(idx + 1) % m]
        if (y1 > y) != (y2 > y):
            lhs, rhs = (y - y1) * (x2 - x1), (x - x1) * (y2 - y1)
            if (lhs > rhs) if y2 > y1 else (lhs < rhs):
                inside = not inside
    return inside


@lru_cache(maxsize=None)
def _doubled_polygon(path: CrossingPath) -> tuple:
    # all coordinates are half-integers; doubling keeps the tests in int arithmetic
    return tuple((int(2 * x), int(2 * y)) for x, y in path_polygon(path))


@lru_cache(maxsize=None)
def enclosed_faces(path: CrossingPath) -> frozenset:
    """Sample points (one per gap and slot between adjacent heights) inside the region of a path."""
    diagram = build(path.word)
    poly = _doubled_polygon(path)
    return frozenset(
        (g, h) for g in range(diagram.N + 1) for h in range(diagram.n - 1)
        if _in_closed_polygon((2 * g + 1, 2 * h + 1), poly))


def precedes(g1: CrossingPath, g2: CrossingPath) -> bool:
    """``g1 <= g2``: g1 lies in the closed region cut out by g2.

    Vertices of g1 must be inside the region and the faces enclosed by g1
    must be enclosed by g2; the face test separates paths that differ by a
    detour through vertices of the other.
    """
    if (g1.word, g1.a, g1.kind) != (g2.word, g2.a, g2.kind):
        raise ValueError("paths belong to different words, colours or kinds")
    if g1.steps == g2.steps:
        return True
    word = g1.word
    poly = _doubled_polygon(g2)
    if not all(_in_closed_polygon((2 * k, 2 * word[k - 1] - 1), poly) for k in g1.positions):
        return False
    return enclosed_faces(g1) <= enclosed_faces(g2)


@lru_cache(maxsize=None)
def order_matrix(word, a: int, kind: str = CROSSING):
    paths = enumerate_paths(word, a, kind)
    return tuple(tuple(precedes(g, h) for h in paths) for g in paths)


@dataclass(frozen=True)
class CrossingTable:
    paths: tuple
    r: tuple
    s: tuple
    leq: tuple  # leq[i][j] <=> paths[i] <= paths[j]

    def values(self, x, weight: str) -> list[int]:
        vecs = self.r if weight == "r" else self.s
        return [sum(xi * vi for xi, vi in zip(x, v) if vi) for v in vecs]

    def extremal(self, candidates, which: str) -> int:
        """Index of the unique minimal/maximal element among ``candidates``."""
        if which == "min":
            picks = [i for i in candidates
                     if not any(j != i and self.leq[j][i] for j in candidates)]
        else:
            picks = [i for i in candidates
                     if not any(j != i and self.leq[i][j] for j in candidates)]
        if len(picks) != 1:
            raise NonUniqueExtremum(
                f"{len(picks)} {which}imal elements among "
                f"{[self.paths[i].label() for i in candidates]}")
        return picks[0]

    def select(self, x, weight: str, which: str):
        vals = self.values(x, weight)
        best = max(vals)
        cands = [i for i, v in enumerate(vals) if v == best]
        return best, self.extremal(cands, which)


@lru_cache(maxsize=None)
def crossing_table(word, a: int, kind: str = CROSSING) -> CrossingTable:
    word = tuple(word)
    paths = enumerate_paths(word, a, kind)
    return CrossingTable(paths, tuple(g.r for g in paths), tuple(g.s for g in paths),
                         order_matrix(word, a, kind))


def select_extremal(x, paths, weight: str = "r", which: str = "min"):
    """``(max <x, weight(g)>, extremal argmax g)`` over a set of paths."""
    paths = list(paths)
    if not paths:
        raise ValueError("empty set of paths")
    if weight not in ("r", "s") or which not in ("min", "max"):
        raise ValueError("weight must be r|s and which min|max")
    vecs = [g.r if weight == "r" else g.s for g in paths]
    vals = [sum(xi * vi for xi, vi in zip(x, v)) for v in vecs]
    best = max(vals)
    cands = [i for i, v in enumerate(vals) if v == best]
    leq = [[precedes(g, h) for h in paths] for g in paths]
    table = CrossingTable(tuple(paths), (), (), tuple(map(tuple, leq)))
    return best, paths[table.extremal(cands, which)]
