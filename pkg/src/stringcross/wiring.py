"""
Wiring diagrams of reduced words for w0.

Heights are 0-based: wire ``p`` starts at height ``p - 1`` on the left and the
vertex for letter ``j`` sits between heights ``j - 1`` and ``j``.  Geometry is
exact: vertex ``k`` is drawn at ``(k, j - 1/2)`` and every wire runs at its
gap-table height at the half-integer abscissae ``g + 1/2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .words import check_word, rank_of

__all__ = [
    "Vertex", "WiringDiagram", "OrientedDiagram", "build", "orient",
    "planar_geometry", "ascii_art",
]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Vertex:
    position: int
    inversion: tuple[int, int]
    level: int

    def other(self, wire: int) -> int:
        p, q = self.inversion
        return q if wire == p else p

    def to_json(self):
        return {"position": self.position, "inversion": list(self.inversion),
                "level": self.level}


@dataclass(frozen=True)
class WiringDiagram:
    word: tuple[int, ...]
    n: int
    gap_tables: tuple[tuple[int, ...], ...]  # gap g: height -> wire
    vertices: tuple[Vertex, ...]
    wire_positions: dict = field(compare=False, repr=False)  # wire -> positions, left to right

    @property
    def N(self) -> int:
        return len(self.word)

    def vertex(self, k: int) -> Vertex:
        return self.vertices[k - 1]

    def height(self, wire: int, gap: int) -> int:
        return self.gap_tables[gap].index(wire)

    def leftmost(self, wire: int) -> int:
        return self.wire_positions[wire][0]

    def rightmost(self, wire: int) -> int:
        return self.wire_positions[wire][-1]

    def next_on_wire(self, wire: int, k: int, direction: int) -> int | None:
        """Neighbouring vertex of ``k`` along ``wire``; ``direction`` is +1 (right) or -1."""
        pos = self.wire_positions[wire]
        idx = pos.index(k) + direction
        if 0 <= idx < len(pos):
            return pos[idx]
        return None

    def to_json(self):
        return {"word": list(self.word), "n": self.n,
                "vertices": [v.to_json() for v in self.vertices]}


@lru_cache(maxsize=4096)
def build(word) -> WiringDiagram:
    word = check_word(tuple(word))
    n = rank_of(word)
    gap = tuple(range(1, n + 1))
    gaps = [gap]
    vertices = []
    wire_positions = {p: [] for p in range(1, n + 1)}
    for k, i in enumerate(word, start=1):
        p, q = gap[i - 1], gap[i]
        vertices.append(Vertex(k, (p, q), i - 1))
        wire_positions[p].append(k)
        wire_positions[q].append(k)
        g = list(gap)
        g[i - 1], g[i] = q, p
        gap = tuple(g)
        gaps.append(gap)
    return WiringDiagram(word, n, tuple(gaps), tuple(vertices),
                         {p: tuple(v) for p, v in wire_positions.items()})


@dataclass(frozen=True)
class OrientedDiagram:
    """Wire orientations for a colour ``a``; ``reversed`` flips every arrow.

    ``edges`` holds directed wire segments ``(source, target, wire)`` where an
    endpoint is a vertex position or the string ``"L"``/``"R"`` for the left
    and right boundary stubs.
    """
    base: WiringDiagram
    a: int
    reversed: bool
    direction: dict  # wire -> +1 (left to right) or -1
    edges: tuple

    def successor(self, wire: int, k: int) -> int | None:
        return self.base.next_on_wire(wire, k, self.direction[wire])


def orient(diagram: WiringDiagram, a: int, reversed: bool = False) -> OrientedDiagram:
    if not 1 <= a <= diagram.n - 1:
        raise ValueError(f"colour {a} out of range 1..{diagram.n - 1}")
    direction = {}
    edges = []
    for p in range(1, diagram.n + 1):
        d = 1 if (p <= a) != reversed else -1
        direction[p] = d
        chain = ["L", *diagram.wire_positions[p], "R"]
        if d < 0:
            chain.reverse()
        edges.extend((s, t, p) for s, t in zip(chain, chain[1:]))
    return OrientedDiagram(diagram, a, reversed, direction, tuple(edges))


def vertex_point(diagram: WiringDiagram, k: int) -> tuple[Fraction, Fraction]:
    return Fraction(k), diagram.word[k - 1] - HALF


@lru_cache(maxsize=4096)
def planar_geometry(diagram: WiringDiagram) -> dict:
    """Per-wire polylines, left to right, with exact rational coordinates."""
    N = diagram.N
    lines = {}
    for p in range(1, diagram.n + 1):
        pts = [(Fraction(0), Fraction(diagram.height(p, 0)))]
        for g in range(N + 1):
            if g > 0 and p in diagram.vertices[g - 1].inversion:
                pts.append(vertex_point(diagram, g))
            pts.append((g + HALF, Fraction(diagram.height(p, g))))
        pts.append((Fraction(N + 1), Fraction(diagram.height(p, N))))
        lines[p] = tuple(pts)
    return lines


def ascii_art(diagram: WiringDiagram) -> str:
    """Rows top to bottom; wire labels per gap, crossings marked with 'X'."""
    n, N = diagram.n, diagram.N
    rows = []
    width = len(str(n))
    for h in range(n - 1, -1, -1):
        cells = []
        for g in range(N + 1):
            cells.append(str(diagram.gap_tables[g][h]).rjust(width))
            if g < N:
                j = diagram.word[g]
                cells.append("X" if h == j - 1 else " ")
        rows.append(" ".join(cells))
    return "\n".join(rows)
