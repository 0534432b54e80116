"""
Ground truth that does not go through crossings.

* Elementary crystals B_a, the crystal R_lam and the element u_inf of B(inf),
  combined with the tensor product rule.  A string datum x on i becomes
      u_inf (x) b_{i_N}(-x_N) (x) ... (x) b_{i_1}(-x_1)
  and ``R_lam`` appended on the right cuts B(lam) out of B(inf).
* ``Structure``: one crystal structure (operators, eps, phi, weight) on
  integer vectors, with a registry covering everything in the package.
* Graph generation, comparison, canonical isomorphism from the roots, the
  descent/replay transport, and a checker for the crystal axioms.

Tensor convention: f_a(b1 (x) b2) acts on b1 iff phi_a(b1) > eps_a(b2);
e_a acts on b1 iff phi_a(b1) >= eps_a(b2).
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Callable

from . import lusztig as L
from . import string_crystal as S
from .string_crystal import cartan
from .words import check_word, format_word, rank_of

__all__ = [
    "NEG_INF", "OracleError", "UInf", "Elementary", "RLam", "StringFactor",
    "tensor_stats", "tensor_ops", "tensor_from_string", "string_from_tensor",
    "Structure", "make_structure", "STRUCTURES", "CrystalGraph",
    "generate_graph", "compare_graphs", "isomorphism_from_roots", "transport",
    "embedding_check", "check_axioms",
]

NEG_INF = -math.inf


class OracleError(RuntimeError):
    pass


def _alpha(n, a):
    v = [0] * n
    v[a - 1], v[a] = 1, -1
    return tuple(v)


def _pair(w, a):
    return w[a - 1] - w[a]


def _vadd(u, v, s=1):
    return tuple(x + s * y for x, y in zip(u, v))


# -- factors -------------------------------------------------------------------
# Each factor exposes eps(a), phi(a), wt(), h(a) = wt()(h_a) and f(a)/e(a)
# returning a new factor or None.

@dataclass(frozen=True)
class UInf:
    """The highest weight element of B(inf); f on it leaves the embedded image."""
    n: int

    def eps(self, a):
        return 0

    def phi(self, a):
        return 0

    def wt(self):
        return (0,) * self.n

    def h(self, a):
        return 0

    def e(self, a):
        return None

    def f(self, a):
        raise OracleError("f acted on the B(inf) factor: element left the embedding image")


@dataclass(frozen=True)
class Elementary:
    """b_a(k) in B_a: weight k alpha_a, eps_a = -k, phi_a = k, -inf in other colours."""
    n: int
    color: int
    k: int

    def eps(self, a):
        return -self.k if a == self.color else NEG_INF

    def phi(self, a):
        return self.k if a == self.color else NEG_INF

    def wt(self):
        return tuple(self.k * c for c in _alpha(self.n, self.color))

    def h(self, a):
        return self.k * cartan(a, self.color)

    def e(self, a):
        return Elementary(self.n, self.color, self.k + 1) if a == self.color else None

    def f(self, a):
        return Elementary(self.n, self.color, self.k - 1) if a == self.color else None


@dataclass(frozen=True)
class RLam:
    """The one-element crystal R_lam: eps_a = -lam(h_a), phi_a = 0, no arrows."""
    lam: tuple[int, ...]

    def eps(self, a):
        return -self.lam[a - 1]

    def phi(self, a):
        return 0

    def wt(self):
        n = len(self.lam) + 1
        return tuple(sum(self.lam[b] for b in range(s, n - 1)) for s in range(n))

    def h(self, a):
        return self.lam[a - 1]

    def e(self, a):
        return None

    def f(self, a):
        return None


@dataclass(frozen=True)
class StringFactor:
    """A vector carrying one of the registered structures, as a tensor factor."""
    structure: "Structure"
    x: tuple[int, ...]

    def eps(self, a):
        return self.structure.eps(self.x, a)

    def phi(self, a):
        return self.structure.phi(self.x, a)

    def wt(self):
        return self.structure.wt(self.x)

    def h(self, a):
        return _pair(self.wt(), a)

    def e(self, a):
        y = self.structure.e(self.x, a)
        return None if y is None else StringFactor(self.structure, y)

    def f(self, a):
        y = self.structure.f(self.x, a)
        return None if y is None else StringFactor(self.structure, y)


def tensor_stats(factors, a):
    """Prefix statistics (eps_a, phi_a, wt(h_a)) of b1 (x) ... (x) bj for every j."""
    out = []
    eps = phi = h = None
    for b in factors:
        e2, p2, h2 = b.eps(a), b.phi(a), b.h(a)
        if h is None:
            eps, phi, h = e2, p2, h2
        else:
            eps = max(eps, e2 - h)
            phi = max(p2, phi + h2)
            h += h2
        out.append((eps, phi, h))
    return out


def _act(factors, a, op):
    stats = tensor_stats(factors, a)
    j = len(factors) - 1
    while j > 0:
        left_phi = stats[j - 1][1]
        right_eps = factors[j].eps(a)
        acts_left = left_phi > right_eps if op == "f" else left_phi >= right_eps
        if not acts_left:
            break
        j -= 1
    new = getattr(factors[j], op)(a)
    if new is None:
        return None
    return factors[:j] + (new,) + factors[j + 1:]


def tensor_ops(factors, a: int, op: str):
    factors = tuple(factors)
    if op in ("f", "e"):
        return _act(factors, a, op)
    if op == "wt":
        wt = factors[0].wt()
        for b in factors[1:]:
            wt = _vadd(wt, b.wt())
        return wt
    eps, phi, _ = tensor_stats(factors, a)[-1]
    if op == "eps":
        return eps
    if op == "phi":
        return phi
    raise ValueError(f"unknown tensor operation {op!r}")


def tensor_from_string(word, x, lam=None):
    n = rank_of(word)
    factors = [UInf(n)] + [Elementary(n, i, -xi) for i, xi in zip(reversed(word), reversed(x))]
    if lam is not None:
        factors.append(RLam(tuple(lam)))
    return tuple(factors)


def string_from_tensor(factors) -> tuple[int, ...]:
    elems = [b for b in factors if isinstance(b, Elementary)]
    return tuple(-b.k for b in reversed(elems))


# -- structures ----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Structure:
    name: str
    word: tuple[int, ...]
    lam: tuple[int, ...] | None
    f: Callable
    e: Callable
    eps: Callable
    wt: Callable
    bounded: bool

    @property
    def n(self):
        return rank_of(self.word)

    def phi(self, x, a):
        return self.eps(x, a) + _pair(self.wt(x), a)

    def describe(self):
        s = f"{self.name}[{format_word(self.word)}]"
        if self.lam is not None:
            s += f"(lambda={format_word(self.lam)})"
        return s


def _tensor_structure(word, lam, name):
    def f(x, a):
        t = tensor_ops(tensor_from_string(word, x, lam), a, "f")
        return None if t is None else string_from_tensor(t)

    def e(x, a):
        t = tensor_ops(tensor_from_string(word, x, lam), a, "e")
        return None if t is None else string_from_tensor(t)

    def eps(x, a):
        return tensor_ops(tensor_from_string(word, x, lam), a, "eps")

    return Structure(name, word, lam, f, e, eps,
                     lambda x: S.weight_vector(word, lam, x), lam is not None)


STRUCTURES = ("binf", "star", "star-psi", "bz", "bz-psi", "nz", "nz-literal",
              "lusztig", "lusztig-inf", "tensor-binf", "tensor-nz")


def make_structure(name: str, word, lam=None, *, e_sign: str = "corrected",
                   variant: str = "involutive") -> Structure:
    """
    Build a structure by name.  ``lam`` is required by bz, bz-psi, nz,
    nz-literal, lusztig and tensor-nz and ignored otherwise.
    """
    word = check_word(word)
    if name in ("bz", "bz-psi", "nz", "nz-literal", "lusztig", "tensor-nz"):
        if lam is None:
            raise ValueError(f"structure {name} needs lambda")
        lam = tuple(lam)
        if len(lam) != rank_of(word) - 1 or min(lam) < 0:
            raise ValueError(f"lambda must be {rank_of(word) - 1} nonnegative integers")
    else:
        lam = None
    wt_s = lambda x: S.weight_vector(word, lam, x)
    if name == "binf":
        return Structure(name, word, None, lambda x, a: S.binf_f(word, x, a),
                         lambda x, a: S.binf_e(word, x, a),
                         lambda x, a: S.binf_eps(word, x, a), wt_s, False)
    if name == "star":
        return Structure(name, word, None, lambda x, a: S.star_f(word, x, a),
                         lambda x, a: S.star_e(word, x, a, e_sign),
                         lambda x, a: S.eps_star(word, x, a), wt_s, False)
    if name == "star-psi":
        return Structure(name, word, None, lambda x, a: S.star_f_psi(word, x, a, variant),
                         lambda x, a: S.star_e_psi(word, x, a, variant),
                         lambda x, a: S.eps_star_psi(word, x, a, variant), wt_s, False)
    if name == "bz":
        return Structure(name, word, lam, lambda x, a: S.bz_f(word, lam, x, a),
                         lambda x, a: S.bz_e(word, lam, x, a, e_sign),
                         lambda x, a: S.bz_eps(word, lam, x, a), wt_s, True)
    if name == "bz-psi":
        def f(x, a):
            if S.eps_star_psi(word, x, a, variant) + S.wt_pairing(word, lam, x, a) <= 0:
                return None
            return S.star_f_psi(word, x, a, variant)
        return Structure(name, word, lam, f,
                         lambda x, a: S.star_e_psi(word, x, a, variant),
                         lambda x, a: S.eps_star_psi(word, x, a, variant), wt_s, True)
    if name in ("nz", "nz-literal"):
        lit = name == "nz-literal"
        return Structure(name, word, lam, lambda x, a: S.nz_f(word, lam, x, a, lit),
                         lambda x, a: S.nz_e(word, lam, x, a, lit),
                         lambda x, a: S.nz_eps(word, lam, x, a), wt_s, True)
    if name in ("lusztig", "lusztig-inf"):
        return Structure(name, word, lam, lambda x, a: L.lusztig_f(word, lam, x, a),
                         lambda x, a: L.lusztig_e(word, lam, x, a, e_sign),
                         lambda x, a: L.lusztig_eps(word, x, a),
                         lambda x: L.lusztig_weight_vector(word, lam, x), lam is not None)
    if name == "tensor-binf":
        return _tensor_structure(word, None, name)
    if name == "tensor-nz":
        return _tensor_structure(word, lam, name)
    raise ValueError(f"unknown structure {name!r}; choose from {', '.join(STRUCTURES)}")


# -- graphs --------------------------------------------------------------------

@dataclass
class CrystalGraph:
    structure: str
    root: tuple[int, ...]
    nodes: list[tuple[int, ...]]
    edges: set = field(default_factory=set)  # (source, colour, target), f-direction

    def edge_list(self):
        return sorted(self.edges)

    def to_json(self):
        return {"structure": self.structure, "root": list(self.root),
                "nodes": [list(v) for v in self.nodes],
                "edges": [[list(s), a, list(t)] for s, a, t in self.edge_list()]}

    @classmethod
    def from_json(cls, d):
        return cls(d["structure"], tuple(d["root"]), [tuple(v) for v in d["nodes"]],
                   {(tuple(s), a, tuple(t)) for s, a, t in d["edges"]})

    def to_dot(self):
        lab = lambda v: '"' + ",".join(map(str, v)) + '"'
        lines = [f"digraph {json.dumps(self.structure)} {{"]
        lines += [f"  {lab(v)};" for v in self.nodes]
        lines += [f"  {lab(s)} -> {lab(t)} [label={a}];" for s, a, t in self.edge_list()]
        lines.append("}")
        return "\n".join(lines)


def generate_graph(structure: Structure, seed=None, node_bound: int = 10**6,
                   depth: int | None = None) -> CrystalGraph:
    """
    Breadth-first closure of ``seed`` (default 0) under every f_a, and under
    every e_a too when the structure is bounded.  Unbounded structures need a
    ``depth`` (number of f steps from the seed).
    """
    N = len(structure.word)
    seed = tuple(seed) if seed is not None else (0,) * N
    if not structure.bounded and depth is None:
        raise ValueError(f"{structure.name} is infinite; pass a depth")
    colours = range(1, structure.n)
    dist = {seed: 0}
    queue = deque([seed])
    edges = set()
    while queue:
        x = queue.popleft()
        d = dist[x]
        for a in colours:
            moves = []
            if depth is None or d < depth:
                y = structure.f(x, a)
                if y is not None:
                    edges.add((x, a, y))
                    moves.append(y)
            if structure.bounded:
                y = structure.e(x, a)
                if y is not None:
                    edges.add((y, a, x))
                    moves.append(y)
            for y in moves:
                if y not in dist:
                    if len(dist) >= node_bound:
                        raise OracleError(f"node bound {node_bound} exceeded")
                    dist[y] = d + 1
                    queue.append(y)
    return CrystalGraph(structure.describe(), seed, sorted(dist), edges)


@dataclass
class Comparison:
    equal: bool
    discrepancies: list

    def to_json(self):
        return {"equal": self.equal, "discrepancies": self.discrepancies}


def compare_graphs(g1: CrystalGraph, g2: CrystalGraph, node_map: Callable | None = None,
                   reverse: bool = False, limit: int = 10) -> Comparison:
    """
    Exact comparison after mapping g1's vertices through ``node_map``.
    ``reverse=True`` compares g1's f-arrows with g2's e-arrows.
    """
    m = node_map or (lambda v: v)
    nodes1 = {m(v) for v in g1.nodes}
    nodes2 = set(g2.nodes)
    e1 = {(m(t), a, m(s)) if reverse else (m(s), a, m(t)) for s, a, t in g1.edges}
    out = []
    for v in sorted(nodes1 - nodes2):
        out.append({"node only in first": list(v)})
    for v in sorted(nodes2 - nodes1):
        out.append({"node only in second": list(v)})
    for s, a, t in sorted(e1 - g2.edges):
        out.append({"edge only in first": [list(s), a, list(t)]})
    for s, a, t in sorted(g2.edges - e1):
        out.append({"edge only in second": [list(s), a, list(t)]})
    return Comparison(not out, out[:limit])


def isomorphism_from_roots(g1: CrystalGraph, g2: CrystalGraph):
    """
    The unique colour-preserving map sending root to root and commuting with
    the f-arrows (crystals generated by their roots admit at most one).
    Returns ``(mapping, Comparison)``; ``mapping`` is None on failure.
    """
    out1, out2 = {}, {}
    for s, a, t in g1.edges:
        out1[(s, a)] = t
    for s, a, t in g2.edges:
        out2[(s, a)] = t
    mapping = {g1.root: g2.root}
    queue = deque([g1.root])
    problems = []
    while queue:
        v = queue.popleft()
        w = mapping[v]
        for a in range(1, 64):
            t1, t2 = out1.get((v, a)), out2.get((w, a))
            if t1 is None and t2 is None:
                continue
            if (t1 is None) != (t2 is None):
                problems.append({"arrow mismatch": [list(v), a, list(w)]})
                continue
            if t1 in mapping:
                if mapping[t1] != t2:
                    problems.append({"inconsistent image": [list(t1), list(mapping[t1]), list(t2)]})
                continue
            mapping[t1] = t2
            queue.append(t1)
    if problems:
        return None, Comparison(False, problems[:10])
    cmp = compare_graphs(g1, g2, mapping.__getitem__ if len(mapping) == len(g1.nodes)
                         else None)
    if len(mapping) != len(g1.nodes):
        return None, Comparison(False, [{"unreached nodes": len(g1.nodes) - len(mapping)}])
    return (mapping if cmp.equal else None), cmp


def transport(x, src: Structure, dst: Structure, policy: str = "smallest",
              max_steps: int = 10**6) -> tuple[int, ...]:
    """
    Descend ``x`` to the highest weight element of ``src`` by e-operators,
    then replay the colours in reverse with ``dst``'s f-operators from 0.
    """
    colours = list(range(1, src.n))
    if policy == "largest":
        colours.reverse()
    elif policy != "smallest":
        raise ValueError(f"unknown descent policy {policy!r}")
    path = []
    x = tuple(x)
    while True:
        for a in colours:
            y = src.e(x, a)
            if y is not None:
                path.append(a)
                x = y
                break
        else:
            break
        if len(path) > max_steps:
            raise OracleError("descent does not terminate")
    if any(x):
        raise OracleError(f"descent stalled at {x}, not the highest weight element")
    y = (0,) * len(dst.word)
    for a in reversed(path):
        y = dst.f(y, a)
        if y is None:
            raise OracleError(f"replay killed by f_{a} in {dst.describe()}")
    return y


def embedding_check(word, x, a: int) -> bool:
    """
    x = (e*_a)^m x' tensor b_a(-m) with m = eps*_a(x): m star lowerings are
    defined, the result has eps*_a = 0, and the weight rises by m alpha_a.
    """
    word = tuple(word)
    m = S.eps_star(word, x, a)
    y = tuple(x)
    for _ in range(m):
        y = S.star_e(word, y, a)
        if y is None:
            return False
    if S.eps_star(word, y, a) != 0 or S.star_e(word, y, a) is not None:
        return False
    n = rank_of(word)
    expect = _vadd(S.weight_vector(word, None, x), _alpha(n, a), m)
    return S.weight_vector(word, None, y) == expect


def check_axioms(structure: Structure, graph: CrystalGraph, normal: bool | None = None,
                 limit: int = 10) -> list[dict]:
    """
    Violations of the crystal axioms on ``graph``:
      C1 phi = eps + wt(h_a);  C2/C3 weight and eps/phi shift along arrows;
      C4 f x = y iff e y = x.  eps always counts the e-string; ``normal``
    additionally checks that phi counts the f-string (default: bounded only).
    C5 is vacuous here: no statistic is ever -inf on these data.
    """
    if normal is None:
        normal = structure.bounded
    bad = []
    n = structure.n

    def report(kind, x, a, detail=None):
        if len(bad) < limit:
            bad.append({"axiom": kind, "x": list(x), "a": a, "detail": detail})

    for x in graph.nodes:
        wx = structure.wt(x)
        for a in range(1, n):
            ex, px = structure.eps(x, a), structure.phi(x, a)
            if px != ex + _pair(wx, a):
                report("C1", x, a)
            if ex < 0 and structure.bounded:
                report("C1", x, a, "negative eps")
            y = structure.f(x, a)
            if y is not None:
                if structure.wt(y) != _vadd(wx, _alpha(n, a), -1):
                    report("C3", x, a, "weight")
                if structure.eps(y, a) != ex + 1 or structure.phi(y, a) != px - 1:
                    report("C3", x, a, "eps/phi")
                if structure.e(y, a) != x:
                    report("C4", x, a, "e f x != x")
            z = structure.e(x, a)
            if z is not None:
                if structure.wt(z) != _vadd(wx, _alpha(n, a)):
                    report("C2", x, a, "weight")
                if structure.eps(z, a) != ex - 1 or structure.phi(z, a) != px + 1:
                    report("C2", x, a, "eps/phi")
                if structure.f(z, a) != x:
                    report("C4", x, a, "f e x != x")
            elif ex > 0:
                report("normal", x, a, "eps > 0 but e kills")
            if normal and y is None and px > 0:
                report("normal", x, a, "phi > 0 but f kills")
            if normal and px == 0 and y is not None:
                report("normal", x, a, "phi = 0 but f acts")
            if ex == 0 and z is not None:
                report("normal", x, a, "eps = 0 but e acts")
    return bad
