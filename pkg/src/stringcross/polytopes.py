"""
H-descriptions of the string cone and the two families of string polytopes,
plus exact lattice-point enumeration.

    cone  <x, r(g)> >= 0            g rigorous a-path, every a
    bz    cone and eta_k(x) <= lam_{i_k}
    nz    cone and <x, r(g)> <= lam_a    g an a-crossing

Forms are kept primitive (coefficients divided by their gcd) and deduplicated;
redundant forms are not pruned.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod

from .crossings import CROSSING, RIGOROUS, crossing_table
from .string_crystal import cartan, weight_vector
from .words import check_word, format_word, rank_of

__all__ = [
    "LinearForm", "InequalitySystem", "string_cone_ineqs", "bz_ineqs",
    "nz_ineqs", "lattice_points", "weyl_dim", "character", "height_cap",
    "UnboundedError",
]


class UnboundedError(ValueError):
    pass


@dataclass(frozen=True)
class LinearForm:
    coeffs: tuple[int, ...]
    rel: str  # ">=" or "<="
    rhs: int
    provenance: str = ""

    def holds(self, x) -> bool:
        v = sum(c * xi for c, xi in zip(self.coeffs, x))
        return v >= self.rhs if self.rel == ">=" else v <= self.rhs

    def key(self):
        return self.coeffs, self.rel, self.rhs

    def to_text(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs, start=1):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(f"{sign} {mag}x{k}")
        lhs = " ".join(terms).lstrip("+ ") or "0"
        if lhs.startswith("- "):
            lhs = "-" + lhs[2:]
        return f"{lhs} {self.rel} {self.rhs}"

    def to_json(self):
        return {"coeffs": list(self.coeffs), "rel": self.rel, "rhs": self.rhs,
                "provenance": self.provenance}

    @classmethod
    def from_json(cls, d):
        return cls(tuple(d["coeffs"]), d["rel"], d["rhs"], d.get("provenance", ""))


def _normalised(coeffs, rel, rhs, provenance) -> LinearForm | None:
    g = gcd(*coeffs) if any(coeffs) else 0
    if g == 0:
        ok = 0 >= rhs if rel == ">=" else 0 <= rhs
        if not ok:
            raise ValueError(f"infeasible constant form 0 {rel} {rhs}")
        return None
    # a rational bound on an integer combination can be rounded inwards
    if rel == ">=":
        rhs = -((-rhs) // g)
    else:
        rhs = rhs // g
    return LinearForm(tuple(c // g for c in coeffs), rel, rhs, provenance)


@dataclass
class InequalitySystem:
    word: tuple[int, ...]
    forms: list[LinearForm] = field(default_factory=list)
    kind: str = "cone"
    lam: tuple[int, ...] | None = None

    def add(self, coeffs, rel, rhs, provenance=""):
        f = _normalised(tuple(coeffs), rel, rhs, provenance)
        if f is None:
            return
        if f.key() not in {g.key() for g in self.forms}:
            self.forms.append(f)

    def contains(self, x) -> bool:
        return all(f.holds(x) for f in self.forms)

    def violated(self, x) -> list[LinearForm]:
        return [f for f in self.forms if not f.holds(x)]

    def __len__(self):
        return len(self.forms)

    def __iter__(self):
        return iter(self.forms)

    def to_json(self):
        out = {"word": list(self.word), "kind": self.kind,
               "forms": [f.to_json() for f in self.forms]}
        if self.lam is not None:
            out["lambda"] = list(self.lam)
        return out

    @classmethod
    def from_json(cls, d):
        lam = tuple(d["lambda"]) if "lambda" in d else None
        return cls(tuple(d["word"]), [LinearForm.from_json(f) for f in d["forms"]],
                   d.get("kind", "cone"), lam)

    def to_text(self) -> str:
        head = f"# {self.kind} word={format_word(self.word)}"
        if self.lam is not None:
            head += f" lambda={format_word(self.lam)}"
        return "\n".join([head] + [f.to_text() for f in self.forms])


def string_cone_ineqs(word) -> InequalitySystem:
    word = check_word(word)
    sys_ = InequalitySystem(word)
    for a in range(1, rank_of(word)):
        table = crossing_table(word, a, RIGOROUS)
        for path, r in zip(table.paths, table.r):
            sys_.add(r, ">=", 0, f"cone a={a} {path.label()}")
    return sys_


def _check_lambda(word, lam):
    lam = tuple(lam)
    if len(lam) != rank_of(word) - 1 or min(lam) < 0:
        raise ValueError(f"lambda must be {rank_of(word) - 1} nonnegative integers")
    return lam


def bz_ineqs(word, lam) -> InequalitySystem:
    word = check_word(word)
    lam = _check_lambda(word, lam)
    sys_ = string_cone_ineqs(word)
    sys_.kind, sys_.lam = "bz", lam
    N = len(word)
    for k in range(N):
        row = [0] * N
        row[k] = 1
        for l in range(k + 1, N):
            row[l] = cartan(word[k], word[l])
        sys_.add(row, "<=", lam[word[k] - 1], f"bz eta_{k + 1}")
    return sys_


def nz_ineqs(word, lam) -> InequalitySystem:
    word = check_word(word)
    lam = _check_lambda(word, lam)
    sys_ = string_cone_ineqs(word)
    sys_.kind, sys_.lam = "nz", lam
    for a in range(1, rank_of(word)):
        table = crossing_table(word, a, CROSSING)
        for path, r in zip(table.paths, table.r):
            sys_.add(r, "<=", lam[a - 1], f"nz a={a} {path.label()}")
    return sys_


def height_cap(n: int, lam) -> int:
    """Height of lam - w0(lam); bounds the coordinate sum of every string datum in B(lam)."""
    return sum(la * a * (n - a) for a, la in enumerate(lam, start=1))


def lattice_points(system: InequalitySystem, hint: int | None = None) -> list[tuple[int, ...]]:
    """
    All integer points of ``system`` with nonnegative coordinates, sorted.

    Coordinates are fixed from x_N down to x_1.  The unfixed coordinates are
    confined to the simplex {y >= 0, sum y <= budget}, where the budget comes
    from ``hint`` or, for bz/nz systems, from the height of lam - w0(lam); a
    form is abandoned as soon as it cannot be satisfied over that simplex.
    """
    N = len(system.word)
    if hint is None:
        if system.lam is None:
            raise UnboundedError("the cone is unbounded; pass a hint for the coordinate sum")
        hint = height_cap(rank_of(system.word), system.lam)
    # normalise every form to  c . x <= b
    rows = []
    for f in system.forms:
        if f.rel == "<=":
            rows.append((f.coeffs, f.rhs))
        else:
            rows.append((tuple(-c for c in f.coeffs), -f.rhs))
    # min coefficient over the still-free prefix x_1..x_k (k = 0 means none free)
    prefix_min = [[min((0,) + c[:k]) for k in range(N + 1)] for c, _ in rows]
    out = []
    x = [0] * N
    partial = [0] * len(rows)

    def feasible(k, budget):
        for j, (_, b) in enumerate(rows):
            if partial[j] + prefix_min[j][k] * budget > b:
                return False
        return True

    def dfs(k, budget):
        # coordinates k..N-1 (0-based) are fixed; choose x[k-1]
        if k == 0:
            out.append(tuple(x))
            return
        for v in range(budget + 1):
            x[k - 1] = v
            for j, (c, _) in enumerate(rows):
                partial[j] += c[k - 1] * v
            if feasible(k - 1, budget - v):
                dfs(k - 1, budget - v)
            for j, (c, _) in enumerate(rows):
                partial[j] -= c[k - 1] * v
        x[k - 1] = 0

    if feasible(N, hint):
        dfs(N, hint)
    out.sort()
    return out


def weyl_dim(n: int, lam) -> int:
    lam = tuple(lam)
    if len(lam) != n - 1 or min(lam, default=0) < 0:
        raise ValueError(f"lambda must be {n - 1} nonnegative integers")
    num = prod(Fraction(sum(lam[k:l]) + l - k, l - k)
               for k in range(n) for l in range(k + 1, n))
    assert num.denominator == 1
    return int(num)


def character(points, word, lam) -> Counter:
    """Multiset of weights (epsilon coordinates) of string data."""
    return Counter(weight_vector(word, lam, x) for x in points)
