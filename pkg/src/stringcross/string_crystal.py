"""
Crystal structures on string data.

* ``binf``: the B(infinity) structure through the statistics eta_k.
* ``star``: the B(infinity)* structure, either through crossings (the Dual
  Crossing Formula) or through the transition maps ``psi``.
* ``bz``: B(lambda) on Littelmann--Berenstein--Zelevinsky lattice points.
* ``nz``: B(lambda) on Nakashima--Zelevinsky lattice points.

Operators return ``None`` when they kill an element.
"""

from __future__ import annotations

from .crossings import crossing_table
from .words import apply_move, move_path, rank_of, word_starting_with

__all__ = [
    "cartan", "eta", "wt_pairing", "wt_pairings", "weight_vector",
    "binf_eps", "binf_f", "binf_e", "binf_phi", "psi", "psi_move", "eps_star",
    "eps_star_psi", "star_f", "star_e", "star_f_psi", "star_e_psi",
    "bz_eps", "bz_phi", "bz_f", "bz_e", "nz_eps", "nz_phi", "nz_f", "nz_e",
    "PSI_VARIANTS", "E_SIGNS",
]

PSI_VARIANTS = ("involutive", "paper")
E_SIGNS = ("corrected", "paper")


def cartan(i: int, j: int) -> int:
    if i == j:
        return 2
    return -1 if abs(i - j) == 1 else 0


def eta(word, x) -> tuple[int, ...]:
    """eta_k(x) = x_k + sum_{l > k} c(i_k, i_l) x_l, by a right-to-left sweep."""
    n = rank_of(word)
    # acc[b] = sum over l > k with i_l = b of x_l
    acc = [0] * (n + 1)
    out = [0] * len(word)
    for k in range(len(word) - 1, -1, -1):
        i = word[k]
        out[k] = x[k] + 2 * acc[i] - acc[i - 1] - (acc[i + 1] if i + 1 < n else 0)
        acc[i] += x[k]
    return tuple(out)


def wt_pairing(word, lam, x, a: int) -> int:
    """wt(x)(h_a) for wt(x) = lambda - sum_k x_k alpha_{i_k}; ``lam=None`` means 0."""
    base = lam[a - 1] if lam is not None else 0
    return base - sum(cartan(a, i) * xi for i, xi in zip(word, x) if xi)


def wt_pairings(word, lam, x) -> tuple[int, ...]:
    n = rank_of(word)
    return tuple(wt_pairing(word, lam, x, a) for a in range(1, n))


def weight_vector(word, lam, x) -> tuple[int, ...]:
    """wt(x) in epsilon coordinates (length n)."""
    n = rank_of(word)
    w = [0] * n
    if lam is not None:
        for a, la in enumerate(lam, start=1):
            for s in range(a):
                w[s] += la
    for i, xi in zip(word, x):
        w[i - 1] -= xi
        w[i] += xi
    return tuple(w)


def _add(x, v, sign=1):
    return tuple(xi + sign * vi for xi, vi in zip(x, v))


def _bump(x, k, d):
    y = list(x)
    y[k] += d
    return tuple(y)


# -- B(infinity) via eta ---------------------------------------------------

def _eta_argmax(word, x, a):
    et = eta(word, x)
    ks = [k for k, i in enumerate(word) if i == a]
    if not ks:
        raise ValueError(f"colour {a} does not occur in the word")
    best = max(et[k] for k in ks)
    arg = [k for k in ks if et[k] == best]
    return best, arg[0], arg[-1]


def binf_eps(word, x, a: int) -> int:
    return _eta_argmax(word, x, a)[0]


def binf_phi(word, x, a: int) -> int:
    return binf_eps(word, x, a) + wt_pairing(word, None, x, a)


def binf_f(word, x, a: int):
    _, lo, _ = _eta_argmax(word, x, a)
    return _bump(x, lo, 1)


def binf_e(word, x, a: int):
    best, _, hi = _eta_argmax(word, x, a)
    if best <= 0:
        return None
    return _bump(x, hi, -1)


# -- transition maps ---------------------------------------------------------

def psi_move(x, move, variant: str = "involutive"):
    """String transition map for a single move (positions are 1-based)."""
    y = list(x)
    k = move.position - 1
    if move.kind == 2:
        y[k], y[k + 1] = y[k + 1], y[k]
        return tuple(y)
    u, v, w = x[k], x[k + 1], x[k + 2]
    y[k] = max(w, v - u)
    y[k + 1] = u + w
    if variant == "involutive":
        y[k + 2] = min(u, v - w)
    elif variant == "paper":
        y[k + 2] = min(u, w)
    else:
        raise ValueError(f"unknown psi variant {variant!r}")
    return tuple(y)


def _psi_along(word, moves, x, variant):
    for m in moves:
        x = psi_move(x, m, variant)
        word = apply_move(word, m)
    return x


def psi(word_from, word_to, x, variant: str = "involutive"):
    word_from, word_to = tuple(word_from), tuple(word_to)
    return _psi_along(word_from, move_path(word_from, word_to), tuple(x), variant)


def _to_front(word, x, a, variant):
    target, moves = word_starting_with(tuple(word), a)
    return target, _psi_along(tuple(word), moves, tuple(x), variant)


def eps_star_psi(word, x, a: int, variant: str = "involutive") -> int:
    return _to_front(word, x, a, variant)[1][0]


def star_f_psi(word, x, a: int, variant: str = "involutive"):
    target, y = _to_front(word, x, a, variant)
    return psi(target, word, _bump(y, 0, 1), variant)


def star_e_psi(word, x, a: int, variant: str = "involutive"):
    target, y = _to_front(word, x, a, variant)
    if y[0] <= 0:
        return None
    return psi(target, word, _bump(y, 0, -1), variant)


# -- B(infinity)* via crossings (Dual Crossing Formula) ----------------------

def eps_star(word, x, a: int, route: str = "crossing", variant: str = "involutive") -> int:
    if route == "psi":
        return eps_star_psi(word, x, a, variant)
    table = crossing_table(tuple(word), a)
    return max(table.values(x, "r"))


def star_f(word, x, a: int):
    table = crossing_table(tuple(word), a)
    _, idx = table.select(x, "r", "min")
    return _add(x, table.s[idx])


def star_e(word, x, a: int, e_sign: str = "corrected"):
    table = crossing_table(tuple(word), a)
    best, idx = table.select(x, "r", "max")
    if best <= 0:
        return None
    return _add(x, table.s[idx], 1 if e_sign == "paper" else -1)


# -- B(lambda) on Littelmann--Berenstein--Zelevinsky lattice points ---------

def bz_eps(word, lam, x, a: int) -> int:
    return eps_star(word, x, a)


def bz_phi(word, lam, x, a: int) -> int:
    return bz_eps(word, lam, x, a) + wt_pairing(word, lam, x, a)


def bz_f(word, lam, x, a: int):
    if bz_phi(word, lam, x, a) <= 0:
        return None
    return star_f(word, x, a)


def bz_e(word, lam, x, a: int, e_sign: str = "corrected"):
    return star_e(word, x, a, e_sign)


# -- B(lambda) on Nakashima--Zelevinsky lattice points ----------------------

def nz_eps(word, lam, x, a: int) -> int:
    return binf_eps(word, x, a)


def nz_phi(word, lam, x, a: int) -> int:
    return nz_eps(word, lam, x, a) + wt_pairing(word, lam, x, a)


def nz_f(word, lam, x, a: int, literal: bool = False):
    """Gated B(infinity) f.  ``literal=True`` adds at the maximal argmax position instead."""
    if nz_phi(word, lam, x, a) <= 0:
        return None
    if not literal:
        return binf_f(word, x, a)
    _, _, hi = _eta_argmax(word, x, a)
    return _bump(x, hi, 1)


def nz_e(word, lam, x, a: int, literal: bool = False):
    best, lo, hi = _eta_argmax(word, x, a)
    if best <= 0:
        return None
    return _bump(x, lo if literal else hi, -1)
