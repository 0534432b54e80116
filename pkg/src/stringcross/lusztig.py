"""
Crystal structures on Lusztig data and the linear maps F, G relating them to
string data.

Lusztig data are exponent vectors along the reflection ordering of the word;
the cone is all of N^N.  With a weight ``lam`` the operators describe the
B(lambda) structure on L(lam) = {x : eps*_a(x) <= lam_a}; with ``lam=None``
they describe B(infinity) (f ungated).
"""

from __future__ import annotations

from .crossings import crossing_table
from .string_crystal import cartan
from .words import apply_move, move_path, rank_of, reflection_ordering, word_op, word_star

__all__ = [
    "F_map", "F_inv", "lam_bar", "lam_star", "G_map", "G_inv", "root_pairing",
    "lusztig_wt_pairing", "lusztig_weight_vector", "lusztig_eps",
    "lusztig_phi", "lusztig_f", "lusztig_e", "lusztig_eps_star",
    "in_lusztig_polytope", "phi_move", "phi_transition", "DomainError",
]


class DomainError(ValueError):
    """A point lies outside the domain of a map; the message names the constraint."""


def F_map(word, x) -> tuple[int, ...]:
    """F(x)_k = x_k + sum_{l > k} c(i_k, i_l) x_l."""
    N = len(word)
    return tuple(x[k] + sum(cartan(word[k], word[l]) * x[l] for l in range(k + 1, N))
                 for k in range(N))


def F_inv(word, y) -> tuple[int, ...]:
    """Back-substitution; F is upper unitriangular."""
    N = len(word)
    x = [0] * N
    for k in range(N - 1, -1, -1):
        x[k] = y[k] - sum(cartan(word[k], word[l]) * x[l] for l in range(k + 1, N))
    return tuple(x)


def lam_bar(word, lam) -> tuple[int, ...]:
    return tuple(lam[i - 1] for i in word)


def lam_star(lam) -> tuple[int, ...]:
    return tuple(reversed(tuple(lam)))


def G_map(word, lam, x, check: bool = True) -> tuple[int, ...]:
    """G(x) = lam_bar - F(x); lands in L(lam*) for x in the BZ polytope of lam."""
    y = tuple(b - f for b, f in zip(lam_bar(word, lam), F_map(word, x)))
    if check:
        _check_lusztig(word, lam_star(lam), y)
    return y


def G_inv(word, lam, y, check: bool = True) -> tuple[int, ...]:
    if check:
        _check_lusztig(word, lam_star(lam), y)
    return F_inv(word, tuple(b - v for b, v in zip(lam_bar(word, lam), y)))


def _check_lusztig(word, lam, y):
    for k, v in enumerate(y, start=1):
        if v < 0:
            raise DomainError(f"coordinate {k} is negative ({v})")
    for a in range(1, rank_of(word)):
        e = lusztig_eps_star(word, y, a)
        if e > lam[a - 1]:
            raise DomainError(f"eps*_{a} = {e} exceeds {lam[a - 1]}")


def root_pairing(p: int, q: int, a: int) -> int:
    """<alpha_{p,q}, h_a> with alpha_{p,q} = e_p - e_q."""
    return (p == a) - (p == a + 1) - (q == a) + (q == a + 1)


def lusztig_wt_pairing(word, lam, x, a: int) -> int:
    """wt(x)(h_a) for wt(x) = lam - sum_k x_k beta_k."""
    base = lam[a - 1] if lam is not None else 0
    roots = reflection_ordering(word)
    return base - sum(xi * root_pairing(p, q, a) for (p, q), xi in zip(roots, x) if xi)


def lusztig_weight_vector(word, lam, x) -> tuple[int, ...]:
    n = rank_of(word)
    w = [0] * n
    if lam is not None:
        for a, la in enumerate(lam, start=1):
            for s in range(a):
                w[s] += la
    for (p, q), xi in zip(reflection_ordering(word), x):
        w[p - 1] -= xi
        w[q - 1] += xi
    return tuple(w)


def lusztig_eps(word, x, a: int) -> int:
    return max(crossing_table(tuple(word), a).values(x, "s"))


def lusztig_phi(word, lam, x, a: int) -> int:
    return lusztig_eps(word, x, a) + lusztig_wt_pairing(word, lam, x, a)


def lusztig_f(word, lam, x, a: int):
    table = crossing_table(tuple(word), a)
    best, idx = table.select(x, "s", "max")
    if lam is not None and best + lusztig_wt_pairing(word, lam, x, a) <= 0:
        return None
    y = tuple(xi + ri for xi, ri in zip(x, table.r[idx]))
    assert min(y) >= 0, "Lusztig f left N^N"
    return y


def lusztig_e(word, lam, x, a: int, e_sign: str = "corrected"):
    table = crossing_table(tuple(word), a)
    best, idx = table.select(x, "s", "min")
    if best <= 0:
        return None
    sign = 1 if e_sign == "paper" else -1
    y = tuple(xi + sign * ri for xi, ri in zip(x, table.r[idx]))
    if e_sign != "paper":
        assert min(y) >= 0, "Lusztig e left N^N"
    return y


def lusztig_eps_star(word, x, a: int) -> int:
    """eps*_a(x) = eps_a of x reversed, on the word (word*)^op."""
    return lusztig_eps(word_op(word_star(word)), tuple(reversed(x)), a)


def in_lusztig_polytope(word, lam, x) -> bool:
    if min(x) < 0:
        return False
    return all(lusztig_eps_star(word, x, a) <= lam[a - 1] for a in range(1, rank_of(word)))


def phi_move(x, move):
    y = list(x)
    k = move.position - 1
    if move.kind == 2:
        y[k], y[k + 1] = y[k + 1], y[k]
        return tuple(y)
    u, v, w = x[k], x[k + 1], x[k + 2]
    m = min(u, w)
    y[k], y[k + 1], y[k + 2] = v + w - m, m, u + v - m
    return tuple(y)


def phi_transition(word_from, word_to, x) -> tuple[int, ...]:
    word, x = tuple(word_from), tuple(x)
    for m in move_path(word, tuple(word_to)):
        x = phi_move(x, m)
        word = apply_move(word, m)
    return x
