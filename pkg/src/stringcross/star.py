"""
The Kashiwara *-involution on Lusztig data and on string data.

On Lusztig data * is a relabelling: the datum of b on a word i is the datum of
b* on (i*)^op, read backwards.  On string data it is computed through the
word iota0 = (1, 2,1, 3,2,1, ...), where string and Lusztig data are related
by the linear block-sum map ``str_from_lusztig_iota0``:

    string(b*) on j  =  Psi(iota0* -> j) . S . rev . Phi(iota0 -> iota0^op) . S^-1 . Psi(i -> iota0)

Here S is the same matrix for iota0 and iota0* (the Dynkin flip fixes it).
"""

from __future__ import annotations

import random

from .lusztig import phi_transition
from .string_crystal import binf_f, psi
from .words import check_word, iota0, num_positive_roots, rank_of, word_op, word_star

__all__ = [
    "iota0", "str_from_lusztig_iota0", "lusztig_from_str_iota0", "star_lusztig",
    "star_string", "star_string_iota0", "star_matrix_iota0", "LinearityError",
    "random_cone_point",
]


class LinearityError(RuntimeError):
    pass


def _blocks(n):
    """(start, length) of the descending blocks k,k-1,...,1 of iota0, 0-based."""
    start = 0
    for k in range(1, n):
        yield start, k
        start += k


def _check_len(n, x):
    if len(x) != num_positive_roots(n):
        raise ValueError(f"expected {num_positive_roots(n)} coordinates, got {len(x)}")


def str_from_lusztig_iota0(n: int, x) -> tuple[int, ...]:
    """Inside a block at l..l+m, coordinate l+j becomes x_l + ... + x_{l+m-j}."""
    _check_len(n, x)
    out = list(x)
    for l, size in _blocks(n):
        m = size - 1
        for j in range(size):
            out[l + j] = sum(x[l:l + m - j + 1])
    return tuple(out)


def lusztig_from_str_iota0(n: int, y) -> tuple[int, ...]:
    _check_len(n, y)
    out = list(y)
    for l, size in _blocks(n):
        m = size - 1
        out[l] = y[l + m]
        for i in range(1, size):
            out[l + i] = y[l + m - i] - y[l + m - i + 1]
    return tuple(out)


def star_lusztig(word, x):
    word = check_word(word)
    if len(x) != len(word):
        raise ValueError("datum length does not match the word")
    return word_op(word_star(word)), tuple(reversed(tuple(x)))


def star_string_iota0(n: int, y) -> tuple[int, ...]:
    """string data of b on iota0  ->  string data of b* on iota0*."""
    i0 = iota0(n)
    lus = lusztig_from_str_iota0(n, y)
    lus_op = phi_transition(i0, word_op(i0), lus)
    _, lus_star = star_lusztig(word_op(i0), lus_op)  # now a datum on iota0*
    return str_from_lusztig_iota0(n, lus_star)


def star_string(word_from, word_to, x, variant: str = "involutive") -> tuple[int, ...]:
    word_from, word_to = check_word(word_from), check_word(word_to)
    n = rank_of(word_from)
    if rank_of(word_to) != n:
        raise ValueError("words of different rank")
    if len(x) != len(word_from):
        raise ValueError("datum length does not match the word")
    i0 = iota0(n)
    y = star_string_iota0(n, psi(word_from, i0, tuple(x), variant))
    return psi(word_star(i0), word_to, y, variant)


def random_cone_point(word, rng: random.Random, steps: int = 8) -> tuple[int, ...]:
    """A string datum reached by a random walk of B(infinity) f-operators from 0."""
    n = rank_of(word)
    x = (0,) * len(word)
    for _ in range(rng.randint(0, steps)):
        x = binf_f(word, x, rng.randint(1, n - 1))
    return x


def star_matrix_iota0(n: int, samples: int = 100, seed: int = 0) -> list[list[int]]:
    """
    Matrix of string data on iota0 -> string data of the star on iota0*.

    Columns are images of unit vectors.  Additivity is checked on all pairs
    of unit vectors and on ``samples`` random pairs of cone points first.
    """
    i0 = iota0(n)
    N = len(i0)
    f = lambda v: star_string_iota0(n, v)
    units = [tuple(int(i == k) for i in range(N)) for k in range(N)]
    cols = [f(u) for u in units]

    def check(u, v):
        s = tuple(a + b for a, b in zip(u, v))
        lhs, rhs = f(s), tuple(a + b for a, b in zip(f(u), f(v)))
        if lhs != rhs:
            raise LinearityError(f"star({s}) = {lhs} but star({u}) + star({v}) = {rhs}")

    for i in range(N):
        for j in range(i, N):
            check(units[i], units[j])
    rng = random.Random(seed)
    for _ in range(samples):
        check(random_cone_point(i0, rng), random_cone_point(i0, rng))
    return [[cols[c][r] for c in range(N)] for r in range(N)]
