"""
Reduced words of the longest permutation w0 in S_n.

Words are plain tuples of letters in ``1..n-1``; a word for w0 uses every
letter, so the rank is recovered as ``max(word) + 1``.

>>> reflection_ordering((1, 2, 1))
[(1, 2), (1, 3), (2, 3)]
>>> apply_move((1, 2, 1), Move(3, 1))
(2, 1, 2)
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "Move", "MAX_RANK", "rank_of", "num_positive_roots", "parse_word",
    "format_word", "permutation_of", "is_reduced_longest", "check_word",
    "move_applicable", "apply_move", "neighbours", "move_path",
    "reflection_ordering", "enumerate_words", "iota0", "word_star",
    "word_op", "word_starting_with",
]

# enumeration guard; the number of reduced words explodes past n = 6
MAX_RANK = 6


@dataclass(frozen=True, order=True)
class Move:
    kind: int  # 2 or 3
    position: int  # 1-based index of the first letter touched

    def __str__(self):
        return f"{self.kind}-move@{self.position}"


def num_positive_roots(n: int) -> int:
    return n * (n - 1) // 2


def rank_of(word) -> int:
    if not word:
        raise ValueError("empty word")
    return max(word) + 1


def parse_word(text: str) -> tuple[int, ...]:
    """Parse ``"2,1,2"`` into ``(2, 1, 2)``."""
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise ValueError(f"malformed word {text!r}") from None


def format_word(word) -> str:
    return ",".join(str(i) for i in word)


def permutation_of(word, n: int | None = None) -> list[int]:
    """One-line notation of sigma_{i_1} ... sigma_{i_N}, rightmost factor applied first."""
    if n is None:
        n = rank_of(word)
    images = list(range(1, n + 1))
    for i in word:
        if not 1 <= i <= n - 1:
            raise ValueError(f"letter {i} out of range 1..{n - 1}")
        # images <- images o sigma_i
        images[i - 1], images[i] = images[i], images[i - 1]
    return images


def is_reduced_longest(word, n: int | None = None) -> bool:
    word = tuple(word)
    if not word:
        return False
    if n is None:
        n = rank_of(word)
    if n < 2 or len(word) != num_positive_roots(n):
        return False
    if any(not 1 <= i <= n - 1 for i in word):
        return False
    heights = list(range(1, n + 1))
    seen = set()
    for i in word:
        p, q = heights[i - 1], heights[i]
        if p > q or (p, q) in seen:
            return False
        seen.add((p, q))
        heights[i - 1], heights[i] = q, p
    return heights == list(range(n, 0, -1))


def check_word(word, n: int | None = None) -> tuple[int, ...]:
    word = tuple(word)
    if not is_reduced_longest(word, n):
        raise ValueError(f"{format_word(word)} is not a reduced word for w0")
    return word


def move_applicable(word, move: Move) -> bool:
    k = move.position - 1
    if move.kind == 2:
        return 0 <= k < len(word) - 1 and abs(word[k] - word[k + 1]) > 1
    if move.kind == 3:
        return (0 <= k < len(word) - 2 and word[k] == word[k + 2]
                and abs(word[k] - word[k + 1]) == 1)
    return False


def apply_move(word, move: Move) -> tuple[int, ...]:
    if not move_applicable(word, move):
        raise ValueError(f"{move} is not applicable to {format_word(word)}")
    w = list(word)
    k = move.position - 1
    if move.kind == 2:
        w[k], w[k + 1] = w[k + 1], w[k]
    else:
        w[k], w[k + 1], w[k + 2] = w[k + 1], w[k], w[k + 1]
    return tuple(w)


def neighbours(word):
    """Yield ``(move, new_word)``: all 2-moves by position, then all 3-moves."""
    for kind in (2, 3):
        for pos in range(1, len(word)):
            m = Move(kind, pos)
            if move_applicable(word, m):
                yield m, apply_move(word, m)


@lru_cache(maxsize=1024)
def _bfs_tree(source: tuple[int, ...]) -> dict:
    parent = {source: None}
    queue = deque([source])
    while queue:
        w = queue.popleft()
        for m, v in neighbours(w):
            if v not in parent:
                parent[v] = (w, m)
                queue.append(v)
    return parent


def move_path(source, target) -> list[Move]:
    """Shortest move sequence turning ``source`` into ``target`` (BFS)."""
    source, target = tuple(source), tuple(target)
    if source == target:
        return []
    if len(source) != len(target):
        raise ValueError("words of different length")
    parent = _bfs_tree(source)
    if target not in parent:
        raise RuntimeError(f"internal error: {format_word(target)} unreachable "
                           f"from {format_word(source)}")
    path = []
    w = target
    while parent[w] is not None:
        w, m = parent[w]
        path.append(m)
    path.reverse()
    return path


@lru_cache(maxsize=4096)
def word_starting_with(word: tuple[int, ...], a: int) -> tuple[tuple[int, ...], tuple[Move, ...]]:
    """The BFS-nearest reduced word beginning with ``a``, with the moves reaching it."""
    if word[0] == a:
        return word, ()
    parent = {word: None}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for m, v in neighbours(w):
            if v in parent:
                continue
            parent[v] = (w, m)
            if v[0] == a:
                path = []
                u = v
                while parent[u] is not None:
                    u, mv = parent[u]
                    path.append(mv)
                return v, tuple(reversed(path))
            queue.append(v)
    raise ValueError(f"color {a} out of range for {format_word(word)}")


def reflection_ordering(word) -> list[tuple[int, int]]:
    """Inversions (p_j, q_j) with p_j = sigma_{i_1}...sigma_{i_{j-1}}(i_j)."""
    n = rank_of(word)
    prefix = list(range(1, n + 1))
    order = []
    for i in word:
        order.append((prefix[i - 1], prefix[i]))
        prefix[i - 1], prefix[i] = prefix[i], prefix[i - 1]
    return order


def iota0(n: int) -> tuple[int, ...]:
    """The word (1, 2,1, 3,2,1, ..., n-1,...,1)."""
    if n < 2:
        raise ValueError("rank must be at least 2")
    return tuple(j for k in range(1, n) for j in range(k, 0, -1))


def word_star(word) -> tuple[int, ...]:
    n = rank_of(word)
    return tuple(n - i for i in word)


def word_op(word) -> tuple[int, ...]:
    return tuple(reversed(word))


def enumerate_words(n: int, max_rank: int = MAX_RANK) -> list[tuple[int, ...]]:
    """All reduced words of w0 in S_n, sorted lexicographically."""
    if not 2 <= n <= max_rank:
        raise ValueError(f"rank {n} outside supported range 2..{max_rank}")
    return sorted(_bfs_tree(iota0(n)))
