import itertools
import random

import pytest

from stringcross.words import (
    Move, apply_move, check_word, enumerate_words, format_word, iota0, is_reduced_longest,
    move_applicable, move_path, neighbours, parse_word, permutation_of, reflection_ordering,
    word_op, word_star, word_starting_with,
)


def reduced_words_by_backtracking(n):
    """Grow words letter by letter, keeping only those that increase the length."""
    N = n * (n - 1) // 2
    out = []

    def grow(word, perm):
        if len(word) == N:
            out.append(tuple(word))
            return
        for i in range(1, n):
            # right multiplication by s_i adds a descent iff perm(i) < perm(i+1)
            if perm[i - 1] < perm[i]:
                perm[i - 1], perm[i] = perm[i], perm[i - 1]
                word.append(i)
                grow(word, perm)
                word.pop()
                perm[i - 1], perm[i] = perm[i], perm[i - 1]

    grow([], list(range(1, n + 1)))
    return sorted(out)


@pytest.mark.parametrize("n,count", [(2, 1), (3, 2), (4, 16), (5, 768)])
def test_enumeration_matches_backtracking(n, count):
    words = enumerate_words(n)
    assert len(words) == count
    assert words == reduced_words_by_backtracking(n)


def test_enumeration_rank_guard():
    with pytest.raises(ValueError):
        enumerate_words(7)
    with pytest.raises(ValueError):
        enumerate_words(1)


@pytest.mark.parametrize("word,ok", [
    ((1, 2, 1), True),
    ((2, 1, 2), True),
    ((1, 2, 2), False),
    ((1, 2), False),
    ((1, 3, 2, 1, 3, 2), True),
    ((1, 2, 1, 2, 1, 2), False),
    ((0, 1, 0), False),
])
def test_is_reduced_longest(word, ok):
    assert is_reduced_longest(word) is ok


def test_check_word_message():
    with pytest.raises(ValueError, match="1,1,2"):
        check_word((1, 1, 2))


def test_permutation_of_longest():
    assert permutation_of((1, 2, 1)) == [3, 2, 1]
    assert permutation_of(iota0(5)) == [5, 4, 3, 2, 1]


def test_moves():
    assert move_applicable((1, 3, 2, 1, 3, 2), Move(2, 1))
    assert not move_applicable((1, 2, 1), Move(2, 1))
    assert apply_move((1, 2, 1), Move(3, 1)) == (2, 1, 2)
    assert apply_move((1, 3, 2, 1, 3, 2), Move(2, 1)) == (3, 1, 2, 1, 3, 2)
    with pytest.raises(ValueError):
        apply_move((1, 2, 1), Move(2, 2))
    assert str(Move(3, 4)) == "3-move@4"


def test_neighbours_are_reduced():
    for w in enumerate_words(4):
        for m, v in neighbours(w):
            assert is_reduced_longest(v)
            assert apply_move(v, m) == w  # every move is its own inverse


def test_move_path_reaches_target():
    rng = random.Random(5)
    words = enumerate_words(5)
    for _ in range(40):
        u, v = rng.choice(words), rng.choice(words)
        w = u
        for m in move_path(u, v):
            w = apply_move(w, m)
        assert w == v
    assert move_path((1, 2, 1), (1, 2, 1)) == []


def test_move_path_is_shortest_for_rank_three():
    assert move_path((1, 2, 1), (2, 1, 2)) == [Move(3, 1)]


def test_word_starting_with():
    for w in enumerate_words(4):
        for a in (1, 2, 3):
            target, moves = word_starting_with(w, a)
            assert target[0] == a
            x = w
            for m in moves:
                x = apply_move(x, m)
            assert x == target


def test_reflection_ordering_lists_every_inversion_once():
    for n in (3, 4, 5):
        for w in enumerate_words(n)[:50]:
            order = reflection_ordering(w)
            assert sorted(order) == list(itertools.combinations(range(1, n + 1), 2))


def test_reflection_ordering_worked_word():
    # traced by hand through the gap tables; matches the vertex names
    # v[4,1], v[4,5], v[2,5], v[2,4] at positions 4, 6, 7, 9
    assert reflection_ordering((2, 1, 2, 3, 4, 3, 2, 1, 3, 2)) == [
        (2, 3), (1, 3), (1, 2), (1, 4), (1, 5), (4, 5), (2, 5), (3, 5), (2, 4), (3, 4)]


def test_iota0_and_involutions():
    assert iota0(3) == (1, 2, 1)
    assert iota0(4) == (1, 2, 1, 3, 2, 1)
    assert len(iota0(6)) == 15
    assert word_star((1, 2, 1, 3, 2, 1)) == (3, 2, 3, 1, 2, 3)
    assert word_op((1, 2, 1, 3, 2, 1)) == (1, 2, 3, 1, 2, 1)
    for w in enumerate_words(4):
        assert is_reduced_longest(word_star(w)) and is_reduced_longest(word_op(w))


def test_parse_and_format():
    assert parse_word("2, 1,2") == (2, 1, 2)
    assert format_word((2, 1, 2)) == "2,1,2"
    with pytest.raises(ValueError):
        parse_word("1,x")
