import random

import pytest

from affinegsb.words import (
    Alphabet,
    DegLexOrder,
    RankMismatchError,
    WordSyntaxError,
    affine_alphabet,
    deglex_key,
    find_factors,
)

ORD3 = DegLexOrder(3)  # alphabet r0 > r1 > r2


def w(*ids):
    return bytes(ids)


def test_compare_identity():
    assert ORD3.compare(w(1, 2), w(1, 2)) == 0


def test_compare_length_dominates():
    assert ORD3.compare(w(0), w(1, 2)) == -1


def test_compare_lexicographic():
    # first letters differ: r1 > r2
    assert ORD3.compare(w(1, 2), w(2, 0)) == 1


def test_compare_empty_word_least():
    assert ORD3.compare(b"", w(2)) == -1
    assert ORD3.compare(b"", b"") == 0


def test_compare_rank_mismatch():
    with pytest.raises(RankMismatchError):
        ORD3.compare(w(3), w(1))


def test_find_factors_overlapping():
    assert find_factors(w(1, 1, 1), w(1, 1)) == [0, 1]


def test_find_factors_absent():
    assert find_factors(w(0, 1, 0), w(0, 2)) == []


def test_find_factors_multiple():
    assert find_factors(w(0, 1, 2, 0, 1), w(0, 1)) == [0, 3]


def test_find_factors_empty_factor_rejected():
    with pytest.raises(ValueError):
        find_factors(w(0, 1), b"")


def random_word(rng, size, max_len):
    return bytes(rng.randrange(size) for _ in range(rng.randrange(max_len + 1)))


def test_compare_total_and_antisymmetric():
    rng = random.Random(7)
    for _ in range(500):
        u = random_word(rng, 3, 6)
        v = random_word(rng, 3, 6)
        c = ORD3.compare(u, v)
        assert c == -ORD3.compare(v, u)
        assert (c == 0) == (u == v)


def test_multiplication_compatibility():
    rng = random.Random(11)
    for _ in range(500):
        u = random_word(rng, 3, 5)
        v = random_word(rng, 3, 5)
        if ORD3.compare(u, v) <= 0:
            u, v = v, u
        if u == v:
            continue
        w1 = random_word(rng, 3, 4)
        w2 = random_word(rng, 3, 4)
        assert ORD3.compare(w1 + u + w2, w1 + v + w2) == 1


def test_deglex_key_sorts_ascending():
    words = [w(1, 2), w(0), b"", w(2, 0), w(1, 1, 1)]
    srt = sorted(words, key=deglex_key)
    for a, b in zip(srt, srt[1:]):
        assert ORD3.compare(a, b) == -1


def test_alphabet_parse_and_print():
    ab = affine_alphabet(2)
    assert ab.word("r0 r2 r1") == w(0, 2, 1)
    assert ab.word("1") == b""
    assert ab.text(w(0, 2)) == "r0 r2"
    assert ab.text(b"") == "1"


def test_alphabet_unknown_token():
    ab = affine_alphabet(2)
    with pytest.raises(WordSyntaxError):
        ab.word("r0 r3")


def test_alphabet_custom_precedence():
    # first listed is greatest
    ab = Alphabet(["b", "a"])
    order = DegLexOrder(ab.size)
    assert order.compare(ab.word("b"), ab.word("a")) == 1
