import pytest

from repcensus.census import PowerClass, count_distinct
from repcensus.constructions import (
    block_pair_cubes,
    construct,
    expected_q_length,
    expected_qn_cubes,
    fs_prime_block,
    p_block,
    q_word,
    qn_half_gap,
    uniform_word,
)
from repcensus.words import WordError

C = PowerClass


@pytest.mark.parametrize("i, w", [(1, "01001"), (3, "000100001"), (4, "00001000001")])
def test_p_block(i, w):
    assert p_block(i) == w
    assert len(w) == 2 * i + 3


def test_q_word_examples():
    assert q_word(4) == "01001001000100010000100001000001"
    assert q_word(1) == "01001"
    assert len(q_word(10)) == 140


def test_zero_arguments_rejected():
    for f in (p_block, q_word, fs_prime_block, expected_qn_cubes):
        with pytest.raises(WordError):
            f(0)


@pytest.mark.parametrize("n, expected", [(4, 10), (1, 0), (7, 29)])
def test_expected_qn_cubes(n, expected):
    assert expected_qn_cubes(n) == expected
    assert count_distinct(q_word(n), C.CUBE, method="naive") == expected


def test_q_length_formula():
    for n in range(1, 201):
        assert len(q_word(n)) == expected_q_length(n) == n * n + 4 * n


def test_q_cubes_formula_oracle():
    for n in range(1, 13):
        assert count_distinct(q_word(n), C.CUBE, method="naive") == expected_qn_cubes(n)


def test_q_cubes_formula_fast():
    for n in range(1, 41):
        assert count_distinct(q_word(n), C.CUBE) == expected_qn_cubes(n)


def test_half_gap_identity():
    for n in range(2, 41, 2):
        assert 2 * qn_half_gap(n) == len(q_word(n)) - 2 * count_distinct(q_word(n), C.CUBE)
    with pytest.raises(WordError):
        qn_half_gap(3)


def test_block_pair_cubes():
    for i in range(1, 11):
        pair = p_block(i) + p_block(i + 1)
        cubes = block_pair_cubes(i)
        assert len(set(cubes)) == i + 1
        for u in cubes:
            assert len(u) == 3 * (i + 2)
            assert u in pair
            assert u[: i + 2] * 3 == u
    assert len(block_pair_cubes(3)[0]) == 15


def test_uniform_word():
    assert uniform_word("a", 5) == "aaaaa"
    assert uniform_word("0", 0) == ""
    assert uniform_word("a", 3) == "aaa"
    with pytest.raises(WordError):
        uniform_word("ab", 2)


def test_uniform_counts():
    for n in range(2, 201):
        w = uniform_word("a", n)
        assert count_distinct(w, C.HR) == n - 2
        assert count_distinct(w, C.NP_SQUARE) == n // 2 - 1
        assert count_distinct(w, C.CUBE) == n // 3


def test_fs_prime_block():
    # (i+1) + 1 + i + 1 + (i+1) + 1 symbols
    assert fs_prime_block(1) == "00101001"
    for i in range(1, 20):
        w = fs_prime_block(i)
        assert len(w) == 3 * i + 5
        assert w == "0" * (i + 1) + "1" + "0" * i + "1" + "0" * (i + 1) + "1"


def test_construct_dispatch():
    assert construct("qn", 2) == q_word(2)
    assert construct("uniform", 3, symbol="b") == "bbb"
    assert construct("fs-prime", 1) == fs_prime_block(1)
    with pytest.raises(WordError, match="unknown family"):
        construct("fib", 3)
