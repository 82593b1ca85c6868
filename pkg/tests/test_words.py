import random
from math import gcd

import pytest
from hypothesis import given, strategies as st

from repcensus.words import (
    WordError,
    border_table,
    check_word,
    fine_wilf_holds,
    fine_wilf_premise,
    is_primitive,
    periods,
    periods_naive,
    primitive_root,
    root_length,
    smallest_period,
)

binary = st.text(alphabet="01", min_size=1, max_size=40)
ternary = st.text(alphabet="abc", min_size=1, max_size=40)


@pytest.mark.parametrize(
    "w, expected",
    # abaab: p=4 compares w1='a' with w5='b', so 4 is not a period
    [("aaaa", {1, 2, 3, 4}), ("abaab", {3, 5}), ("ab", {2})],
)
def test_periods_examples(w, expected):
    assert periods(w) == expected
    assert periods_naive(w) == expected


def test_periods_empty():
    with pytest.raises(WordError, match="empty word has no periods"):
        periods("")
    with pytest.raises(WordError):
        primitive_root("")
    with pytest.raises(WordError):
        is_primitive("")


@pytest.mark.parametrize(
    "w, root, k",
    [("abab", "ab", 2), ("abc", "abc", 1), ("aaaaaa", "a", 6)],
)
def test_primitive_root_examples(w, root, k):
    assert primitive_root(w) == (root, k)


@pytest.mark.parametrize("w, expected", [("ab", True), ("aa", False), ("aab", True)])
def test_is_primitive_examples(w, expected):
    assert is_primitive(w) is expected


@pytest.mark.parametrize(
    "w, p, q",
    [("aaaaaa", 2, 3), ("abaababaab", 5, 10), ("ababa", 2, 4)],
)
def test_fine_wilf_examples(w, p, q):
    assert fine_wilf_holds(w, p, q)


def test_fine_wilf_rejects_non_period():
    with pytest.raises(WordError, match="not a period"):
        fine_wilf_holds("abaab", 2, 3)


def test_fine_wilf_premise_weak_form():
    # 4 + 6 <= 8 + 2 but not <= 8
    assert fine_wilf_premise(8, 4, 6)
    assert not fine_wilf_premise(8, 4, 6, weak=True)
    assert fine_wilf_premise(10, 4, 6, weak=True)


@given(st.one_of(binary, ternary))
def test_border_and_naive_periods_agree(w):
    assert periods(w) == periods_naive(w)
    assert smallest_period(w) == min(periods_naive(w))


def test_border_table_small():
    assert border_table("abaab") == [0, 0, 0, 1, 1, 2]


def test_periodicity_lemma_random_words():
    rng = random.Random(2024)
    checked = 0
    for _ in range(10_000):
        n = rng.randint(1, 60)
        sigma = rng.choice("01 012".split())
        # bias toward periodic words so the premise is often met
        base = "".join(rng.choice(sigma) for _ in range(rng.randint(1, 8)))
        w = (base * (n // len(base) + 1))[:n] if rng.random() < 0.7 else "".join(rng.choice(sigma) for _ in range(n))
        ps = sorted(periods(w))
        for p in ps:
            for q in ps:
                if fine_wilf_premise(n, p, q):
                    checked += 1
                    assert fine_wilf_holds(w, p, q), (w, p, q)
    assert checked > 10_000


@given(st.one_of(binary, ternary))
def test_root_is_primitive_and_minimal_dividing_period(w):
    root, k = primitive_root(w)
    assert root * k == w
    assert is_primitive(root)
    assert len(root) == min(p for p in periods_naive(w) if len(w) % p == 0)


@given(st.one_of(binary, ternary), st.integers(1, 5))
def test_root_of_power(w, k):
    assert primitive_root(w * k).root == primitive_root(w).root


def test_root_length_divides():
    assert root_length("abcabcabc") == 3
    assert root_length("abcab") == 5


def test_check_word():
    assert check_word("0101", "01") == "0101"
    with pytest.raises(WordError, match="position 3"):
        check_word("01x1", "01")
    with pytest.raises(WordError, match="0x20"):
        check_word("a b")
