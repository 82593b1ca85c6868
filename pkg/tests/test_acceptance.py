"""End-to-end acceptance suite; each test prints one PASS/FAIL line."""

import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from repcensus.census import PowerClass, census, count_distinct, enumerate_all
from repcensus.constructions import (
    expected_q_length,
    expected_qn_cubes,
    fs_prime_block,
    q_word,
    qn_half_gap,
    uniform_word,
)
from repcensus.lemmas import (
    check_lemma_close_cubes,
    check_lemma_distinct_starts,
    check_lemma_run_of_p_occurrences,
    check_prefix_observations,
)
from repcensus.search import CUBE_RICH_TABLE, SearchConfig, search_max_cubes, verify_witness
from repcensus.simulation import SimTrace, explore_traces, sim_run


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number, title, budget=None):
        t0 = time.perf_counter()
        info = {}
        try:
            yield info
            elapsed = time.perf_counter() - t0
            if budget is not None:
                assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"
        except BaseException as exc:
            with capsys.disabled():
                print(f"\n[acceptance {number}] FAIL  {title}: {exc}")
            raise
        detail = f" ({info['detail']})" if "detail" in info else ""
        with capsys.disabled():
            print(f"\n[acceptance {number}] PASS  {title}{detail} in {time.perf_counter() - t0:.2f}s")

    return run


def test_1_table_rows(criterion):
    with criterion(1, "reference table rows verify exactly", budget=1.0) as info:
        rows = [(n, w, k) for n, w, k in CUBE_RICH_TABLE]
        assert [n for n, _, _ in rows] == [20, 30, 40, 50, 60, 70, 80, 90, 100]
        assert [k for _, _, k in rows] == [7, 11, 16, 20, 25, 30, 34, 40, 44]
        for n, w, k in rows:
            assert len(w) == n
            assert verify_witness(w, k), (n, w)
        info["detail"] = f"{len(rows)} rows"


def test_2_exhaustive_search(criterion):
    with criterion(2, "exhaustive search reaches 7 at n=20; n<=18 suite", budget=600) as info:
        for n in range(1, 19):
            res = search_max_cubes(SearchConfig(n))
            assert res.exact and res.complete
        r20 = search_max_cubes(SearchConfig(20))
        assert r20.exact and r20.max_cubes == 7
        assert CUBE_RICH_TABLE[0][0] == 20 and CUBE_RICH_TABLE[0][2] == r20.max_cubes
        for w in r20.witnesses:
            assert count_distinct(w, PowerClass.CUBE, method="naive") == 7
        info["detail"] = f"{r20.nodes_explored} nodes at n=20"


def test_3_uniform_words(criterion):
    with criterion(3, "uniform words meet the hr, np-square and cube counts exactly", budget=30):
        for n in range(2, 201):
            counts = census(uniform_word("a", n)).counts
            assert counts[PowerClass.HR] == n - 2, n
            assert counts[PowerClass.NP_SQUARE] == n // 2 - 1, n
            assert counts[PowerClass.CUBE] == n // 3, n


def constructed_words():
    words = [w for _, w, _ in CUBE_RICH_TABLE]
    words += [q_word(n) for n in range(1, 21)]
    words += [uniform_word(s, n) for s in "01" for n in range(1, 201)]
    words += [fs_prime_block(i) for i in range(1, 41)]
    words += [fs_prime_block(i) + fs_prime_block(i + 1) for i in range(1, 21)]
    return words


def test_4_upper_bounds(criterion, corpus):
    assert len(corpus) == 10_000
    with criterion(4, "cubes <= floor(4n/5) and hr <= n-2 on corpus and constructions", budget=60) as info:
        words = corpus + constructed_words()
        bad = []
        for w in words:
            n = len(w)
            counts = census(w).counts
            if counts[PowerClass.CUBE] > 4 * n // 5:
                bad.append(("cube", w))
            if n >= 2 and counts[PowerClass.HR] > n - 2:
                bad.append(("hr", w))
        assert bad == []
        info["detail"] = f"{len(words)} words"


def test_5_construction_formulas(criterion):
    with criterion(5, "q_n length and cube-count formulas", budget=60):
        for n in range(1, 201):
            assert len(q_word(n)) == n * n + 4 * n == expected_q_length(n)
        for n in range(1, 13):
            expected = n * (n + 1) // 2 - 1 + (n + 1) // 3
            assert expected_qn_cubes(n) == expected
            assert count_distinct(q_word(n), PowerClass.CUBE, method="naive") == expected, n
        for n in range(1, 41):
            expected = n * (n + 1) // 2 - 1 + (n + 1) // 3
            assert count_distinct(q_word(n), PowerClass.CUBE) == expected, n
        assert q_word(4) == "01001001000100010000100001000001"


def test_6_gap_identity(criterion):
    with criterion(6, "half-length minus cubes of q_n, even n <= 40"):
        for n in range(2, 41, 2):
            w = q_word(n)
            assert len(w) % 2 == 0
            gap = len(w) // 2 - count_distinct(w, PowerClass.CUBE)
            assert gap == 3 * n // 2 - (n + 1) // 3 + 1 == qn_half_gap(n), n


def test_7_simulation(criterion):
    with criterion(7, "example trace and bounded trace exploration", budget=60) as info:
        run = sim_run(SimTrace.parse(3, "1:0,2:12,6:0"))
        assert run.total_len == 88 == len(run.sequence)
        assert run.positives == 62 == sum(1 for x in run.sequence if x)
        assert run.ratio == Fraction(62, 88)
        rep = explore_traces(6, 4, 6)
        assert rep.violations == []
        assert rep.max_ratio <= Fraction(4, 5)
        info["detail"] = f"{rep.traces} traces"


def test_8_lemma_harness(criterion, corpus):
    with criterion(8, "close cubes, p-occurrence runs, distinct starts, prefix observations", budget=120):
        bad = []
        for w in corpus:
            bad += check_lemma_close_cubes(w)
            bad += check_lemma_run_of_p_occurrences(w)
            bad += check_lemma_distinct_starts(w)
            bad += check_prefix_observations(w)
        assert bad == [], bad[:5]


def test_9_oracle_equivalence(criterion, corpus):
    with criterion(9, "fast vs definition-level enumeration; incremental vs scratch search") as info:
        mismatches = [w for w in corpus if enumerate_all(w) != enumerate_all(w, method="naive")]
        assert mismatches == [], mismatches[:5]
        for n in range(1, 17):
            inc = search_max_cubes(SearchConfig(n, witness_cap=10**6))
            scr = search_max_cubes(SearchConfig(n, witness_cap=10**6, counting="scratch"))
            assert inc.max_cubes == scr.max_cubes, n
            assert inc.witnesses == scr.witnesses, n
            assert inc.nodes_explored == scr.nodes_explored, n
        info["detail"] = f"{len(corpus)} words, n<=16"
