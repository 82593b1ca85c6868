"""Distinct repetitions in words: cubes, squares, nonprimitive squares and
higher powers, with tools to check the bounds on their number."""

from .census import (
    CensusReport,
    Occurrence,
    PowerClass,
    census,
    count_distinct,
    enumerate_distinct,
    independent_prefix,
)
from .constructions import expected_qn_cubes, fs_prime_block, p_block, q_word, uniform_word
from .search import SearchConfig, SearchMode, SearchResult, ratio_report, search_max_cubes, verify_witness
from .simulation import SimState, SimStep, SimTrace, explore_traces, invariant_holds, normalize_c, sim_run
from .words import RootDecomposition, WordError, fine_wilf_holds, is_primitive, periods, primitive_root

__version__ = "0.1.0"
