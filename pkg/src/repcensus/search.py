"""Depth-first search for words with the most distinct cubes.

The word under construction is packed into an int (newest symbol in the low
bits).  Appending a symbol can only create cubes that end at the new last
position, so each node tests the suffixes of length ``3L`` for period ``L``
and looks the candidates up in the set of cubes already seen on the current
path.

The space is split into fixed prefix tasks.  Tasks never share incumbents,
which keeps every field of a :class:`SearchResult` independent of the
number of worker processes.
"""

from __future__ import annotations

import enum
import itertools
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .census import InvariantViolation, PowerClass, count_distinct

log = logging.getLogger(__name__)

SYMBOLS = "012"


class SearchMode(str, enum.Enum):
    EXHAUSTIVE = "exhaustive"
    PRUNED = "pruned"


@dataclass
class SearchConfig:
    length: int
    alphabet_size: int = 2
    mode: SearchMode = SearchMode.EXHAUSTIVE
    prune_slack: int = 2
    threads: int = 1
    incumbent: str | None = None
    witness_cap: int = 64
    max_nodes: int | None = None
    counting: str = "incremental"  # or "scratch"
    split_depth: int | None = None
    checkpoint: str | None = None

    def __post_init__(self) -> None:
        self.mode = SearchMode(self.mode)
        if self.length < 1:
            raise ValueError("length must be >= 1")
        if self.alphabet_size not in (2, 3):
            raise ValueError("alphabet_size must be 2 or 3")
        if self.prune_slack not in (1, 2):
            raise ValueError("prune_slack must be 1 or 2")
        if self.counting not in ("incremental", "scratch"):
            raise ValueError(f"unknown counting mode {self.counting!r}")
        if self.incumbent is not None:
            if len(self.incumbent) != self.length:
                raise ValueError("incumbent must have the search length")
            if set(self.incumbent) - set(self.symbols):
                raise ValueError(f"incumbent uses symbols outside {self.symbols!r}")

    @property
    def symbols(self) -> str:
        return SYMBOLS[: self.alphabet_size]

    def tasks(self) -> list[str]:
        """Canonical prefixes (first symbol fixed) handed to workers."""
        d = self.split_depth
        if d is None:
            d = 1 if self.length <= 12 else min(self.length - 4, 8)
        d = max(1, min(d, self.length))
        first = self.symbols[0]
        return [first + "".join(t) for t in itertools.product(self.symbols, repeat=d - 1)]


@dataclass
class SearchResult:
    length: int
    alphabet_size: int
    max_cubes: int
    witnesses: list[str]
    nodes_explored: int
    mode: str
    prune_slack: int
    counting: str
    exact: bool
    complete: bool = True
    max_new_per_letter: int = 0
    tasks: int = 1

    def to_dict(self) -> dict:
        return asdict(self)


class SearchIncomplete(RuntimeError):
    """The node budget ran out; ``result`` holds the best incumbent found."""

    def __init__(self, result: SearchResult):
        super().__init__(f"node budget exhausted at n={result.length}; best so far {result.max_cubes}")
        self.result = result


def canonical(w: str, symbols: str = SYMBOLS) -> str:
    """Rename symbols so that ``w`` starts with the least one."""
    if not w or w[0] == symbols[0]:
        return w
    swap = {w[0]: symbols[0], symbols[0]: w[0]}
    return "".join(swap.get(ch, ch) for ch in w)


@dataclass
class _TaskResult:
    prefix: str
    best: int
    witnesses: list[str] = field(default_factory=list)
    nodes: int = 0
    complete: bool = True
    max_new: int = 0


def _run_task(prefix: str, cfg: SearchConfig, incumbent: int, budget: int | None) -> _TaskResult:
    n = cfg.length
    symbols = cfg.symbols
    bits = 1 if cfg.alphabet_size == 2 else 2
    mask = [(1 << (k * bits)) - 1 for k in range(n + 1)]
    sentinel = [1 << (k * bits) for k in range(n + 1)]
    pruned = cfg.mode is SearchMode.PRUNED
    slack = cfg.prune_slack
    cap = cfg.witness_cap
    scratch = cfg.counting == "scratch"

    seen: set[int] = set()
    res = _TaskResult(prefix, incumbent)
    best = incumbent
    witnesses: list[str] = []
    nodes = 0
    max_new = 0

    def new_cubes(x: int, m: int) -> list[int]:
        out = []
        for L in range(1, m // 3 + 1):
            s = x & mask[3 * L]
            if (s >> (L * bits)) == (s & mask[2 * L]):
                key = s | sentinel[3 * L]
                if key not in seen:
                    out.append(key)
        return out

    def decode(x: int) -> str:
        out = []
        for _ in range(n):
            out.append(symbols[x & mask[1]])
            x >>= bits
        return "".join(reversed(out))

    class Budget(Exception):
        pass

    def dfs(m: int, x: int, word: str, count: int) -> None:
        nonlocal best, nodes, witnesses, max_new
        nodes += 1
        if budget is not None and nodes > budget:
            raise Budget
        if m == n:
            if count > best:
                best = count
                witnesses = [decode(x)]
            elif count == best and len(witnesses) < cap:
                witnesses.append(decode(x))
            return
        if pruned and count + slack * (n - m) <= best:
            return
        for a in range(len(symbols)):
            y = (x << bits) | a
            if scratch:
                w2 = word + symbols[a]
                c2 = count_distinct(w2, PowerClass.CUBE)
                if c2 - count > max_new:
                    max_new = c2 - count
                dfs(m + 1, y, w2, c2)
            else:
                new = new_cubes(y, m + 1)
                if len(new) > max_new:
                    max_new = len(new)
                seen.update(new)
                dfs(m + 1, y, word, count + len(new))
                seen.difference_update(new)

    # replay the prefix
    x = 0
    count = 0
    for m, ch in enumerate(prefix, 1):
        x = (x << bits) | symbols.index(ch)
        new = new_cubes(x, m)
        seen.update(new)
        count += len(new)
    if scratch:
        count = count_distinct(prefix, PowerClass.CUBE)

    try:
        dfs(len(prefix), x, prefix, count)
    except Budget:
        res.complete = False
    res.best, res.witnesses, res.nodes, res.max_new = best, witnesses, nodes, max_new
    return res


def _task_entry(args) -> _TaskResult:
    return _run_task(*args)


def _read_checkpoint(path: str | None) -> dict[str, int]:
    done: dict[str, int] = {}
    if not path or not os.path.exists(path):
        return done
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            prefix, best = line.rsplit(",", 1)
            done[prefix] = int(best)
    return done


def search_max_cubes(cfg: SearchConfig) -> SearchResult:
    """Maximum number of distinct cubes over words of ``cfg.length``.

    Raises :class:`SearchIncomplete` when ``cfg.max_nodes`` is exhausted.
    """
    n = cfg.length
    seed_best = -1
    seed_words: list[str] = []
    if cfg.incumbent is not None:
        seed = canonical(cfg.incumbent, cfg.symbols)
        seed_best = count_distinct(seed, PowerClass.CUBE, method="naive")
        seed_words = [seed]

    tasks = cfg.tasks()
    done = _read_checkpoint(cfg.checkpoint)
    budget = None if cfg.max_nodes is None else max(1, -(-cfg.max_nodes // len(tasks)))
    todo = [t for t in tasks if t not in done]
    args = [(t, cfg, seed_best, budget) for t in todo]
    if cfg.threads > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            results = list(pool.map(_task_entry, args))
    else:
        results = []
        for a in args:
            r = _run_task(*a)
            results.append(r)
            if cfg.checkpoint and r.complete:
                with open(cfg.checkpoint, "a") as fh:
                    fh.write(f"{r.prefix},{r.best}\n")
    if cfg.checkpoint and cfg.threads > 1:
        with open(cfg.checkpoint, "a") as fh:
            for r in results:
                if r.complete:
                    fh.write(f"{r.prefix},{r.best}\n")

    best = max([seed_best] + [r.best for r in results] + list(done.values()))
    # checkpointed tasks keep no witnesses; rerun the ones that reach the max
    rerun = [t for t, b in done.items() if b == best and t in tasks]
    for t in rerun:
        results.append(_run_task(t, cfg, seed_best, budget))

    pool_words = set(seed_words if seed_best == best else [])
    for r in results:
        if r.best == best:
            pool_words.update(r.witnesses)
    witnesses = sorted(pool_words)[: cfg.witness_cap]
    for w in witnesses:
        if not verify_witness(w, best):
            raise InvariantViolation(f"witness {w} does not have {best} distinct cubes")

    complete = all(r.complete for r in results)
    exact = complete and (cfg.mode is SearchMode.EXHAUSTIVE or cfg.prune_slack >= 2)
    result = SearchResult(
        length=n,
        alphabet_size=cfg.alphabet_size,
        max_cubes=max(best, 0),
        witnesses=witnesses,
        nodes_explored=sum(r.nodes for r in results),
        mode=cfg.mode.value,
        prune_slack=cfg.prune_slack,
        counting=cfg.counting,
        exact=exact,
        complete=complete,
        max_new_per_letter=max([r.max_new for r in results] + [0]),
        tasks=len(tasks),
    )
    if not complete:
        raise SearchIncomplete(result)
    return result


def verify_witness(w: str, claimed: int) -> bool:
    return count_distinct(w, PowerClass.CUBE, method="naive") == claimed


def truncate2(r: Fraction) -> str:
    """Two-decimal display, truncated toward zero."""
    hundredths = (r.numerator * 100) // r.denominator
    return f"{hundredths // 100}.{hundredths % 100:02d}"


def ratio_report(words) -> list[tuple[int, int, Fraction]]:
    out = []
    for w in words:
        c = count_distinct(w, PowerClass.CUBE, method="naive")
        out.append((len(w), c, Fraction(c, len(w)) if w else Fraction(0)))
    return out


CUBE_RICH_TABLE = [
    (20, "01110101011011011000", 7),
    (30, "000000110110110101101011010101", 11),
    (40, "1101101101110111011100010001000100100100", 16),
    (50, "11111111110010010010100101001010100101010010101000", 20),
    (60, "101001010010100101010010100101010010100101010010101001010100", 25),
    (70, "0000001101101101011010110101011010110101011010110101011010101101010111", 30),
    (80, "11011011010110110101101101011010110101011010110101011010110101011010101101010111", 34),
    (90, "111011011011101101101110110110111011011101101101110110111011011011101101110110111011101110", 40),
    (100, "1000101010010101001010100101001010100101001010100101001010010101001010010100101010010100101001010111", 44),
]
