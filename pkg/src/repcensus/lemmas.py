"""Falsification harness for the structural claims about repetitions.

Every ``check_*`` function returns a list of violations (plain dicts, so
they serialize directly); an empty list means the claim held on the input.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .census import (
    InvariantViolation,
    PowerClass,
    census,
    enumerate_all,
    enumerate_distinct,
    independent_prefix_from_c,
)
from .words import WordError, root_length


def _ceil_half(q: int) -> int:
    return (q + 1) // 2


def _is_hr(u: str) -> bool:
    return bool(u) and len(u) // root_length(u) >= 3


def check_lemma_prefix_suffix(x: str, y: str) -> bool:
    """A long hr-prefix of an hr-word is also its suffix."""
    if not _is_hr(x):
        raise WordError(f"precondition failed: x={x!r} is not an hr-word")
    if not _is_hr(y):
        raise WordError(f"precondition failed: y={y!r} is not an hr-word")
    if not y.startswith(x):
        raise WordError("precondition failed: x is not a prefix of y")
    if len(x) < len(y) - root_length(y):
        raise WordError("precondition failed: |x| < |y| - |root(y)|")
    return y.endswith(x)


def check_lemma_prefix_suffix_in(w: str) -> list[dict]:
    """Run the prefix/suffix check for every hr subword ``y`` of ``w`` and
    every admissible hr prefix ``x`` of it."""
    bad = []
    for occ in enumerate_distinct(w, PowerClass.HR):
        y = occ.text(w)
        for m in range(max(1, len(y) - occ.root_len), len(y)):
            x = y[:m]
            if _is_hr(x) and not check_lemma_prefix_suffix(x, y):
                bad.append({"check": "prefix_suffix", "word": w, "x": x, "y": y})
    return bad


def check_lemma_root_lengths(w: str) -> list[dict]:
    """hr subwords of a cube ``z**3`` that start within the first
    ``ceil(|root z| / 2) + 1`` positions and end beyond ``z**2`` share the
    cube's root length."""
    bad = []
    for occ in enumerate_distinct(w, PowerClass.CUBE):
        y = occ.text(w)
        z_len = len(y) // 3
        p = occ.root_len
        for i in range(1, _ceil_half(p) + 2):
            for j in range(2 * z_len + 1, len(y) + 1):
                if j < i:
                    continue
                x = y[i - 1 : j]
                if _is_hr(x) and root_length(x) != p:
                    bad.append({"check": "root_lengths", "word": w, "cube": y, "i": i, "j": j})
    return bad


def check_lemma_distinct_starts(w: str) -> list[dict]:
    """No two distinct hr subwords share a last-occurrence start."""
    starts: dict[int, int] = {}
    bad = []
    for occ in enumerate_distinct(w, PowerClass.HR):
        if occ.start in starts:
            bad.append({"check": "distinct_starts", "word": w, "start": occ.start})
        starts[occ.start] = occ.total_len
    return bad


def _close_cube_violations(c: list[int], limit: int | None = None) -> list[tuple[int, int, int, int]]:
    n = len(c) if limit is None else limit
    out = []
    for i in range(n):
        p = c[i]
        if not p:
            continue
        for j in range(i + 1, min(len(c), i + _ceil_half(p) + 1)):
            q = c[j]
            if q and q != p and q < 2 * p - (j - i - 1):
                out.append((i + 1, p, j + 1, q))
    return out


def check_lemma_close_cubes(w: str) -> list[dict]:
    """Cube last occurrences at ``i < j <= i + ceil(p/2)`` have equal root
    lengths, or the later root is at least ``2p - (j - i - 1)``."""
    c = census(w).c_sequence
    return [
        {"check": "close_cubes", "word": w, "i": i, "p": p, "j": j, "q": q}
        for i, p, j, q in _close_cube_violations(c)
    ]


def p_occurrence_chains(c: list[int]) -> list[tuple[int, list[int]]]:
    """``(p, positions)`` for every window of ``p + 1`` p-occurrences whose
    consecutive gaps are at most ``p`` (1-based positions).

    Positions holding p-occurrences are split into chains with gaps
    ``<= p``; any witness lies inside one chain, so scanning the chains
    finds one whenever a witness exists.
    """
    by_p: dict[int, list[int]] = {}
    for i, q in enumerate(c, 1):
        if q:
            by_p.setdefault(q, []).append(i)
    out = []
    for p, pos in sorted(by_p.items()):
        chain = [pos[0]]
        for a in pos[1:]:
            chain = chain + [a] if a - chain[-1] <= p else [a]
            if len(chain) >= p + 1:
                out.append((p, chain[-(p + 1) :]))
    return out


def check_lemma_run_of_p_occurrences(w: str) -> list[dict]:
    """No ``p + 1`` positions with gaps of at most ``p`` all hold
    p-occurrences."""
    return [
        {"check": "run_of_p_occurrences", "word": w, "p": p, "positions": pos}
        for p, pos in p_occurrence_chains(census(w).c_sequence)
    ]


def check_prefix_observations(w: str) -> list[dict]:
    """Gap and growth conditions on consecutive nonzero c-entries inside the
    independent prefix, plus the 4/5 density bound on that prefix.

    The growth condition is read with the equal-root alternative: consecutive
    entries may also be equal.
    """
    if not w:
        return []
    c = census(w).c_sequence
    v = independent_prefix_from_c(c)
    bad = []
    positives = [i for i in range(v) if c[i]]
    if 5 * len(positives) > 4 * v:
        bad.append({"check": "prefix_density", "word": w, "prefix_len": v, "cubes": len(positives)})
    if v == 1:
        return bad
    for i, j in zip(positives, positives[1:]):
        ci, cj = c[i], c[j]
        if j - i > _ceil_half(ci):
            bad.append({"check": "obs_gap", "word": w, "i": i + 1, "j": j + 1, "ci": ci})
        if cj != ci and cj < 2 * ci - (j - i - 1):
            bad.append({"check": "obs_growth", "word": w, "i": i + 1, "j": j + 1, "ci": ci, "cj": cj})
    return bad


def check_bounds(w: str) -> list[dict]:
    """Upper bounds on hr-words, np-squares and cubes for a single word."""
    n = len(w)
    counts = census(w).counts
    bad = []
    if n >= 2:
        if counts[PowerClass.HR] > n - 2:
            bad.append({"check": "hr_bound", "word": w, "count": counts[PowerClass.HR]})
        if counts[PowerClass.NP_SQUARE] > n // 2 - 1:
            bad.append({"check": "np_square_bound", "word": w, "count": counts[PowerClass.NP_SQUARE]})
    if 5 * counts[PowerClass.CUBE] > 4 * n:
        bad.append({"check": "cube_bound", "word": w, "count": counts[PowerClass.CUBE]})
    return bad


def check_oracle_agreement(w: str) -> list[dict]:
    fast = enumerate_all(w)
    slow = enumerate_all(w, method="naive")
    return [
        {"check": "oracle_agreement", "word": w, "class": cls.value}
        for cls in PowerClass
        if fast[cls] != slow[cls]
    ]


CHECKS = {
    "prefix_suffix": check_lemma_prefix_suffix_in,
    "root_lengths": check_lemma_root_lengths,
    "distinct_starts": check_lemma_distinct_starts,
    "close_cubes": check_lemma_close_cubes,
    "run_of_p_occurrences": check_lemma_run_of_p_occurrences,
    "prefix_observations": check_prefix_observations,
    "bounds": check_bounds,
}


def random_corpus(count: int, max_len: int = 60, seed: int = 42, alphabets=("01", "012")) -> list[str]:
    """Seeded random words; alphabet chosen per word, length uniform in
    ``[1, max_len]``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        sigma = rng.choice(alphabets)
        n = rng.randint(1, max_len)
        out.append("".join(rng.choice(sigma) for _ in range(n)))
    return out


@dataclass
class LemmaReport:
    words: int = 0
    checks: dict[str, int] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"words": self.words, "checks": dict(self.checks), "violations": list(self.violations)}


def run_checks(words, names=None, oracle: bool = False) -> LemmaReport:
    names = list(CHECKS) if names is None else list(names)
    report = LemmaReport(checks={k: 0 for k in names})
    if oracle:
        report.checks["oracle_agreement"] = 0
    for w in words:
        report.words += 1
        for name in names:
            try:
                found = CHECKS[name](w)
            except InvariantViolation as exc:
                found = [{"check": name, "word": w, "error": str(exc)}]
            report.checks[name] += len(found)
            report.violations.extend(found)
        if oracle:
            found = check_oracle_agreement(w)
            report.checks["oracle_agreement"] += len(found)
            report.violations.extend(found)
    return report
