"""Abstract simulation of normalized cube-occurrence sequences.

A state ``(p, occ, len)`` starts as ``(p, p, p)`` after emitting ``p``
copies of ``p``.  Each step picks a gap ``0 <= l < ceil(p/2)`` and a slack
``alpha >= 0``, sets ``p' = 2p - l + alpha`` and emits ``l`` zeros followed by
``p'`` copies of ``p'``.  The density invariant is kept in integers::

    5 * occ <= 4 * len + 2 * p
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np


class SimulationError(ValueError):
    pass


def ceil_half(p: int) -> int:
    return (p + 1) // 2


class SimState(NamedTuple):
    p: int
    occ: int
    len: int


class SimStep(NamedTuple):
    l: int
    alpha: int


@dataclass(frozen=True)
class SimTrace:
    initial_p: int
    steps: tuple[SimStep, ...] = ()

    @classmethod
    def parse(cls, initial_p: int, text: str) -> "SimTrace":
        """Build a trace from ``"l:alpha,l:alpha,..."``."""
        steps = []
        for k, item in enumerate(filter(None, (t.strip() for t in text.split(","))), 1):
            try:
                l, alpha = (int(x) for x in item.split(":"))
            except ValueError:
                raise SimulationError(f"step {k}: expected 'l:alpha', got {item!r}") from None
            steps.append(SimStep(l, alpha))
        return cls(initial_p, tuple(steps))


def sim_init(p: int) -> SimState:
    if p < 1:
        raise SimulationError("initial p must be positive")
    return SimState(p, p, p)


def sim_step(s: SimState, step: SimStep) -> SimState:
    l, alpha = step
    if not 0 <= l < ceil_half(s.p):
        raise SimulationError(f"gap exceeds ceil(p/2)-1: l={l}, p={s.p}")
    if alpha < 0:
        raise SimulationError(f"alpha must be nonnegative, got {alpha}")
    p = 2 * s.p - l + alpha
    return SimState(p, s.occ + p, s.len + l + p)


def invariant_holds(s: SimState) -> bool:
    return 5 * s.occ <= 4 * s.len + 2 * s.p


@dataclass
class SimResult:
    state: SimState
    sequence: list[int]
    states: list[SimState]

    @property
    def total_len(self) -> int:
        return self.state.len + ceil_half(self.state.p)

    @property
    def positives(self) -> int:
        return self.state.occ

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.positives, self.total_len)


def sim_run(trace: SimTrace, emit: bool = True) -> SimResult:
    """Fold the steps of ``trace``; the emitted sequence ends with
    ``ceil(p/2)`` zeros for the final ``p``."""
    s = sim_init(trace.initial_p)
    states = [s]
    seq = [s.p] * s.p if emit else []
    for k, step in enumerate(trace.steps, 1):
        try:
            s = sim_step(s, step)
        except SimulationError as exc:
            raise SimulationError(f"step {k}: {exc}") from None
        states.append(s)
        if emit:
            seq.extend([0] * step.l)
            seq.extend([s.p] * s.p)
    if emit:
        seq.extend([0] * ceil_half(s.p))
    return SimResult(s, seq, states)


@dataclass
class ExplorationReport:
    max_p0: int
    max_steps: int
    max_alpha: int
    traces: int = 0
    states_checked: int = 0
    violations: list[dict] = field(default_factory=list)
    max_ratio: Fraction = Fraction(0)

    def to_dict(self) -> dict:
        return {
            "max_p0": self.max_p0,
            "max_steps": self.max_steps,
            "max_alpha": self.max_alpha,
            # larger alpha only loosens the invariant, so the cap is conservative
            "alpha_monotone": True,
            "traces": self.traces,
            "states_checked": self.states_checked,
            "violations": list(self.violations),
            "max_ratio": {"num": self.max_ratio.numerator, "den": self.max_ratio.denominator},
        }


def _expand(p, occ, ln, n_alpha: int):
    """All children of the given states: one row per legal ``(l, alpha)``."""
    per = ((p + 1) // 2) * n_alpha
    parent = np.repeat(np.arange(len(p)), per)
    first = np.repeat(np.cumsum(per) - per, per)
    j = np.arange(len(parent)) - first
    l, alpha = np.divmod(j, n_alpha)
    pp = 2 * p[parent] - l + alpha
    return parent, l, alpha, pp, occ[parent] + pp, ln[parent] + l + pp


def _check_level(rep: "ExplorationReport", p, occ, ln, where, bound: Fraction) -> None:
    den = ln + (p + 1) // 2
    bad_inv = 5 * occ > 4 * ln + 2 * p
    bad_ratio = bound.denominator * occ > bound.numerator * den
    for k in np.flatnonzero(bad_inv | bad_ratio).tolist():
        p0, steps = where(k)
        rep.violations.append(
            {
                "initial_p": p0,
                "steps": steps,
                "state": [int(p[k]), int(occ[k]), int(ln[k])],
                "invariant_failed": bool(bad_inv[k]),
                "ratio_failed": bool(bad_ratio[k]),
            }
        )
    if len(p):
        approx = occ / den
        near = np.flatnonzero(approx >= approx.max() - 1e-9)
        best = max(Fraction(int(occ[k]), int(den[k])) for k in near.tolist())
        rep.max_ratio = max(rep.max_ratio, best)
    rep.traces += len(p)
    rep.states_checked += len(p)


def explore_traces(
    max_p0: int,
    max_steps: int,
    max_alpha: int,
    chunk: int = 1 << 21,
    ratio_bound: Fraction = Fraction(4, 5),
) -> ExplorationReport:
    """Check the invariant on every trace within the bounds, together with
    ``positives / emitted length <= ratio_bound``.

    Each prefix of a trace is itself a trace, so ``traces`` counts every
    node of the trace tree.  Levels are expanded with numpy; the deepest
    level is streamed in chunks and never stored.
    """
    if min(max_p0, max_steps, max_alpha) < 0:
        raise SimulationError("bounds must be nonnegative")
    rep = ExplorationReport(max_p0, max_steps, max_alpha)
    n_alpha = max_alpha + 1
    p = np.arange(1, max_p0 + 1, dtype=np.int64)
    levels = [(None, None, None)]  # (parent, l, alpha) per level

    def path_of(depth: int, k: int):
        steps = []
        while depth > 0:
            parent, l, alpha = levels[depth]
            steps.append([int(l[k]), int(alpha[k])])
            k = int(parent[k])
            depth -= 1
        return k + 1, steps[::-1]

    occ, ln = p.copy(), p.copy()
    _check_level(rep, p, occ, ln, lambda k: path_of(0, k), ratio_bound)
    for depth in range(1, max_steps + 1):
        if depth < max_steps:
            parent, l, alpha, p, occ, ln = _expand(p, occ, ln, n_alpha)
            levels.append((parent, l, alpha))
            _check_level(rep, p, occ, ln, lambda k, d=depth: path_of(d, k), ratio_bound)
            continue
        # deepest level: stream parents in chunks
        per = ((p + 1) // 2) * n_alpha
        bounds = np.searchsorted(np.cumsum(per), np.arange(chunk, int(per.sum()) + chunk, chunk))
        lo = 0
        for hi in sorted(set(bounds.tolist()) | {len(p)}):
            if hi <= lo:
                continue
            sl = slice(lo, hi)
            cpar, cl, calpha, cp, cocc, cln = _expand(p[sl], occ[sl], ln[sl], n_alpha)

            def where(k, cpar=cpar, cl=cl, calpha=calpha, base=lo, d=depth):
                p0, steps = path_of(d - 1, base + int(cpar[k]))
                return p0, steps + [[int(cl[k]), int(calpha[k])]]

            _check_level(rep, cp, cocc, cln, where, ratio_bound)
            lo = hi
    return rep


# ---------------------------------------------------------------------------
# c -> c' normalization


def _ratio(c: Sequence[int]) -> Fraction:
    return Fraction(sum(1 for x in c if x), len(c)) if c else Fraction(0)


def _merge_equal(c: list[int]) -> list[int] | None:
    """Drop the zeros between the leftmost pair of equal positives separated
    only by zeros."""
    last = None  # index of the previous positive
    for i, x in enumerate(c):
        if not x:
            continue
        if last is not None and c[last] == x and i - last > 1:
            return c[: last + 1] + c[i:]
        last = i
    return None


def _extend_short_run(c: list[int]) -> list[int] | None:
    """Pad the leftmost maximal run of ``q`` shorter than ``q`` to length ``q``."""
    i = 0
    n = len(c)
    while i < n:
        q = c[i]
        j = i
        while j < n and c[j] == q:
            j += 1
        if q and j - i < q:
            return c[:j] + [q] * (q - (j - i)) + c[j:]
        i = j
    return None


def normalize_c(c: Sequence[int], check: bool = True) -> list[int]:
    """Apply merging and run extension until neither applies.

    With ``check`` set, every elementary step is verified not to decrease
    the fraction of positive entries.
    """
    cur = list(c)
    while True:
        nxt = _merge_equal(cur)
        if nxt is None:
            nxt = _extend_short_run(cur)
        if nxt is None:
            return cur
        if check and _ratio(nxt) < _ratio(cur):
            raise SimulationError(f"normalization step decreased the ratio: {cur} -> {nxt}")
        cur = nxt


def trace_from_sequence(c: Sequence[int]) -> tuple[SimTrace | None, str]:
    """Try to read a normalized sequence as the output of a trace.

    Returns ``(trace, "")`` on success, otherwise ``(None, reason)``.
    """
    c = list(c)
    if not c or c[0] <= 0:
        return None, "sequence must start with a positive entry"
    blocks: list[tuple[int, int, int]] = []  # (zeros before, value, run length)
    i, n = 0, len(c)
    zeros = 0
    while i < n:
        if c[i] == 0:
            zeros += 1
            i += 1
            continue
        q = c[i]
        j = i
        while j < n and c[j] == q:
            j += 1
        blocks.append((zeros, q, j - i))
        zeros = 0
        i = j
    trailing = zeros
    p0 = blocks[0][1]
    for k, (_, q, run) in enumerate(blocks):
        if run != q:
            return None, f"block {k}: run of {q} has length {run}"
    steps = []
    p = p0
    for k, (l, q, _) in enumerate(blocks[1:], 1):
        if not l < ceil_half(p):
            return None, f"block {k}: gap {l} not below ceil({p}/2)"
        alpha = q - (2 * p - l)
        if alpha < 0:
            return None, f"block {k}: value {q} below 2*{p}-{l}"
        steps.append(SimStep(l, alpha))
        p = q
    if trailing != ceil_half(p):
        return None, f"trailing zeros {trailing} != ceil({p}/2)"
    return SimTrace(p0, tuple(steps)), ""
