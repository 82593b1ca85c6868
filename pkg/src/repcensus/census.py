"""Distinct repetitive subwords and their last occurrences.

Every subword is reported at its *last* occurrence.  A power ``u = r**e``
(``r`` primitive, ``e >= 2``) falls into one or more classes:

==========  ==========================
CUBE        ``e % 3 == 0``
SQUARE      ``e % 2 == 0``
NP_SQUARE   ``e % 2 == 0 and e >= 4``
HR          ``e >= 3``
==========  ==========================

Two enumerators are provided.  :func:`enumerate_distinct_naive` walks every
distinct subword; :func:`enumerate_distinct` (the default) derives the
powers from maximal periodic segments and is fast enough for words of a few
thousand symbols.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .words import WordError, root_length


class PowerClass(str, enum.Enum):
    CUBE = "cube"
    SQUARE = "square"
    NP_SQUARE = "np_square"
    HR = "hr"

    def admits(self, exponent: int) -> bool:
        if self is PowerClass.CUBE:
            return exponent >= 3 and exponent % 3 == 0
        if self is PowerClass.SQUARE:
            return exponent >= 2 and exponent % 2 == 0
        if self is PowerClass.NP_SQUARE:
            return exponent >= 4 and exponent % 2 == 0
        return exponent >= 3

    @classmethod
    def parse(cls, name: str) -> "PowerClass":
        key = name.strip().lower().replace("-", "_")
        aliases = {"cubes": "cube", "squares": "square", "np_squares": "np_square", "npsquare": "np_square"}
        key = aliases.get(key, key)
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"unknown power class {name!r}")


@dataclass(frozen=True, order=True)
class Occurrence:
    start: int  # 1-based
    total_len: int
    root_len: int
    cls: PowerClass = field(compare=False)

    @property
    def exponent(self) -> int:
        return self.total_len // self.root_len

    @property
    def end(self) -> int:
        return self.start + self.total_len - 1

    def text(self, w: str) -> str:
        return w[self.start - 1 : self.end]

    def to_dict(self) -> dict:
        return {
            "start": self.start,
            "root_len": self.root_len,
            "total_len": self.total_len,
            "class": self.cls.value,
        }


class InvariantViolation(AssertionError):
    """A structural claim that should hold for every word failed."""


# ---------------------------------------------------------------------------
# definition-level oracle


def naive_powers(w: str) -> list[tuple[int, int, int]]:
    """``(start, total_len, root_len)`` for every distinct subword with
    exponent at least 2, at its last occurrence (0-based start)."""
    n = len(w)
    seen: set[str] = set()
    out = []
    # right to left: the first time a value is met is its last occurrence
    for i in range(n - 1, -1, -1):
        for j in range(i + 2, n + 1):
            u = w[i:j]
            if u in seen:
                continue
            seen.add(u)
            p = root_length(u)
            if p < len(u):
                out.append((i, len(u), p))
    return out


def _filter_naive(powers, cls: PowerClass) -> list[Occurrence]:
    out = [Occurrence(i + 1, t, p, cls) for i, t, p in powers if cls.admits(t // p)]
    out.sort()
    return out


def enumerate_distinct_naive(w: str, cls: PowerClass) -> list[Occurrence]:
    return _filter_naive(naive_powers(w), PowerClass(cls))


# ---------------------------------------------------------------------------
# optimized path


def _primitive_segments(w: str):
    """Yield ``(a, b, p)``: ``w[a:b]`` is a maximal segment with period ``p``,
    length at least ``2p``, and primitive root length exactly ``p``."""
    n = len(w)
    if n < 2:
        return
    arr = np.frombuffer(w.encode("latin-1"), dtype=np.uint8)
    for p in range(1, n // 2 + 1):
        eq = arr[:-p] == arr[p:]
        padded = np.concatenate(([False], eq, [False]))
        edges = np.flatnonzero(padded[1:] != padded[:-1])
        starts = edges[0::2]
        stops = edges[1::2]
        long_enough = (stops - starts) >= p
        for a, e in zip(starts[long_enough].tolist(), stops[long_enough].tolist()):
            if root_length(w[a : a + p]) == p:
                yield a, e + p, p


def power_occurrences(w: str) -> dict[tuple[int, str], int]:
    """Map each distinct power ``r**e`` (``e >= 2``, ``r`` primitive) to the
    0-based start of its last occurrence.  Keys are ``(total_len, r)``."""
    last: dict[tuple[int, str], int] = {}
    for a, b, p in _primitive_segments(w):
        length = b - a
        for total in range(2 * p, length + 1, p):
            hi = b - total  # last start inside the segment
            lo = max(a, hi - p + 1)
            for s in range(lo, hi + 1):
                key = (total, w[s : s + p])
                if last.get(key, -1) < s:
                    last[key] = s
    return last


def _occurrences_from_powers(last: dict[tuple[int, str], int], cls: PowerClass) -> list[Occurrence]:
    out = []
    for (total, root), s in last.items():
        p = len(root)
        if cls.admits(total // p):
            out.append(Occurrence(s + 1, total, p, cls))
    out.sort()
    return out


def enumerate_distinct(w: str, cls: PowerClass, method: str = "fast") -> list[Occurrence]:
    """Distinct subwords of ``w`` in class ``cls``, one per value, at their
    last occurrence, sorted by ``(start, total_len)``."""
    cls = PowerClass(cls)
    if method == "naive":
        return enumerate_distinct_naive(w, cls)
    if method != "fast":
        raise ValueError(f"unknown method {method!r}")
    return _occurrences_from_powers(power_occurrences(w), cls)


def count_distinct(w: str, cls: PowerClass, method: str = "fast") -> int:
    return len(enumerate_distinct(w, cls, method))


# ---------------------------------------------------------------------------
# census


@dataclass
class CensusReport:
    word_len: int
    counts: dict[PowerClass, int]
    cube_last_occurrences: list[Occurrence]
    c_sequence: list[int]

    def to_dict(self) -> dict:
        return {
            "word_len": self.word_len,
            "counts": {k.value: v for k, v in self.counts.items()},
            "cube_last_occurrences": [o.to_dict() for o in self.cube_last_occurrences],
            "c_sequence": list(self.c_sequence),
        }


def c_sequence_from(n: int, cubes: Iterable[Occurrence]) -> list[int]:
    c = [0] * n
    for o in cubes:
        if c[o.start - 1]:
            raise InvariantViolation(f"two cube last occurrences start at position {o.start}")
        c[o.start - 1] = o.root_len
    return c


def enumerate_all(w: str, method: str = "fast") -> dict[PowerClass, list[Occurrence]]:
    """:func:`enumerate_distinct` for every class, sharing one pass."""
    if method == "naive":
        powers = naive_powers(w)
        return {cls: _filter_naive(powers, cls) for cls in PowerClass}
    if method != "fast":
        raise ValueError(f"unknown method {method!r}")
    last = power_occurrences(w)
    return {cls: _occurrences_from_powers(last, cls) for cls in PowerClass}


def census(w: str, method: str = "fast") -> CensusReport:
    per_class = enumerate_all(w, method)
    cubes = per_class[PowerClass.CUBE]
    return CensusReport(
        word_len=len(w),
        counts={cls: len(v) for cls, v in per_class.items()},
        cube_last_occurrences=cubes,
        c_sequence=c_sequence_from(len(w), cubes),
    )


def cube_c_sequence(w: str) -> list[int]:
    return c_sequence_from(len(w), enumerate_distinct(w, PowerClass.CUBE))


def independent_prefix_from_c(c: list[int]) -> int:
    """Length of the independent prefix given the word's c-sequence."""
    n = len(c)
    if n == 0:
        raise WordError("empty word has no independent prefix")
    if c[0] == 0:
        return 1
    for i in range(n):
        q = c[i]
        if not q:
            continue
        end = i + (q + 1) // 2  # 0-based index of the last free position
        if end < n and not any(c[i + 1 : end + 1]):
            return end + 1
    raise InvariantViolation(f"no independent prefix found for c-sequence {c}")


def independent_prefix(w: str) -> int:
    if not w:
        raise WordError("empty word has no independent prefix")
    return independent_prefix_from_c(cube_c_sequence(w))
