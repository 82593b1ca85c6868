"""Periods, borders and primitive roots of words.

Words are plain ``str`` objects over a byte-valued (ASCII) alphabet.  All
positions reported by this package are 1-based.
"""

from __future__ import annotations

from math import gcd
from typing import NamedTuple

Word = str


class WordError(ValueError):
    """Raised for malformed words or illegal arguments on words."""


class RootDecomposition(NamedTuple):
    root: str
    exponent: int


def check_word(w: str, alphabet: str | None = None) -> str:
    """Validate ``w`` and return it unchanged.

    Without an explicit alphabet any printable, non-blank ASCII symbol is
    accepted.  The error message names the offending symbol and its
    1-based position.
    """
    allowed = set(alphabet) if alphabet is not None else None
    for pos, ch in enumerate(w, 1):
        code = ord(ch)
        if allowed is not None:
            ok = ch in allowed
        else:
            ok = 33 <= code <= 126
        if not ok:
            raise WordError(f"invalid symbol {ch!r} (byte 0x{code:02x}) at position {pos}")
    return w


def _require_nonempty(w: str) -> None:
    if not w:
        raise WordError("empty word has no periods")


def border_table(w: str) -> list[int]:
    """Failure function: ``b[i]`` is the longest proper border of ``w[:i]``."""
    n = len(w)
    b = [0] * (n + 1)
    b[0] = -1
    k = -1
    for i in range(n):
        while k >= 0 and w[k] != w[i]:
            k = b[k]
        k += 1
        b[i + 1] = k
    b[0] = 0
    return b


def periods(w: str) -> set[int]:
    """All periods of ``w``, read off the chain of borders."""
    _require_nonempty(w)
    b = border_table(w)
    n = len(w)
    out = {n}
    k = b[n]
    while k > 0:
        out.add(n - k)
        k = b[k]
    return out


def periods_naive(w: str) -> set[int]:
    _require_nonempty(w)
    n = len(w)
    return {p for p in range(1, n + 1) if all(w[i] == w[i + p] for i in range(n - p))}


def smallest_period(w: str) -> int:
    _require_nonempty(w)
    return len(w) - border_table(w)[len(w)]


def root_length(w: str) -> int:
    """Length of the primitive root of a nonempty word.

    The smallest nontrivial rotation mapping ``w`` onto itself; it always
    divides ``len(w)``.
    """
    _require_nonempty(w)
    return (w + w).find(w, 1)


def primitive_root(w: str) -> RootDecomposition:
    p = root_length(w)
    return RootDecomposition(w[:p], len(w) // p)


def is_primitive(w: str) -> bool:
    return root_length(w) == len(w)


def fine_wilf_holds(w: str, p: int, q: int) -> bool:
    """Return whether ``gcd(p, q)`` is a period of ``w``.

    ``p`` and ``q`` must both be periods of ``w``.  The periodicity lemma
    says the answer is ``True`` whenever :func:`fine_wilf_premise` holds.
    """
    ps = periods(w)
    for x in (p, q):
        if x not in ps:
            raise WordError(f"{x} is not a period of {w!r}")
    return gcd(p, q) in ps


def fine_wilf_premise(n: int, p: int, q: int, weak: bool = False) -> bool:
    """``p + q <= n + gcd(p, q)``, or ``p + q <= n`` when ``weak``."""
    if weak:
        return p + q <= n
    return p + q <= n + gcd(p, q)
