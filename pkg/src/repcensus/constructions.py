"""Word families with known repetition counts."""

from __future__ import annotations

from .words import WordError

FAMILIES = ("qn", "uniform", "fs_prime")


def _positive(i: int, what: str = "i") -> None:
    if i < 1:
        raise WordError(f"{what} must be >= 1, got {i}")


def p_block(i: int) -> str:
    """``0^i 1 0^(i+1) 1``, of length ``2i + 3``."""
    _positive(i)
    return "0" * i + "1" + "0" * (i + 1) + "1"


def q_word(n: int) -> str:
    """Concatenation ``p_block(1) ... p_block(n)``, of length ``n^2 + 4n``."""
    _positive(n, "n")
    return "".join(p_block(i) for i in range(1, n + 1))


def expected_q_length(n: int) -> int:
    return n * n + 4 * n


def expected_qn_cubes(n: int) -> int:
    """Distinct cubes in ``q_word(n)``: ``n(n+1)/2 - 1 + floor((n+1)/3)``."""
    _positive(n, "n")
    return n * (n + 1) // 2 - 1 + (n + 1) // 3


def qn_half_gap(n: int) -> int:
    """``(3/2)n - floor((n+1)/3) + 1`` for even ``n``; the distance between
    half the length of ``q_word(n)`` and its cube count."""
    if n % 2:
        raise WordError("the gap identity is stated for even n")
    return 3 * n // 2 - (n + 1) // 3 + 1


def block_pair_cubes(i: int) -> list[str]:
    """The ``i + 1`` cubes ``(0^(i-k) 1 0^(k+1))^3``, ``k = 0..i``, found in
    ``p_block(i) + p_block(i + 1)``."""
    _positive(i)
    return [("0" * (i - k) + "1" + "0" * (k + 1)) * 3 for k in range(i + 1)]


def uniform_word(symbol: str, n: int) -> str:
    if len(symbol) != 1:
        raise WordError(f"symbol must be a single character, got {symbol!r}")
    if n < 0:
        raise WordError("n must be nonnegative")
    return symbol * n


def fs_prime_block(i: int) -> str:
    """``0^(i+1) 1 0^i 1 0^(i+1) 1``, of length ``3i + 5``."""
    _positive(i)
    return "0" * (i + 1) + "1" + "0" * i + "1" + "0" * (i + 1) + "1"


def construct(family: str, n: int, symbol: str = "a") -> str:
    family = family.lower().replace("-", "_")
    if family == "qn":
        return q_word(n)
    if family == "uniform":
        return uniform_word(symbol, n)
    if family == "fs_prime":
        return fs_prime_block(n)
    raise WordError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
