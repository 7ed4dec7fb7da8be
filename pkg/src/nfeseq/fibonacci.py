"""Exact Fibonacci and negaFibonacci numbers for any integer index.

Values are plain Python integers, so magnitude is bounded only by memory.
Large indices are evaluated by fast doubling, which needs O(log n) big
integer multiplications::

    F(2k)   = F(k) * (2*F(k+1) - F(k))
    F(2k+1) = F(k)**2 + F(k+1)**2

Negative indices follow ``F(-n) = (-1)**(n+1) * F(n)``.
"""

from __future__ import annotations

from .errors import IndexOverflow

#: Default bound on ``|n|``; override per call or with :func:`set_index_limit`.
DEFAULT_INDEX_LIMIT = 10_000_000

_index_limit = DEFAULT_INDEX_LIMIT

_TABLE_SIZE = 512


def _build_table(size: int) -> tuple[int, ...]:
    values = [0, 1]
    while len(values) < size:
        values.append(values[-1] + values[-2])
    return tuple(values)


_SMALL = _build_table(_TABLE_SIZE)


def index_limit() -> int:
    """Return the currently configured bound on ``|n|``."""
    return _index_limit


def set_index_limit(limit: int) -> int:
    """Set the global bound on ``|n|`` and return the previous value."""
    global _index_limit
    if limit < 0:
        raise ValueError("index limit must be non-negative")
    previous, _index_limit = _index_limit, int(limit)
    return previous


def _check(n: int, limit: int | None) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        try:
            as_int = int(n)
        except (TypeError, ValueError):
            raise TypeError(f"Fibonacci index must be an integer, got {n!r}") from None
        if as_int != n:
            raise TypeError(f"Fibonacci index must be an integer, got {n!r}")
        n = as_int
    bound = _index_limit if limit is None else limit
    if abs(n) > bound:
        raise IndexOverflow(f"|{n}| exceeds the Fibonacci index limit {bound}")
    return n


def _doubling(k: int) -> tuple[int, int]:
    """(F(k), F(k+1)) for k >= 0."""
    a, b = 0, 1
    for bit in bin(k)[2:]:
        c = a * ((b << 1) - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def _fib_nonneg(k: int) -> int:
    if k < _TABLE_SIZE:
        return _SMALL[k]
    return _doubling(k)[0]


def _signed(n: int) -> int:
    if n >= 0:
        return _fib_nonneg(n)
    value = _fib_nonneg(-n)
    return value if n & 1 else -value


def fib(n: int, *, limit: int | None = None) -> int:
    """Return the Fibonacci number ``F(n)`` for any integer ``n``.

    >>> [fib(k) for k in range(-4, 5)]
    [-3, 2, -1, 1, 0, 1, 1, 2, 3]

    Raises :class:`~nfeseq.errors.IndexOverflow` when ``|n|`` exceeds
    ``limit`` (defaults to :func:`index_limit`).
    """
    return _signed(_check(n, limit))


def fib_pair(n: int, *, limit: int | None = None) -> tuple[int, int]:
    """Return ``(F(n), F(n+1))``."""
    n = _check(n, limit)
    _check(n + 1, limit)
    if 0 <= n < _TABLE_SIZE - 1:
        return _SMALL[n], _SMALL[n + 1]
    if n >= 0:
        return _doubling(n)
    return _signed(n), _signed(n + 1)
