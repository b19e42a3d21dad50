"""Third-order Jacobsthal scalar sequences and their closed forms.

Both main sequences satisfy u(n+3) = u(n+2) + u(n+1) + 2*u(n); they differ
only in their first three terms.  The period-3 helpers ``v3`` and ``u3``
make the closed forms exact over the integers: no irrational or complex
intermediate ever appears.
"""

from __future__ import annotations

import threading

from .algebra import exact_div_int


class IndexOutOfRange(ValueError):
    """An index violates a sequence or identity precondition."""


def _require(n: int, minimum: int = 0, name: str = "n") -> None:
    if n < minimum:
        raise IndexOutOfRange(f"{name} must be >= {minimum}, got {n}")


class _RecurrenceCache:
    """Memoized terms of u(n+3) = u(n+2) + u(n+1) + 2*u(n).

    Extension is lock-guarded so concurrent callers never race while the
    tail grows; reads of already materialized terms stay lock-free.
    """

    def __init__(self, first_three: tuple[int, int, int]):
        self._values = list(first_three)
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> int:
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            values = self._values
            while len(values) <= n:
                values.append(values[-1] + values[-2] + 2 * values[-3])
            return values[n]


_J3 = _RecurrenceCache((0, 1, 1))
_JL3 = _RecurrenceCache((2, 1, 5))

_V3_TABLE = (2, -3, 1)


def third_jacobsthal(n: int) -> int:
    """n-th third-order Jacobsthal number: 0, 1, 1, 2, 5, 9, 18, 37, ...

    >>> [third_jacobsthal(n) for n in range(7)]
    [0, 1, 1, 2, 5, 9, 18]
    """
    _require(n)
    return _J3[n]


def third_jacobsthal_lucas(n: int) -> int:
    """n-th third-order Jacobsthal-Lucas number: 2, 1, 5, 10, 17, 37, 74, ...

    Same recurrence as :func:`third_jacobsthal`, seeded with 2, 1, 5.
    """
    _require(n)
    return _JL3[n]


def v3(n: int) -> int:
    """Period-3 correction term: 2, -3, 1 repeating by ``n % 3``.

    Any three consecutive values sum to zero.
    """
    _require(n)
    return _V3_TABLE[n % 3]


def u3(n: int) -> int:
    """Period-3 companion ``(v3(n+1) + 3*v3(n+2)) / 7``: 0, 1, -1 repeating."""
    _require(n)
    return exact_div_int(v3(n + 1) + 3 * v3(n + 2), 7)


def binet_j3(n: int) -> int:
    """Closed form ``(2**(n+1) - v3(n)) / 7``; equals ``third_jacobsthal(n)``."""
    _require(n)
    return exact_div_int(2 ** (n + 1) - v3(n), 7)


def binet_jl3(n: int) -> int:
    """Closed form ``(2**(n+3) + 3*v3(n)) / 7``; equals ``third_jacobsthal_lucas(n)``."""
    _require(n)
    return exact_div_int(2 ** (n + 3) + 3 * v3(n), 7)


def sum_j3(n: int) -> int:
    """Partial sum ``third_jacobsthal(0) + ... + third_jacobsthal(n)`` in closed form.

    Evaluates ``J(n+1) - (7 - 4*v3(n+1) + v3(n)) / 21``, which collapses to
    ``J(n+1) - 1`` when ``n % 3 == 0`` and to ``J(n+1)`` otherwise.
    """
    _require(n)
    return third_jacobsthal(n + 1) - exact_div_int(7 - 4 * v3(n + 1) + v3(n), 21)
