"""Checks for the scalar sequences and their closed forms."""

from __future__ import annotations

import pytest

from niljac.sequences import (
    IndexOutOfRange,
    binet_j3,
    binet_jl3,
    sum_j3,
    third_jacobsthal,
    third_jacobsthal_lucas,
    u3,
    v3,
)


def _recurrence_oracle(first_three: tuple[int, int, int], count: int) -> list[int]:
    """Plain loop over u(n+3) = u(n+2) + u(n+1) + 2*u(n); no caching."""
    values = list(first_three)
    while len(values) < count:
        values.append(values[-1] + values[-2] + 2 * values[-3])
    return values


_J_ORACLE = _recurrence_oracle((0, 1, 1), 401)
_JL_ORACLE = _recurrence_oracle((2, 1, 5), 401)


def test_jacobsthal_terms():
    assert [third_jacobsthal(n) for n in range(7)] == [0, 1, 1, 2, 5, 9, 18]
    assert third_jacobsthal(9) == 146
    assert 7 * 146 == 2 ** 10 - v3(9)


def test_jacobsthal_lucas_terms():
    assert [third_jacobsthal_lucas(n) for n in range(7)] == [2, 1, 5, 10, 17, 37, 74]
    assert third_jacobsthal_lucas(7) == 145
    assert 7 * 145 == 2 ** 10 + 3 * v3(7)


def test_sequences_match_recurrence_oracle():
    for n in range(401):
        assert third_jacobsthal(n) == _J_ORACLE[n]
        assert third_jacobsthal_lucas(n) == _JL_ORACLE[n]


def test_v3_values_and_period():
    assert v3(0) == 2
    assert v3(4) == -3
    assert v3(300) == 2
    for n in range(120):
        assert v3(n + 3) == v3(n)
        assert v3(n) + v3(n + 1) + v3(n + 2) == 0


def test_u3_values():
    assert [u3(n) for n in range(6)] == [0, 1, -1, 0, 1, -1]


def test_u3_alternative_quotient_form():
    for n in range(60):
        assert 7 * u3(n + 1) == 2 * v3(n) - v3(n + 1)


def test_binet_anchors():
    assert binet_j3(5) == 9 == (2 ** 6 - 1) // 7
    assert binet_jl3(4) == 17 == (2 ** 7 - 9) // 7
    assert binet_j3(0) == 0


def test_binet_equals_recurrence():
    for n in range(301):
        assert binet_j3(n) == third_jacobsthal(n)
        assert binet_jl3(n) == third_jacobsthal_lucas(n)


def test_sum_anchors():
    assert sum_j3(3) == 4 == third_jacobsthal(4) - 1
    assert sum_j3(4) == 9 == third_jacobsthal(5)
    assert sum_j3(0) == 0


def test_sum_matches_naive_and_piecewise():
    running = 0
    for n in range(301):
        running += third_jacobsthal(n)
        assert sum_j3(n) == running
        expected = third_jacobsthal(n + 1)
        if n % 3 == 0:
            expected -= 1
        assert sum_j3(n) == expected


@pytest.mark.parametrize(
    "fn",
    [third_jacobsthal, third_jacobsthal_lucas, v3, u3, binet_j3, binet_jl3, sum_j3],
)
def test_negative_index_rejected(fn):
    with pytest.raises(IndexOutOfRange):
        fn(-1)
