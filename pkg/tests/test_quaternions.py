"""Checks for the quaternion-valued sequence windows and constants."""

from __future__ import annotations

import pytest

from niljac.algebra import NilQuat
from niljac.quaternions import (
    ALPHA_Q,
    C_POW,
    C_SUM,
    C_TWIST,
    SEQUENCE_KINDS,
    binet_jln_quat,
    binet_jn_quat,
    jln_quat,
    jn_quat,
    quat_sum_jn,
    un_quat,
    vn_quat,
)
from niljac.sequences import IndexOutOfRange


def test_constants():
    assert ALPHA_Q == NilQuat(1, 2, 4, 8)
    assert C_TWIST == NilQuat(1, -1, -1, 2)
    assert C_POW == NilQuat(1, 4, 8, 16)
    assert C_SUM == NilQuat(1, 1, 4, 7)


def test_jn_quat_anchors():
    assert jn_quat(0) == NilQuat(0, 1, 1, 2)
    assert jn_quat(3) == NilQuat(2, 5, 9, 18)
    assert jn_quat(4) == NilQuat(5, 9, 18, 37)


def test_jln_quat_anchors():
    assert jln_quat(0) == NilQuat(2, 1, 5, 10)
    assert jln_quat(1) == NilQuat(1, 5, 10, 17)
    assert jln_quat(3) == NilQuat(10, 17, 37, 74)


def test_vn_quat_anchors_and_period():
    assert vn_quat(0) == NilQuat(2, -3, 1, 2)
    assert vn_quat(1) == NilQuat(-3, 1, 2, -3)
    assert vn_quat(5) == vn_quat(2) == NilQuat(1, 2, -3, 1)
    for m in range(40):
        assert vn_quat(m + 3) == vn_quat(m)


def test_un_quat_anchors_and_period():
    assert un_quat(0) == NilQuat(0, 1, -1, 0)
    assert un_quat(1) == NilQuat(1, -1, 0, 1)
    assert un_quat(2) == NilQuat(-1, 0, 1, -1)
    for m in range(40):
        assert un_quat(m + 3) == un_quat(m)


def test_un_quotient_form():
    # the quotient form only defines terms from index 1 upward
    for m in range(40):
        assert un_quat(m + 1) == (vn_quat(m) * 2 - vn_quat(m + 1)).exact_div(7)


def test_binet_quat_anchors():
    assert binet_jn_quat(0) == NilQuat(0, 1, 1, 2)
    assert binet_jln_quat(0) == NilQuat(2, 1, 5, 10)
    assert binet_jn_quat(3) == NilQuat(2, 5, 9, 18)


def test_binet_quats_equal_windows():
    for m in range(301):
        assert binet_jn_quat(m) == jn_quat(m)
        assert binet_jln_quat(m) == jln_quat(m)


def test_binet_integer_rearrangement():
    for m in range(120):
        assert jn_quat(m) * 7 + vn_quat(m) == ALPHA_Q * 2 ** (m + 1)


def test_partial_sum_anchors():
    assert quat_sum_jn(0) == NilQuat(0, 1, 1, 2)
    assert quat_sum_jn(2) == NilQuat(2, 4, 8, 16)
    assert quat_sum_jn(3) == NilQuat(4, 9, 17, 34)


def test_partial_sum_matches_naive():
    running = NilQuat()
    for m in range(201):
        running = running + jn_quat(m)
        assert quat_sum_jn(m) == running


def test_sequence_kinds_mapping():
    assert set(SEQUENCE_KINDS) == {"J3", "j3", "V3", "U3", "JN3", "jN3", "VN3", "UN3"}
    assert SEQUENCE_KINDS["J3"](9) == 146
    assert SEQUENCE_KINDS["jN3"](0) == NilQuat(2, 1, 5, 10)


@pytest.mark.parametrize(
    "fn",
    [jn_quat, jln_quat, vn_quat, un_quat, binet_jn_quat, binet_jln_quat, quat_sum_jn],
)
def test_negative_index_rejected(fn):
    with pytest.raises(IndexOutOfRange):
        fn(-1)
