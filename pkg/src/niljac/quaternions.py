"""Quaternion-valued sequence windows over the scalar sequences.

Each generator packs four consecutive scalar terms into one :class:`NilQuat`:
term ``m`` becomes the scalar part and terms ``m+1``, ``m+2``, ``m+3`` the
``i``, ``j``, ``k`` coefficients.
"""

from __future__ import annotations

from typing import Callable

from .algebra import NilQuat
from .sequences import (
    _require,
    third_jacobsthal,
    third_jacobsthal_lucas,
    u3,
    v3,
)

#: Binet base quaternion: the powers 2**0 .. 2**3 packed into the basis.
ALPHA_Q = NilQuat(1, 2, 4, 8)
#: Correction constant of the Cassini-like and d'Ocagne-like closed forms.
C_TWIST = NilQuat(1, -1, -1, 2)
#: Envelope constant of the power-of-4 quadratic identities.
C_POW = NilQuat(1, 4, 8, 16)
#: Offset constant of the partial-sum closed form.
C_SUM = NilQuat(1, 1, 4, 7)


def _window(term: Callable[[int], int], m: int) -> NilQuat:
    return NilQuat(term(m), term(m + 1), term(m + 2), term(m + 3))


def jn_quat(m: int) -> NilQuat:
    """Third-order Jacobsthal quaternion ``(J(m), J(m+1), J(m+2), J(m+3))``."""
    return _window(third_jacobsthal, m)


def jln_quat(m: int) -> NilQuat:
    """Third-order Jacobsthal-Lucas quaternion ``(j(m), ..., j(m+3))``."""
    return _window(third_jacobsthal_lucas, m)


def vn_quat(m: int) -> NilQuat:
    """Correction quaternion ``(v3(m), ..., v3(m+3))``; period 3 in m."""
    return _window(v3, m)


def un_quat(m: int) -> NilQuat:
    """Companion quaternion ``(u3(m), ..., u3(m+3))``; period 3 in m.

    Built componentwise from :func:`u3` so it is defined for every m >= 0;
    for m >= 1 it also equals ``(2*vn_quat(m-1) - vn_quat(m)) / 7``.
    """
    return _window(u3, m)


def binet_jn_quat(m: int) -> NilQuat:
    """Closed form ``(2**(m+1)*ALPHA_Q - vn_quat(m)) / 7``; equals ``jn_quat(m)``."""
    _require(m, name="m")
    return (ALPHA_Q * 2 ** (m + 1) - vn_quat(m)).exact_div(7)


def binet_jln_quat(m: int) -> NilQuat:
    """Closed form ``(2**(m+3)*ALPHA_Q + 3*vn_quat(m)) / 7``; equals ``jln_quat(m)``."""
    _require(m, name="m")
    return (ALPHA_Q * 2 ** (m + 3) + vn_quat(m) * 3).exact_div(7)


def quat_sum_jn(m: int) -> NilQuat:
    """Partial sum ``jn_quat(0) + ... + jn_quat(m)`` in closed form.

    Evaluates ``jn_quat(m+1) - (7*C_SUM - 4*vn_quat(m+1) + vn_quat(m)) / 21``;
    the division is always exact.
    """
    _require(m, name="m")
    correction = (C_SUM * 7 - vn_quat(m + 1) * 4 + vn_quat(m)).exact_div(21)
    return jn_quat(m + 1) - correction


#: Term generators for every sequence kind the library exposes, keyed by
#: their conventional (case-sensitive) names.
SEQUENCE_KINDS: dict[str, Callable[[int], int | NilQuat]] = {
    "J3": third_jacobsthal,
    "j3": third_jacobsthal_lucas,
    "V3": v3,
    "U3": u3,
    "JN3": jn_quat,
    "jN3": jln_quat,
    "VN3": vn_quat,
    "UN3": un_quat,
}
