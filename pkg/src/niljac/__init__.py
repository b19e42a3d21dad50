"""Exact third-order Jacobsthal quaternion arithmetic over nilpotent units,
with a registry that mechanically verifies every identity the sequences
satisfy, over arbitrary index ranges.
"""

from ._version import __version__
from .algebra import (
    ONE,
    UNIT_I,
    UNIT_J,
    UNIT_K,
    NilQuat,
    NonDivisible,
    exact_div_int,
)
from .identities import (
    CheckResult,
    EmptySelection,
    IdentityId,
    Report,
    check,
    check_scalar_property,
    identity_from_name,
    sweep,
    worked_example,
)
from .quaternions import (
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
from .sequences import (
    IndexOutOfRange,
    binet_j3,
    binet_jl3,
    sum_j3,
    third_jacobsthal,
    third_jacobsthal_lucas,
    u3,
    v3,
)

__all__ = [
    "__version__",
    "ALPHA_Q",
    "C_POW",
    "C_SUM",
    "C_TWIST",
    "CheckResult",
    "EmptySelection",
    "IdentityId",
    "IndexOutOfRange",
    "NilQuat",
    "NonDivisible",
    "ONE",
    "Report",
    "SEQUENCE_KINDS",
    "UNIT_I",
    "UNIT_J",
    "UNIT_K",
    "binet_j3",
    "binet_jl3",
    "binet_jln_quat",
    "binet_jn_quat",
    "check",
    "check_scalar_property",
    "exact_div_int",
    "identity_from_name",
    "jln_quat",
    "jn_quat",
    "quat_sum_jn",
    "sum_j3",
    "sweep",
    "third_jacobsthal",
    "third_jacobsthal_lucas",
    "u3",
    "un_quat",
    "v3",
    "vn_quat",
    "worked_example",
]
