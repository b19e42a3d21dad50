#!/usr/bin/env python3
# The quaternion-valued sequences: four consecutive scalar terms packed into
# one quaternion, and their exact Binet-style closed forms.

from niljac import (
    ALPHA_Q,
    binet_jln_quat,
    binet_jn_quat,
    jln_quat,
    jn_quat,
    quat_sum_jn,
    un_quat,
    vn_quat,
)

print("the first few quaternion terms:")
for m in range(5):
    print(f"  JN3({m}) = {jn_quat(m)}")
print()
for m in range(3):
    print(f"  jN3({m}) = {jln_quat(m)}")

# VN3 and UN3 cycle with period 3
print("\nperiod-3 companions:")
for m in range(4):
    print(f"  VN3({m}) = {vn_quat(m)}    UN3({m}) = {un_quat(m)}")

# UN3 also arises as an exact quotient of consecutive VN3 terms
m = 4
quotient = (vn_quat(m) * 2 - vn_quat(m + 1)).exact_div(7)
print(f"\n(2*VN3({m}) - VN3({m + 1})) / 7 = {quotient} = UN3({m + 1})")

# the closed forms mirror the scalar ones, with ALPHA_Q carrying the
# powers of two across the basis
print(f"\nALPHA_Q = {ALPHA_Q}")
for m in (0, 3, 10):
    assert binet_jn_quat(m) == jn_quat(m)
    assert binet_jln_quat(m) == jln_quat(m)
    print(f"  (2^{m + 1}*ALPHA_Q - VN3({m})) / 7 = {binet_jn_quat(m)} = JN3({m})")

# rearranged without the division: 7*JN3(m) + VN3(m) = 2^(m+1)*ALPHA_Q
m = 6
print(f"\n7*JN3({m}) + VN3({m}) = {jn_quat(m) * 7 + vn_quat(m)} = 2^{m + 1}*ALPHA_Q")

# partial sums in closed form, cross-checked naively
total = jn_quat(0)
for s in range(1, 6):
    total = total + jn_quat(s)
print(f"\nsum JN3(0..5) = {quat_sum_jn(5)} (naive {total})")
