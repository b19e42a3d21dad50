#!/usr/bin/env python3
# A tour of the nilpotent-unit quaternion algebra.
#
# The basis units i, j, k all square to zero and every mixed product of two
# units vanishes, so multiplication is commutative and a product keeps only
# the scalar-times-anything terms.

from niljac import NilQuat, NonDivisible, UNIT_I, UNIT_J, UNIT_K

print("units square to zero:")
for name, unit in (("i", UNIT_I), ("j", UNIT_J), ("k", UNIT_K)):
    print(f"  {name}^2 = {unit * unit}")
print(f"  i*j = {UNIT_I * UNIT_J}, j*k = {UNIT_J * UNIT_K}")

p = NilQuat(1, 1, 2, 5)
q = NilQuat(1, 2, 5, 9)
print(f"\np = {p}")
print(f"q = {q}")
print(f"p + q = {p + q}")
print(f"p * q = {p * q}")
print(f"q * p = {q * p}   (same thing: the algebra is commutative)")
print(f"p^2   = {p ** 2}")

# the conjugate flips the vector part; multiplying by it leaves only s^2
print(f"\nconj(q)      = {q.conjugate()}")
print(f"q * conj(q)  = {q * q.conjugate()}")
print(f"norm_sq(q)   = {q.norm_sq()}")

# any pure vector is nilpotent
v = NilQuat(0, 3, -4, 7)
print(f"\nv = {v} is a pure vector, v^2 = {v * v}")

# components are exact integers at any size
big = NilQuat(2 ** 200, 1, 0, -(2 ** 100))
print(f"\nexact at any magnitude: ({big}) * 7 / 7 round-trips:")
print(f"  {(big * 7).exact_div(7) == big}")

# exact division refuses to round and names the failing component
try:
    NilQuat(1, 0, 0, 0).exact_div(7)
except NonDivisible as exc:
    print(f"\nexact division failure is loud: {exc}")
