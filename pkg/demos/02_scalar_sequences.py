#!/usr/bin/env python3
# The third-order Jacobsthal and Jacobsthal-Lucas scalar sequences, the
# period-3 helpers that make their closed forms exact, and the partial sums.

from niljac import (
    binet_j3,
    binet_jl3,
    sum_j3,
    third_jacobsthal,
    third_jacobsthal_lucas,
    u3,
    v3,
)

print("n      :", *[f"{n:>5}" for n in range(10)])
print("J3(n)  :", *[f"{third_jacobsthal(n):>5}" for n in range(10)])
print("j3(n)  :", *[f"{third_jacobsthal_lucas(n):>5}" for n in range(10)])
print("V3(n)  :", *[f"{v3(n):>5}" for n in range(10)])
print("U3(n)  :", *[f"{u3(n):>5}" for n in range(10)])

# both sequences satisfy u(n+3) = u(n+2) + u(n+1) + 2*u(n)
n = 6
lhs = third_jacobsthal(n + 3)
rhs = third_jacobsthal(n + 2) + third_jacobsthal(n + 1) + 2 * third_jacobsthal(n)
print(f"\nrecurrence at n={n}: J3({n + 3}) = {lhs} = {rhs}")

# the closed forms divide a power of 2 shifted by the period-3 correction;
# the division by 7 is always exact
n = 20
print(f"\nclosed forms at n={n}:")
print(f"  (2^{n + 1} - V3({n})) / 7 = {binet_j3(n)} = J3({n}) = {third_jacobsthal(n)}")
print(f"  (2^{n + 3} + 3*V3({n})) / 7 = {binet_jl3(n)} = j3({n}) = {third_jacobsthal_lucas(n)}")

# 7*J3(n) + V3(n) reproduces the power of two on the nose
print(f"  7*J3({n}) + V3({n}) = {7 * third_jacobsthal(n) + v3(n)} = 2^{n + 1}")

# partial sums collapse to a neighbor term, give or take 1
print("\npartial sums:")
for n in (3, 4, 5, 6):
    naive = sum(third_jacobsthal(k) for k in range(n + 1))
    print(f"  sum J3(0..{n}) = {sum_j3(n)} (naive {naive}), J3({n + 1}) = {third_jacobsthal(n + 1)}")

# terms grow like 2^n/7, about 0.3*n decimal digits
print(f"\nJ3(500) has {len(str(third_jacobsthal(500)))} digits")
