#!/usr/bin/env python3
# The worked Cassini-like computation, step by step.
#
# (JN3(m+1))^2 - JN3(m+2)*JN3(m) collapses to a small quaternion that the
# closed form reproduces exactly.  worked_example() re-runs the whole
# computation and asserts every constant on the way.

from niljac import jn_quat, worked_example

jn0, jn1, jn2, jn3 = (jn_quat(m) for m in range(4))
print(f"JN3(0) = {jn0}")
print(f"JN3(1) = {jn1}")
print(f"JN3(2) = {jn2}")
print(f"JN3(3) = {jn3}")

print(f"\n(JN3(1))^2        = {jn1 ** 2}")
print(f"JN3(2)*JN3(0)     = {jn2 * jn0}")
print(f"difference        = {jn1 ** 2 - jn2 * jn0}")

print(f"\n(JN3(2))^2        = {jn2 ** 2}")
print(f"JN3(3)*JN3(1)     = {jn3 * jn1}")
print(f"difference        = {jn2 ** 2 - jn3 * jn1}")

report = worked_example()
print(f"\nworked_example(): {report.total} assertions, {report.failures} failures")
print(report.render_text(show_all=True))
