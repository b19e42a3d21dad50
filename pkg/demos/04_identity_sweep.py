#!/usr/bin/env python3
# Sweeping the identity registry over an index range and reading the report.
#
# Every check compares both sides exactly; a sweep never raises on a failed
# equality, it records it, so the report always covers the full range.

import json

from niljac import IdentityId, check, sweep

# a single check carries both evaluated sides
result = check(IdentityId.T6_CASSINI, 4)
print(f"one check: {result.identity.value} at {dict(result.indices)}")
print(f"  lhs = {result.lhs}")
print(f"  rhs = {result.rhs}")
print(f"  pass = {result.passed}")

# the two-index d'Ocagne-like identity takes a pair 0 <= m <= n
result = check(IdentityId.T6_DOCAGNE, 2, 7)
print(f"\npair check at m=2, n=7: {result.passed}, lhs = {result.lhs}")

# sweep everything up to an index bound
report = sweep(list(IdentityId), 50)
print(f"\nfull sweep to 50: {report.total} checks, {report.failures} failures")
for tag, row in report.summary.items():
    print(f"  {tag:<14} {row['pass']:>5} pass  {row['fail']:>3} fail")

# two of the identities admit a second reading that does not hold; the
# report says which reading is checked and carries a counterexample for
# the rejected variant
for note in report.meta["deviations"]:
    print(f"\nflag [{note['identity']}]: {note['note']}")
    if "counterexample" in note:
        print(f"  counterexample: {note['counterexample']}")

# reports serialize to JSON (quaternions as arrays of decimal strings) or CSV
small = sweep([IdentityId.P1, IdentityId.T6_CASSINI], 2)
print("\nJSON:")
print(json.dumps(json.loads(small.to_json())["results"][:2], indent=2))
print("\nCSV:")
print(small.to_csv())
