"""
Checking every identity
=======================

Each suite compares closed forms against raw matrix arithmetic, exhaustively
for small q. A failure reports its first counterexample.
"""

import sys

from psl2ogs import verify

qs = [int(a) for a in sys.argv[1:]] or [4, 7, 9, 29]
for q in qs:
    report = verify.run_suite(q, "all")
    print("\n".join(report.lines()))
    print()

print("property -> checks")
for prop, names in verify.coverage().items():
    print(f"  {prop:<32} {', '.join(names)}")
