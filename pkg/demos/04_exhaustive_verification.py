#!/usr/bin/env python3
"""Re-verifying the syntactic conditions by exhaustive enumeration.

Every tuple of rules over a small language is labelled by the semantic
oracle and compared with a candidate condition.  An exact condition shows
zero mismatches; an incomplete one is caught immediately, mismatch
tuples included.
"""

import json
import os

from strongeq import cond_0_1_0, cond_1_1_0, s_implies
from strongeq.discovery import (
    TupleShape,
    discover_positive_tuples,
    language_symbols,
    test_conjecture,
)
from strongeq.syntax import format_rule

print("single-rule deletability over 3 atoms (511 rules):")
report = test_conjecture(TupleShape(0, 1, 0), 3, cond_0_1_0)
print(
    f"    {report.total_tuples} tuples, {report.se_positive_count} oracle-positive,"
    f" {report.mismatch_count} mismatches, {report.elapsed_ms:.0f} ms"
)

print()
print("pair deletability over 3 atoms (511^2 ordered pairs, all cores):")
report = test_conjecture(
    TupleShape(1, 1, 0), 3, cond_1_1_0, job_count=os.cpu_count() or 1
)
print(
    f"    {report.total_tuples} tuples, {report.mismatch_count} mismatches,"
    f" {report.elapsed_ms:.0f} ms"
)

print()
print("an incomplete conjecture is caught, with concrete witnesses:")
report = test_conjecture(TupleShape(1, 1, 0), 2, s_implies)
print(
    f"    one-way subsumption over 2 atoms: {report.mismatch_count} mismatches"
    f" out of {report.total_tuples}"
)
symbols = language_symbols(2)
sample = report.mismatches[0]
print("    first mismatch:", json.dumps(
    {
        "tuple": [format_rule(r, symbols) for r in sample.rules],
        "oracle": sample.oracle,
        "cond": sample.condition,
    }
))

print()
print("raw material for new conjectures: oracle-positive tuples, here the")
print("first five single rules over 2 atoms that are deletable anywhere:")
for i, (r,) in enumerate(discover_positive_tuples(TupleShape(0, 1, 0), 2)):
    if i == 5:
        break
    print("   ", format_rule(r, symbols))
