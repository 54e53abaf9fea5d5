#!/usr/bin/env python3
"""Strong equivalence: interchangeability of rule sets inside any program.

Two programs can have the same answer sets and still behave differently
once embedded in a larger program.  The oracle decides the stronger,
context-proof property and produces a two-world countermodel when the
answer is no.
"""

from strongeq import (
    Program,
    Symbols,
    answer_sets,
    countermodel_json,
    parse_program,
    strongly_equivalent,
)

symbols = Symbols()

print("equivalent but not interchangeable:")
p1 = parse_program("a :- b.", symbols)
p2 = parse_program("a :- c.", symbols)
print("    {a :- b.} and {a :- c.} both have the single answer set {}")
print("    answer sets agree:", answer_sets(p1) == answer_sets(p2))
verdict = strongly_equivalent(p1, p2)
print("    strongly equivalent:", verdict.equivalent)
print("    countermodel:", countermodel_json(verdict.countermodel, symbols))

context = parse_program("b.", symbols)
print("    adding the fact b. to both sides separates them:")
for name, p in (("left", p1), ("right", p2)):
    sets = answer_sets(Program(context.rules + p.rules))
    shown = ["{" + ", ".join(sorted(symbols.names(x))) + "}" for x in sets]
    print(f"        {name}: {' '.join(shown)}")

print()
print("genuinely interchangeable:")
q1 = parse_program("a :- not a.", symbols)
q2 = parse_program(":- not a.", symbols)
print("    {a :- not a.} vs {:- not a.}:", strongly_equivalent(q1, q2).equivalent)

print()
print("a disjunction can be traded for two default rules under an exclusion")
print("constraint, a classic non-obvious pair:")
d1 = parse_program("a;b. :- a, b.", symbols)
d2 = parse_program("a :- not b. b :- not a. :- a, b.", symbols)
print("    verdict:", strongly_equivalent(d1, d2).equivalent)
