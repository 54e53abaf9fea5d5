#!/usr/bin/env python3
"""Constant-time syntactic tests for rule redundancy and replacement.

Each cond_k_m_n answers a k-m-n question: are k shared rules plus m rules
strongly equivalent to the same k shared rules plus n rules?  They are
exact, so each answer matches the semantic oracle.
"""

from strongeq import (
    Program,
    Symbols,
    cond_0_1_0,
    cond_0_1_1,
    cond_0_2_1,
    cond_1_1_0,
    cond_2_1_0,
    parse_rule,
    s_implies,
    strongly_equivalent,
    subsume_witness,
)

symbols = Symbols()
rule = lambda text: parse_rule(text, symbols)
oracle = lambda left, right: strongly_equivalent(
    Program(tuple(left)), Program(tuple(right))
).equivalent

print("deleting a rule outright (0-1-0): positive body meets head or negation")
for text in ("a :- a.", "a :- b, not a.", "a :- b."):
    r = rule(text)
    print(f"    {text:<18} deletable={cond_0_1_0(r)}  oracle={oracle([r], [])}")

print()
print("deleting one rule given another (1-1-0):")
r1 = rule("c :- b, not c.")
r2 = rule(":- b, not c.")
print("    keep  c :- b, not c.")
print("    drop  :- b, not c.   condition:", cond_1_1_0(r1, r2), " oracle:", oracle([r1, r2], [r1]))
print("    note: the simpler one-way subsumption test misses this pair:", s_implies(r1, r2))

print()
print("swapping one rule for another (0-1-1): same body, same head closure")
a, b = rule("a;b :- not a."), rule("b :- not a.")
print("    a;b :- not a.  ~  b :- not a. :", cond_0_1_1(a, b), "/", oracle([a], [b]))

print()
print("deleting a rule given two others (2-1-0), via a shared witness atom:")
r1, r2 = rule("a2 :- a1."), rule("a3 :- not a1.")
r3, r3x = rule("a3 :- not a2."), rule("a2 :- not a3.")
w = subsume_witness(r1, r2, r3)
print("    {a2 :- a1, a3 :- not a1} makes a3 :- not a2 redundant:", cond_2_1_0(r1, r2, r3))
print("    witness atom:", symbols.name(w))
print("    ... but not a2 :- not a3:", cond_2_1_0(r1, r2, r3x), "(oracle:", str(oracle([r1, r2, r3x], [r1, r2])) + ")")

print()
print("folding two rules into one (0-2-1):")
u1, u2, v = rule("a2 :- a1, not a3."), rule("a1;a2 :- not a3."), rule("a2 :- not a3.")
print("    {a2 :- a1, not a3,  a1;a2 :- not a3}  ~  {a2 :- not a3}:", cond_0_2_1(u1, u2, v))
