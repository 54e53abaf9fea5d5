#!/usr/bin/env python3
"""Parsing programs and computing answer sets by brute force."""

from strongeq import Symbols, answer_sets, format_rule, parse_program, reduct

symbols = Symbols()
program = parse_program(
    """
    % a disjunctive fact and a default rule
    a ; b.
    c :- not a.
    """,
    symbols,
)

print("program:")
for rule in program:
    print("   ", format_rule(rule, symbols))

print()
print("candidate-by-candidate, the stable sets are fixed points of the")
print("negation-elimination transform.  Two examples of the transform:")
for names in (("a",), ("b",)):
    x = symbols.mask(*names)
    stripped = reduct(program, x)
    shown = "  ".join(format_rule(r, symbols) for r in stripped)
    print(f"    relative to {{{', '.join(names)}}}: {shown}")

print()
print("answer sets:")
for x in answer_sets(program):
    print("    {" + ", ".join(sorted(symbols.names(x))) + "}")

print()
print("a program with a contradictory constraint has none:")
doomed = parse_program("p. :- p.", symbols)
print("    answer sets of {p., :- p.}:", answer_sets(doomed))
