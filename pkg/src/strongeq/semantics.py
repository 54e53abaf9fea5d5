"""Stable-model semantics by brute force.

Interpretations are atom-set bitmasks.  Everything here is an oracle for
the rest of the package: candidate sets are enumerated outright and
minimality is re-checked against all subsets, so keep inputs desk-sized.
"""

from __future__ import annotations

from .errors import TooManyAtomsError
from .syntax import Program, Rule, subsets_of

ANSWER_SET_ATOM_LIMIT = 20


def reduct(p: Program, x: int) -> Program:
    """The not-elimination transform of p relative to x: drop every rule
    whose ng meets x, strip ng from the rest."""
    return Program(tuple(Rule(r.hd, r.ps, 0) for r in p.rules if not r.ng & x))


def satisfies(x: int, r: Rule) -> bool:
    """Classical satisfaction of a negation-free rule: the body must fail
    or the head must meet x."""
    if r.ng:
        raise ValueError("satisfies() is defined for negation-free rules only")
    return bool(r.ps & ~x) or bool(r.hd & x)


def _model_of(x: int, rules: tuple[Rule, ...]) -> bool:
    for r in rules:
        if not (r.ps & ~x or r.hd & x):
            return False
    return True


def is_answer_set(p: Program, x: int) -> bool:
    """True iff x satisfies every rule of reduct(p, x) and no proper subset
    of x does."""
    red = reduct(p, x).rules
    if not _model_of(x, red):
        return False
    for sub in subsets_of(x):
        if sub != x and _model_of(sub, red):
            return False
    return True


def answer_sets(p: Program, max_atoms: int = ANSWER_SET_ATOM_LIMIT) -> tuple[int, ...]:
    """All answer sets of p, ascending by cardinality then by atom ids.

    Candidates range over subsets of atoms(p); an answer set can never
    contain an atom the program does not mention.
    """
    lang = p.atoms
    n = lang.bit_count()
    if n > max_atoms:
        raise TooManyAtomsError("answer_sets", n, max_atoms)
    return tuple(x for x in subsets_of(lang) if is_answer_set(p, x))


def equivalent(p1: Program, p2: Program, max_atoms: int = ANSWER_SET_ATOM_LIMIT) -> bool:
    """Ordinary equivalence: the same answer sets."""
    n = (p1.atoms | p2.atoms).bit_count()
    if n > max_atoms:
        raise TooManyAtomsError("equivalent", n, max_atoms)
    return answer_sets(p1, max_atoms) == answer_sets(p2, max_atoms)
