"""Strong-equivalence oracle over two-world (here-and-there) valuations.

A candidate countermodel is a pair (x, y) of atom sets with x subset y:
x plays the unprimed world, y the primed one.  Each rule contributes two
implications; two programs are strongly equivalent iff their rule
conjunctions agree on every pair over the union language.  Assignments
with x not within y never separate programs, so only the 3^|L| ordered
pairs are enumerated, and the first disagreeing pair is returned as a
directly meaningful countermodel.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooManyAtomsError
from .syntax import Program, Rule, Symbols, subsets_of

SE_ATOM_LIMIT = 24


@dataclass(frozen=True, slots=True)
class HTPair:
    """Two-world valuation (x, y) with x subset y, both atom-set masks."""

    x: int
    y: int

    def __post_init__(self) -> None:
        if self.x & ~self.y:
            raise ValueError("HTPair requires x to be a subset of y")


@dataclass(frozen=True, slots=True)
class SEVerdict:
    equivalent: bool
    countermodel: HTPair | None = None

    def __post_init__(self) -> None:
        if self.equivalent == (self.countermodel is not None):
            raise ValueError("countermodel must be present exactly when not equivalent")


def _delta(r: Rule, x: int, y: int) -> bool:
    # Two implications per rule.  Unprimed: positive body in x and negated
    # body missing from y force the head to meet x.  Primed: same with y on
    # both sides.  Empty body makes an antecedent true, empty head makes a
    # consequent false; the mask arithmetic gives both for free.
    return bool(
        (r.ps & ~x or r.ng & y or r.hd & x) and (r.ps & ~y or r.ng & y or r.hd & y)
    )


def delta_holds(r: Rule, pair: HTPair) -> bool:
    """Whether the rule's two-implication translation holds on the pair."""
    return _delta(r, pair.x, pair.y)


def ht_pairs(lang: int):
    """All HTPairs over a language mask, y ascending by cardinality then
    lexicographically, x likewise within each y."""
    for y in subsets_of(lang):
        for x in subsets_of(y):
            yield HTPair(x, y)


def holds_for_program(p: Program, pair: HTPair) -> bool:
    return all(_delta(r, pair.x, pair.y) for r in p.rules)


def strongly_equivalent(
    p1: Program, p2: Program, max_atoms: int = SE_ATOM_LIMIT
) -> SEVerdict:
    """Decide p1 ~se p2 over the union of their atoms.

    Returns the first separating pair in the deterministic enumeration
    order when the programs are not strongly equivalent.
    """
    lang = p1.atoms | p2.atoms
    n = lang.bit_count()
    if n > max_atoms:
        raise TooManyAtomsError("strongly_equivalent", n, max_atoms)
    r1, r2 = p1.rules, p2.rules
    for y in subsets_of(lang):
        for x in subsets_of(y):
            v1 = all(_delta(r, x, y) for r in r1)
            v2 = all(_delta(r, x, y) for r in r2)
            if v1 != v2:
                return SEVerdict(False, HTPair(x, y))
    return SEVerdict(True)


def countermodel_json(pair: HTPair, symbols: Symbols) -> dict:
    """Serializable form of a countermodel: atom names in id order."""
    return {"x": list(symbols.names(pair.x)), "y": list(symbols.names(pair.y))}
