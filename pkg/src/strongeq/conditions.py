"""Exact syntactic conditions for small-shape strong-equivalence questions.

Each cond_k_m_n decides, by set algebra alone, whether k shared rules plus
m rules are strongly equivalent to the k shared rules plus n rules.  The
discovery harness re-verifies every one of these predicates against the
semantic oracle by exhaustive enumeration.
"""

from __future__ import annotations

from .errors import NotCanonicalError
from .syntax import Rule, is_canonical


def cond_0_1_0(r: Rule) -> bool:
    """Whether a single rule can always be deleted: the positive body
    must share an atom with the head or the negated body."""
    return bool((r.hd | r.ng) & r.ps)


def cond_1_1_0(r1: Rule, r2: Rule) -> bool:
    """Whether {r1, r2} is strongly equivalent to {r1}, i.e. r2 may be
    deleted given r1.

    Holds iff r2 is deletable on its own, or r1's body is contained in
    r2's (positive and negated parts separately) and r1's head is covered
    by r2's head plus negated body.
    """
    if cond_0_1_0(r2):
        return True
    return (
        r1.ps & ~r2.ps == 0
        and r1.ng & ~r2.ng == 0
        and r1.hd & ~(r2.hd | r2.ng) == 0
    )


def s_implies(r1: Rule, r2: Rule) -> bool:
    """Subsumption test: some A within ng(r2) has hd(r1) within hd(r2)+A,
    ng(r1) within ng(r2)-A, and ps(r1) within ps(r2).

    No subset search is needed: A = ng(r2) - ng(r1) is the weakest viable
    choice, giving the closed form below.  A strict special case of
    cond_1_1_0.
    """
    return (
        r1.ps & ~r2.ps == 0
        and r1.ng & ~r2.ng == 0
        and r1.hd & ~(r2.hd | (r2.ng & ~r1.ng)) == 0
    )


def cond_0_1_1(r1: Rule, r2: Rule) -> bool:
    """Whether two rules are interchangeable: both individually deletable,
    or same bodies and the same head-plus-negated-body closure."""
    if cond_0_1_0(r1) and cond_0_1_0(r2):
        return True
    return (
        r1.ps == r2.ps
        and r1.ng == r2.ng
        and r1.hd | r1.ng == r2.hd | r2.ng
    )


def _require_canonical(*rules: Rule) -> None:
    for r in rules:
        if not is_canonical(r):
            raise NotCanonicalError(
                "this condition is stated for canonical rules only; "
                "normalize first (see simplify.normalize_rule)"
            )


def subsume_witness(r1: Rule, r2: Rule, r3: Rule) -> int | None:
    """Least witness atom id for the joint-subsumption clause of
    cond_2_1_0, or None if no atom qualifies.

    An atom p qualifies when it lies in (ps1|ps2) & (hd1|hd2|ng1|ng2),
    the rest of r1 and of r2 each fit inside r3 field-wise (heads may
    land in hd3|ng3), and the two cross checks pass: if p is in ps1 & ng2
    then hd1 and hd3 must be disjoint, and symmetrically for ps2 & ng1.
    """
    hd3ng3 = r3.hd | r3.ng
    candidates = (r1.ps | r2.ps) & (r1.hd | r2.hd | r1.ng | r2.ng)
    while candidates:
        p = candidates & -candidates
        candidates ^= p
        keep = ~p
        fits = True
        for ri in (r1, r2):
            if (
                ri.hd & keep & ~hd3ng3
                or ri.ps & keep & ~r3.ps
                or ri.ng & keep & ~r3.ng
            ):
                fits = False
                break
        if fits and p & r1.ps & r2.ng and r1.hd & r3.hd:
            fits = False
        if fits and p & r2.ps & r1.ng and r2.hd & r3.hd:
            fits = False
        if fits:
            return p.bit_length() - 1
    return None


def cond_2_1_0(r1: Rule, r2: Rule, r3: Rule) -> bool:
    """Whether {r1, r2, r3} is strongly equivalent to {r1, r2}, for
    canonical rules: r3 is deletable given either rule alone, or the two
    rules jointly subsume it through a witness atom."""
    _require_canonical(r1, r2, r3)
    if cond_1_1_0(r1, r3) or cond_1_1_0(r2, r3):
        return True
    return subsume_witness(r1, r2, r3) is not None


def cond_0_2_1(r1: Rule, r2: Rule, r3: Rule) -> bool:
    """Whether {r1, r2} is strongly equivalent to {r3}, for canonical
    rules: r3 is redundant given the pair, and each of the pair is
    redundant given r3."""
    return cond_2_1_0(r1, r2, r3) and cond_1_1_0(r3, r1) and cond_1_1_0(r3, r2)


def cond_0_2_2(r1: Rule, r2: Rule, r3: Rule, r4: Rule) -> bool:
    """Whether {r1, r2} is strongly equivalent to {r3, r4}, for canonical
    rules: each side's rules are redundant given the other side."""
    return (
        cond_2_1_0(r1, r2, r3)
        and cond_2_1_0(r1, r2, r4)
        and cond_2_1_0(r3, r4, r1)
        and cond_2_1_0(r3, r4, r2)
    )


def exhaustive_atom_bound(k: int, m: int, n: int, w: int) -> int:
    """Atom count at which exhaustive checking establishes the sufficiency
    direction of a prenex exists-forall condition with w leading witness
    variables for the k-m-n question (m >= n assumed)."""
    if m < n:
        raise ValueError("exhaustive_atom_bound requires m >= n")
    if n > 0:
        return w + 2 * (k + m)
    bound = w + 2 * k
    return bound if bound > 0 else 1
