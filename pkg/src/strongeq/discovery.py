"""Exhaustive rule-tuple enumeration and condition-vs-oracle verification.

The harness enumerates every tuple of rules over a small language, labels
each with the semantic oracle, and measures agreement with a candidate
syntactic condition.  Per-rule two-world evaluations are precomputed as
bitmasks over all 3^a valuation pairs, so the oracle verdict for a tuple
is a handful of mask ANDs; the condition is invoked as-is, keeping the
two routes independent.

Work can be split across processes by chunking the outermost rule index
into contiguous ranges; partial reports merge in range order, so results
are identical for any job count.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product
from multiprocessing import Pool
from typing import Callable, Iterator, NamedTuple

from .errors import TooManyAtomsError
from .oracle import _delta
from .syntax import Rule, Symbols, format_rule, iso_canonical_form, subsets_of

ENUM_ATOM_LIMIT = 7

MISMATCH_CAP = 1000

Condition = Callable[..., bool]


@dataclass(frozen=True, slots=True)
class TupleShape:
    """Counts of shared / left-side / right-side rules in a k-m-n question."""

    k: int
    m: int
    n: int

    def __post_init__(self) -> None:
        if min(self.k, self.m, self.n) < 0 or self.k + self.m + self.n < 1:
            raise ValueError("shape needs nonnegative k, m, n with k+m+n >= 1")

    @property
    def length(self) -> int:
        return self.k + self.m + self.n


class Mismatch(NamedTuple):
    rules: tuple[Rule, ...]
    oracle: bool
    condition: bool


@dataclass(frozen=True)
class DiscoveryReport:
    """Outcome of one exhaustive condition-vs-oracle run.

    The three counters and mismatch_count are always exact; the mismatch
    list itself is capped at MISMATCH_CAP entries.
    """

    shape: TupleShape
    atom_count: int
    total_tuples: int
    se_positive_count: int
    condition_positive_count: int
    mismatch_count: int
    mismatches: tuple[Mismatch, ...]
    elapsed_ms: float

    def to_json(self, symbols: Symbols | None = None) -> dict:
        if symbols is None:
            symbols = language_symbols(self.atom_count)
        return {
            "shape": [self.shape.k, self.shape.m, self.shape.n],
            "atoms": self.atom_count,
            "total": self.total_tuples,
            "se_positive": self.se_positive_count,
            "cond_positive": self.condition_positive_count,
            "mismatches": [
                {
                    "tuple": [format_rule(r, symbols) for r in mm.rules],
                    "oracle": mm.oracle,
                    "cond": mm.condition,
                }
                for mm in self.mismatches
            ],
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def language_symbols(atom_count: int) -> Symbols:
    """Fresh frozen symbol table a1..aN for an enumeration language."""
    symbols = Symbols()
    for i in range(atom_count):
        symbols.intern(f"a{i + 1}")
    symbols.freeze()
    return symbols


def _check_atom_count(atom_count: int, max_atoms: int) -> None:
    if atom_count > max_atoms:
        raise TooManyAtomsError("rule enumeration", atom_count, max_atoms)


def enumerate_rules(
    atom_count: int, canonical_only: bool = False, max_atoms: int = ENUM_ATOM_LIMIT
) -> Iterator[Rule]:
    """Every rule over the first atom_count atoms except the all-empty one,
    ascending by (hd, ps, ng) read as one bitmask; optionally canonical
    rules only."""
    _check_atom_count(atom_count, max_atoms)
    space = 1 << atom_count
    for hd in range(space):
        for ps in range(space):
            overlap = hd & ps
            for ng in range(space):
                if not (hd | ps | ng):
                    continue
                if canonical_only and (overlap or ng & (hd | ps)):
                    continue
                yield Rule(hd, ps, ng)


def enumerate_tuples(
    shape: TupleShape,
    atom_count: int,
    canonical_only: bool = False,
    modulo_iso: bool = False,
    max_atoms: int = ENUM_ATOM_LIMIT,
) -> Iterator[tuple[Rule, ...]]:
    """Ordered tuples of length k+m+n of enumerated rules; with modulo_iso,
    only tuples that are their own isomorphism canonical form, one per
    renaming class."""
    rules = tuple(enumerate_rules(atom_count, canonical_only, max_atoms))
    for tup in product(rules, repeat=shape.length):
        if modulo_iso and iso_canonical_form(tup) != tup:
            continue
        yield tup


def ht_pair_masks(atom_count: int) -> tuple[tuple[int, int], ...]:
    """All (x, y) valuation pairs over the enumeration language, in the
    oracle's deterministic order."""
    lang = (1 << atom_count) - 1
    return tuple((x, y) for y in subsets_of(lang) for x in subsets_of(y))


def rule_mask(r: Rule, pairs: tuple[tuple[int, int], ...]) -> int:
    """Bitmask with bit i set iff the rule's translation holds on pairs[i].
    A program's two-world models are the AND of its rules' masks, and two
    programs are strongly equivalent iff those ANDs are equal."""
    m = 0
    for i, (x, y) in enumerate(pairs):
        if _delta(r, x, y):
            m |= 1 << i
    return m


def _split_ranges(size: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, parts)
    bounds = [size * i // parts for i in range(parts + 1)]
    return [(a, b) for a, b in zip(bounds, bounds[1:]) if a < b]


def _scan_range(
    shape: tuple[int, int, int],
    rules: list[Rule],
    masks: list[int],
    condition: Condition,
    full: int,
    start: int,
    stop: int,
    modulo_iso: bool,
    cap: int,
) -> tuple[int, int, int, int, list[Mismatch]]:
    """Scan all tuples whose outermost index lies in [start, stop)."""
    k, m, n = shape
    tlen = k + m + n
    last = tlen - 1
    last_in_a = last < k + m
    last_in_b = last < k or last >= k + m
    count = len(rules)
    total = se = cond_pos = mismatch_total = 0
    mismatches: list[Mismatch] = []

    def walk(depth: int, ma: int, mb: int, prefix: tuple[Rule, ...]) -> None:
        nonlocal total, se, cond_pos, mismatch_total
        rng = range(start, stop) if depth == 0 else range(count)
        if depth == last:
            rule_list = rules
            mask_list = masks
            cond = condition
            t_ = s_ = c_ = x_ = 0
            for i in rng:
                rule = rule_list[i]
                if modulo_iso:
                    tup = prefix + (rule,)
                    if iso_canonical_form(tup) != tup:
                        continue
                mi = mask_list[i]
                a = ma & mi if last_in_a else ma
                b = mb & mi if last_in_b else mb
                o = a == b
                c = True if cond(*prefix, rule) else False
                t_ += 1
                if o:
                    s_ += 1
                if c:
                    c_ += 1
                if o != c:
                    x_ += 1
                    if len(mismatches) < cap:
                        mismatches.append(Mismatch(prefix + (rule,), o, c))
            total += t_
            se += s_
            cond_pos += c_
            mismatch_total += x_
            return
        in_a = depth < k + m
        in_b = depth < k or depth >= k + m
        for i in rng:
            mi = masks[i]
            walk(
                depth + 1,
                ma & mi if in_a else ma,
                mb & mi if in_b else mb,
                prefix + (rules[i],),
            )

    walk(0, full, full, ())
    return total, se, cond_pos, mismatch_total, mismatches


def test_conjecture(
    shape: TupleShape,
    atom_count: int,
    condition: Condition,
    canonical_only: bool = False,
    modulo_iso: bool = False,
    job_count: int = 1,
    max_atoms: int = ENUM_ATOM_LIMIT,
) -> DiscoveryReport:
    """Exhaustively compare `condition` with the oracle on every tuple of
    the given shape; deterministic for any job_count.

    With job_count > 1 the condition must be picklable (a module-level
    function); each worker owns a contiguous range of the outermost index.
    """
    started = time.perf_counter()
    rules = list(enumerate_rules(atom_count, canonical_only, max_atoms))
    pairs = ht_pair_masks(atom_count)
    masks = [rule_mask(r, pairs) for r in rules]
    full = (1 << len(pairs)) - 1
    shape_tuple = (shape.k, shape.m, shape.n)
    ranges = _split_ranges(len(rules), job_count)
    args = [
        (shape_tuple, rules, masks, condition, full, a, b, modulo_iso, MISMATCH_CAP)
        for a, b in ranges
    ]
    if job_count > 1 and len(args) > 1:
        with Pool(processes=len(args)) as pool:
            parts = pool.starmap(_scan_range, args)
    else:
        parts = [_scan_range(*a) for a in args]

    total = se = cond_pos = mismatch_total = 0
    mismatches: list[Mismatch] = []
    for p_total, p_se, p_cond, p_mm_total, p_mms in parts:
        total += p_total
        se += p_se
        cond_pos += p_cond
        mismatch_total += p_mm_total
        if len(mismatches) < MISMATCH_CAP:
            mismatches.extend(p_mms[: MISMATCH_CAP - len(mismatches)])
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    return DiscoveryReport(
        shape=shape,
        atom_count=atom_count,
        total_tuples=total,
        se_positive_count=se,
        condition_positive_count=cond_pos,
        mismatch_count=mismatch_total,
        mismatches=tuple(mismatches),
        elapsed_ms=elapsed_ms,
    )


test_conjecture.__test__ = False  # keep pytest from collecting the API name


def discover_positive_tuples(
    shape: TupleShape,
    atom_count: int,
    canonical_only: bool = False,
    modulo_iso: bool = False,
    max_atoms: int = ENUM_ATOM_LIMIT,
) -> Iterator[tuple[Rule, ...]]:
    """Yield exactly the tuples whose oracle verdict is positive: the raw
    material for conjecturing new conditions."""
    rules = list(enumerate_rules(atom_count, canonical_only, max_atoms))
    pairs = ht_pair_masks(atom_count)
    masks = {r: rule_mask(r, pairs) for r in rules}
    full = (1 << len(pairs)) - 1
    k, m, _n = shape.k, shape.m, shape.n
    for tup in enumerate_tuples(shape, atom_count, canonical_only, modulo_iso, max_atoms):
        ma = mb = full
        for depth, rule in enumerate(tup):
            if depth < k + m:
                ma &= masks[rule]
            if depth < k or depth >= k + m:
                mb &= masks[rule]
        if ma == mb:
            yield tup
