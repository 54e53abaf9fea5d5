"""Shared helpers: seeded random generators for rules, programs, and maps."""

from __future__ import annotations

import random

from strongeq import Program, Rule

FIELD_WEIGHTS = ((0, 45), (1, 20), (2, 20), (3, 15))  # absent, hd, ps, ng


def random_rule(rng: random.Random, atom_count: int, overlap_prob: float = 0.15) -> Rule:
    """A random rule, canonical by construction, with an optional extra
    overlapping atom so normalization paths get exercised too."""
    hd = ps = ng = 0
    fields, weights = zip(*FIELD_WEIGHTS)
    for bit in range(atom_count):
        where = rng.choices(fields, weights)[0]
        if where == 1:
            hd |= 1 << bit
        elif where == 2:
            ps |= 1 << bit
        elif where == 3:
            ng |= 1 << bit
    if rng.random() < overlap_prob:
        bit = 1 << rng.randrange(atom_count)
        which = rng.randrange(3)
        if which == 0:
            hd |= bit
        elif which == 1:
            ps |= bit
        else:
            ng |= bit
    return Rule(hd, ps, ng)


def random_program(
    rng: random.Random, atom_count: int, max_rules: int, overlap_prob: float = 0.15
) -> Program:
    n = rng.randint(0, max_rules)
    return Program(tuple(random_rule(rng, atom_count, overlap_prob) for _ in range(n)))


def random_total_map(rng: random.Random, atom_count: int) -> dict[int, int]:
    """A total, not necessarily injective, atom map."""
    return {i: rng.randrange(atom_count) for i in range(atom_count)}


def random_injection(rng: random.Random, atom_count: int, target_count: int) -> dict[int, int]:
    targets = rng.sample(range(target_count), atom_count)
    return dict(enumerate(targets))
