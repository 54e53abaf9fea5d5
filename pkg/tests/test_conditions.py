"""Syntactic condition predicates against the semantic oracle."""

import random
from itertools import permutations

import pytest

from strongeq import (
    NotCanonicalError,
    Program,
    Rule,
    Symbols,
    cond_0_1_0,
    cond_0_1_1,
    cond_0_2_1,
    cond_0_2_2,
    cond_1_1_0,
    cond_2_1_0,
    exhaustive_atom_bound,
    parse_rule,
    rename_rule,
    s_implies,
    strongly_equivalent,
    subsume_witness,
)
from strongeq.discovery import enumerate_rules
from strongeq.syntax import subsets_of


def rules(text: str, symbols: Symbols | None = None) -> list[Rule]:
    t = symbols if symbols is not None else Symbols()
    return [parse_rule(part.strip() + ".", t) for part in text.split(".") if part.strip()]


def oracle(left: list[Rule], right: list[Rule]) -> bool:
    return strongly_equivalent(Program(tuple(left)), Program(tuple(right))).equivalent


class TestAlwaysDeletable:
    def test_self_supporting_rule(self):
        (r,) = rules("a :- a.")
        assert cond_0_1_0(r)

    def test_grounder_self_loop_artifact(self):
        # The shape produced by instantiating a recursive reachability rule
        # on a self-arc: reached :- hc, reached.
        (r,) = rules("reached :- hc, reached.")
        assert cond_0_1_0(r)

    def test_plain_implication_kept(self):
        (r,) = rules("a :- b.")
        assert not cond_0_1_0(r)


class TestPairDeletable:
    def test_constraint_subsumes_self_blocking_rule(self):
        r1, r2 = rules("c :- b, not c. :- b, not c.")
        assert cond_1_1_0(r1, r2)
        assert oracle([r1, r2], [r1])

    def test_constraint_subsumes_wider_rule(self):
        r1, r2 = rules(":- not a. b :- not a.")
        assert cond_1_1_0(r1, r2)
        assert oracle([r1, r2], [r1])

    def test_unrelated_bodies(self):
        r1, r2 = rules("a :- b. a :- c.")
        assert not cond_1_1_0(r1, r2)


class TestSImplies:
    def test_special_case_misses_self_blocking_pair(self):
        r1, r2 = rules("c :- b, not c. :- b, not c.")
        assert not s_implies(r1, r2)
        assert cond_1_1_0(r1, r2)

    def test_reflexive(self):
        (r,) = rules("a; b :- c, not d.")
        assert s_implies(r, r)

    def test_fact_subsumes_wider_disjunction(self):
        r1, r2 = rules("a. a;b :- c.")
        assert s_implies(r1, r2)

    def test_positive_body_containment_required(self):
        r1, r2 = rules("a :- d. a;b :- c.")
        assert not s_implies(r1, r2)

    def test_closed_form_matches_subset_search(self):
        def brute(r1: Rule, r2: Rule) -> bool:
            for a in subsets_of(r2.ng):
                if (
                    r1.hd & ~(r2.hd | a) == 0
                    and r1.ng & ~(r2.ng & ~a) == 0
                    and r1.ps & ~r2.ps == 0
                ):
                    return True
            return False

        rng = random.Random(19)
        for _ in range(2000):
            r1 = Rule(rng.randrange(16), rng.randrange(16), rng.randrange(16))
            r2 = Rule(rng.randrange(16), rng.randrange(16), rng.randrange(16))
            assert s_implies(r1, r2) == brute(r1, r2)

    def test_implies_pair_deletability_exhaustively(self):
        for r1 in enumerate_rules(2):
            for r2 in enumerate_rules(2):
                if s_implies(r1, r2):
                    assert cond_1_1_0(r1, r2)


class TestInterchangeable:
    def test_head_atom_absorbed_by_negation(self):
        r1, r2 = rules("a;b :- not a. b :- not a.")
        assert cond_0_1_1(r1, r2)
        assert oracle([r1], [r2])

    def test_contradictory_head_becomes_constraint(self):
        r1, r2 = rules("a :- c, not a. :- c, not a.")
        assert cond_0_1_1(r1, r2)

    def test_different_bodies(self):
        r1, r2 = rules("a :- b. a :- c.")
        assert not cond_0_1_1(r1, r2)

    def test_matches_mutual_deletability(self):
        for r1 in enumerate_rules(2):
            for r2 in enumerate_rules(2):
                both_ways = cond_1_1_0(r1, r2) and cond_1_1_0(r2, r1)
                assert cond_0_1_1(r1, r2) == both_ways


class TestTripleDeletable:
    def test_positive_example(self):
        r1, r2, r3 = rules("a2 :- a1. a3 :- not a1. a3 :- not a2.")
        assert cond_2_1_0(r1, r2, r3)

    def test_reversed_rule_not_deletable(self):
        r1, r2, r3 = rules("a2 :- a1. a3 :- not a1. a2 :- not a3.")
        assert not cond_2_1_0(r1, r2, r3)

    def test_disjunctive_context(self):
        r1, r2, r3 = rules("a1;a2;a3. a2;a3 :- a1. a3 :- not a2.")
        assert cond_2_1_0(r1, r2, r3)

    def test_disjunctive_fact_not_subsumed_by_chain(self):
        # Classically a1 -> a2 plus not-a1 -> a3 entails a2 or a3, but the
        # disjunctive fact is still not redundant: the witness-atom clause
        # fails its head-disjointness check, and the oracle concurs (the
        # context a1 :- a2 separates the programs).
        r1, r2, r3 = rules("a2 :- a1. a3 :- not a1. a2;a3.")
        assert not cond_2_1_0(r1, r2, r3)
        assert not oracle([r1, r2, r3], [r1, r2])

    def test_witness_is_least_atom(self):
        t = Symbols()
        r1, r2, r3 = rules("a2 :- a1. a3 :- not a1. a3 :- not a2.", t)
        assert subsume_witness(r1, r2, r3) == t.intern("a1")

    def test_requires_canonical_rules(self):
        r1, r2 = rules("a :- b. b :- c.")
        bad = Rule(0b1, 0b1, 0)
        with pytest.raises(NotCanonicalError):
            cond_2_1_0(r1, r2, bad)

    def test_agrees_with_oracle_on_canonical_triples(self):
        pool = list(enumerate_rules(2, canonical_only=True))
        for r1 in pool:
            for r2 in pool:
                for r3 in pool:
                    expected = oracle([r1, r2, r3], [r1, r2])
                    assert cond_2_1_0(r1, r2, r3) == expected


class TestPairToSingle:
    def test_fold_into_unconditional_rule(self):
        r1, r2, r3 = rules("a2 :- a1, not a3. a1;a2 :- not a3. a2 :- not a3.")
        assert cond_0_2_1(r1, r2, r3)
        assert oracle([r1, r2], [r3])

    def test_fold_constraints(self):
        r1, r2, r3 = rules(":- a2, a3. :- a3, not a2. :- a3.")
        assert cond_0_2_1(r1, r2, r3)
        assert oracle([r1, r2], [r3])

    def test_headed_variant_fails(self):
        r1, r2, r3 = rules("a1 :- a2, a3. a1 :- a3, not a2. a1 :- a3.")
        assert not cond_0_2_1(r1, r2, r3)
        assert not oracle([r1, r2], [r3])


class TestPairToPair:
    def test_identity(self):
        r1, r2 = rules("a :- b. c :- not d.")
        assert cond_0_2_2(r1, r2, r1, r2)

    def test_pair_folds_to_duplicated_single(self):
        r1, r2, r3 = rules("a2 :- a1, not a3. a1;a2 :- not a3. a2 :- not a3.")
        assert cond_0_2_2(r1, r2, r3, r3)
        assert oracle([r1, r2], [r3, r3])

    def test_distinct_bodies_rejected(self):
        r1, r2 = rules("a :- b. a :- c.")
        assert not cond_0_2_2(r1, r1, r2, r2)
        assert not oracle([r1], [r2])


class TestRenameInvariance:
    def test_conditions_stable_under_injections(self):
        rng = random.Random(31)
        pool = list(enumerate_rules(3, canonical_only=True))
        for _ in range(300):
            r1, r2, r3 = (rng.choice(pool) for _ in range(3))
            perm = dict(enumerate(rng.sample(range(6), 3)))
            m1, m2, m3 = (rename_rule(r, perm) for r in (r1, r2, r3))
            assert cond_0_1_0(r1) == cond_0_1_0(m1)
            assert cond_1_1_0(r1, r2) == cond_1_1_0(m1, m2)
            assert cond_0_1_1(r1, r2) == cond_0_1_1(m1, m2)
            assert s_implies(r1, r2) == s_implies(m1, m2)
            assert cond_2_1_0(r1, r2, r3) == cond_2_1_0(m1, m2, m3)


class TestExhaustiveAtomBound:
    @pytest.mark.parametrize(
        "shape,expected",
        [((0, 1, 0), 1), ((1, 1, 0), 3), ((2, 1, 0), 5)],
    )
    def test_single_witness_bounds(self, shape, expected):
        k, m, n = shape
        assert exhaustive_atom_bound(k, m, n, w=1) == expected

    def test_replacement_shapes_use_both_sides(self):
        assert exhaustive_atom_bound(0, 1, 1, w=0) == 2
        assert exhaustive_atom_bound(0, 2, 1, w=1) == 5

    def test_zero_bound_floors_at_one(self):
        assert exhaustive_atom_bound(0, 1, 0, w=0) == 1

    def test_requires_m_at_least_n(self):
        with pytest.raises(ValueError):
            exhaustive_atom_bound(0, 1, 2, w=1)
