"""Inference-rule engine: rule sets, readings, fixpoints, scale guards."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

import bdlogic.closure as closure_mod
from bdlogic import (
    RULE_SETS,
    Atom,
    Belief,
    ClosureScaleError,
    ClosureUniverse,
    Disbelief,
    InformationSet,
    Not,
    Rule,
    build_universe,
    close,
    consequences,
    models_of,
    parse_information_set,
    parse_sentence,
    readings_agree,
)

from conftest import information_sets

p, q = Atom("p"), Atom("q")


class TestUniverse:
    def test_sentence_inventory(self, cu1, cu2):
        assert len(cu1.sentences) == 8  # 4 classes x {B, D}
        assert len(cu2.sentences) == 32
        assert len(set(cu1.sentences)) == 8

    def test_representatives_cover_every_class(self, cu2):
        masks = {models_of(s.body, cu2.universe) for s in cu2.sentences}
        assert masks == set(range(cu2.universe.full_mask + 1))

    def test_sentence_lookup(self, cu1):
        s = cu1.sentence(True, cu1.universe.atom_mask("p"))
        assert s == Belief(p)
        assert cu1.sentence(False, 0).body.__class__.__name__ == "Bottom"

    def test_custom_atom_names(self):
        cu = build_universe(2, atoms=("a", "b"))
        assert cu.universe.atoms == ("a", "b")

    def test_scale_guard(self):
        with pytest.raises(ClosureScaleError):
            build_universe(3, atoms=("p", "q", "r"))

    def test_atom_count_mismatch(self):
        with pytest.raises(ValueError):
            build_universe(1, atoms=("p", "q"))


class TestRuleSets:
    def test_rules_are_strings(self):
        assert Rule.B == "B"
        assert {r.value for r in Rule} == {
            "B",
            "DBot",
            "WD",
            "GD",
            "D",
            "DPrime",
            "BPrime",
            "DtoB",
        }

    def test_named_systems(self):
        assert RULE_SETS["wbd"] == frozenset({Rule.B, Rule.DBot, Rule.WD})
        assert RULE_SETS["gbd"] == frozenset({Rule.B, Rule.DBot, Rule.GD})
        assert RULE_SETS["bd"] == frozenset({Rule.B, Rule.DBot, Rule.D})
        assert RULE_SETS["bn"] == frozenset(
            {Rule.B, Rule.DBot, Rule.WD, Rule.DtoB}
        )


class TestClose:
    def test_every_closure_contains_the_trivia(self, cu1):
        derived = close(RULE_SETS["wbd"], "membership", InformationSet(), cu1)
        rendered = {(type(s).__name__, models_of(s.body, cu1.universe)) for s in derived}
        assert ("Belief", cu1.universe.full_mask) in rendered  # B: true
        assert ("Disbelief", 0) in rendered  # D: false

    def test_seed_classes_always_derived(self, cu1):
        gamma = parse_information_set("B: p\nD: !p")
        derived = close(RULE_SETS["bd"], "derivability", gamma, cu1)
        assert Belief(p) in derived
        assert Disbelief(Not(p)) in derived

    def test_weakening_rule_reaches_stronger_formulas(self, cu2):
        gamma = parse_information_set("D: p | q")
        derived = close(RULE_SETS["wbd"], "membership", gamma, cu2)
        assert Disbelief(p) in derived
        assert Disbelief(q) in derived

    def test_coupled_rule_needs_the_derivability_reading(self, cu1):
        gamma = parse_information_set("B: !p")
        member = close(RULE_SETS["bd"], "membership", gamma, cu1)
        derive = close(RULE_SETS["bd"], "derivability", gamma, cu1)
        assert Disbelief(p) not in member
        assert Disbelief(p) in derive

    def test_readings_coincide_for_uncoupled_systems(self, cu1):
        for system in ("wbd", "gbd"):
            for gamma_text in ("B: p", "D: p\nD: !p", "B: p\nD: p"):
                gamma = parse_information_set(gamma_text)
                assert close(RULE_SETS[system], "membership", gamma, cu1) == close(
                    RULE_SETS[system], "derivability", gamma, cu1
                ), (system, gamma_text)

    def test_unknown_reading_rejected(self, cu1):
        with pytest.raises(ValueError):
            close(RULE_SETS["bd"], "syntactic", InformationSet(), cu1)

    @settings(max_examples=30)
    @given(gamma=information_sets(max_size=3, max_leaves=4))
    def test_closure_is_monotone_and_idempotent_per_reading(self, cu2, gamma):
        rules = RULE_SETS["wbd"]
        derived = close(rules, "membership", gamma, cu2)
        assert set(gammaclasses(gamma, cu2)) <= derived
        again = close(rules, "membership", InformationSet(frozenset(derived)), cu2)
        assert again == derived


def gammaclasses(gamma, cu):
    """Seed sentences normalized to class representatives."""
    out = set()
    for s in gamma:
        out.add(cu.sentence(isinstance(s, Belief), models_of(s.body, cu.universe)))
    return out


class TestAgainstDecisionProcedures:
    @pytest.mark.parametrize(
        "system,reading",
        [
            ("wbd", "membership"),
            ("wbd", "derivability"),
            ("gbd", "membership"),
            ("gbd", "derivability"),
            ("bd", "derivability"),
        ],
    )
    def test_validated_readings_match_decision_exhaustively_n1(
        self, system, reading, cu1
    ):
        sentences = list(cu1.sentences)
        for bits in range(256):
            gamma = InformationSet(
                frozenset(s for i, s in enumerate(sentences) if bits >> i & 1)
            )
            assert close(RULE_SETS[system], reading, gamma, cu1) == consequences(
                system, gamma, cu1.universe
            ), bits

    def test_augmented_variants_also_match_bd(self, cu1):
        rules = frozenset({Rule.B, Rule.DBot, Rule.DPrime})
        for text in ("B: !p", "B: p\nD: p", "D: p\nD: !p", "B: p & !p"):
            gamma = parse_information_set(text)
            assert close(rules, "derivability", gamma, cu1) == consequences(
                "bd", gamma, cu1.universe
            )

    def test_bn_needs_the_discharge_rule(self, cu1):
        gamma = parse_information_set("D: !p")
        base = close(RULE_SETS["bn"], "derivability", gamma, cu1)
        full = close(RULE_SETS["bn"] | {Rule.DPrime}, "derivability", gamma, cu1)
        want = consequences("bn", gamma, cu1.universe)
        assert full == want
        assert base <= want

    def test_readings_agree_reports_the_membership_gap(self, cu1):
        gamma = parse_information_set("B: !p")
        records = readings_agree(
            (RULE_SETS["bd"], "membership"), "bd", [gamma], cu1
        )
        assert records, "membership reading should under-derive here"
        missing = {r.sentence for r in records if not r.in_a and r.in_b}
        assert Disbelief(p) in missing
        assert all(not r.in_a for r in records)  # never over-derives
        assert "D: p" in records[0].render() or any(
            "D: p" in r.render() for r in records
        )

    def test_readings_agree_empty_on_agreement(self, cu1):
        gamma = parse_information_set("B: p")
        assert readings_agree(
            (RULE_SETS["wbd"], "membership"), "wbd", [gamma], cu1
        ) == []


class TestOverDerivation:
    def test_discharge_on_beliefs_overshoots_on_clashing_seeds(self, cu2):
        # adding the belief-discharge rule to the coupled system lets a
        # combined-inconsistent seed pair force new beliefs
        gamma = parse_information_set("B: q\nD: q")
        sound = close(RULE_SETS["bd"], "derivability", gamma, cu2)
        augmented = close(
            RULE_SETS["bd"] | {Rule.BPrime}, "derivability", gamma, cu2
        )
        extra = augmented - sound
        assert extra, "the augmented system should over-derive here"
        assert any(isinstance(s, Belief) for s in extra)
        assert Belief(p) in augmented and Belief(p) not in sound

    def test_discharge_is_conservative_on_consistent_seeds(self, cu2):
        for text in ("B: p\nD: q", "B: p & q", "D: p\nD: q"):
            gamma = parse_information_set(text)
            assert close(
                RULE_SETS["bd"] | {Rule.BPrime}, "derivability", gamma, cu2
            ) == close(RULE_SETS["bd"], "derivability", gamma, cu2), text


class TestEngineLimits:
    def test_family_guard_trips_when_too_small(self, cu2, monkeypatch):
        monkeypatch.setattr(closure_mod, "_MAX_FAMILY", 2)
        # a wide belief conjunction gives the discharge rule many distinct
        # hypothetical extensions, overflowing the tiny registry
        gamma = parse_information_set("B: p | q")
        with pytest.raises(ClosureScaleError):
            close(
                frozenset({Rule.B, Rule.DBot, Rule.DPrime}),
                "derivability",
                gamma,
                cu2,
            )

    def test_membership_reading_never_spawns_hypothetical_sets(self, cu2):
        # membership closures stay single-state even with discharge rules
        gamma = parse_information_set("B: q\nD: q")
        engine = closure_mod._Engine(
            frozenset({Rule.B, Rule.DBot, Rule.D, Rule.DPrime, Rule.BPrime}),
            "membership",
            cu2,
        )
        u = cu2.universe
        engine.register(
            frozenset(models_of(b, u) for b in gamma.belief_bodies),
            frozenset(models_of(b, u) for b in gamma.disbelief_bodies),
        )
        engine.run()
        assert len(engine.family) == 1

    def test_heavy_discharge_workload_stays_bounded(self, cu2):
        # the canonicalized child registry holds antichains only, so even a
        # seed with several interlocking disbeliefs terminates quickly
        gamma = parse_information_set("B: p | q\nD: p & q\nD: p & !q\nD: !p & q")
        augmented = close(
            RULE_SETS["bd"] | {Rule.BPrime}, "derivability", gamma, cu2
        )
        # the seed pair is combined-consistent, so discharge adds nothing
        assert augmented == close(RULE_SETS["bd"], "derivability", gamma, cu2)
