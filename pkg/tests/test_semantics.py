"""Model types, satisfaction, and the brute-force enumeration oracle."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from bdlogic import (
    And,
    Atom,
    AtomUniverse,
    Belief,
    Bottom,
    CountermodelConstructionError,
    Disbelief,
    InformationSet,
    ModelBD,
    ModelGBD,
    ModelWBD,
    Not,
    Or,
    ScaleLimitError,
    Top,
    brute_force_consequences,
    brute_force_entails,
    construct_countermodel,
    count_models,
    decide,
    enumerate_models,
    formula_for_class,
    holds_all,
    model_to_dict,
    models_of,
    parse_information_set,
    parse_sentence,
    render_model,
    satisfies,
)

from conftest import information_sets, sentences

p, q = Atom("p"), Atom("q")
LOGICS = ("wbd", "gbd", "bd")


class TestModelValidation:
    def test_family_must_be_nonempty(self, u1):
        with pytest.raises(ValueError):
            ModelWBD(0, frozenset(), u1)
        with pytest.raises(ValueError):
            ModelBD(0b11, frozenset(), u1)

    def test_bd_family_members_must_sit_inside_m(self, u1):
        with pytest.raises(ValueError):
            ModelBD(0b01, frozenset({0b10}), u1)
        ModelBD(0b11, frozenset({0b10}), u1)  # fine

    def test_masks_must_fit_the_universe(self, u1):
        with pytest.raises(ValueError):
            ModelWBD(0b100, frozenset({0}), u1)
        with pytest.raises(ValueError):
            ModelGBD(0, 0b100, u1)

    def test_empty_family_member_is_legal(self, u1):
        # the ability to disbelieve everything matters for BD consistency
        m = ModelBD(0, frozenset({0}), u1)
        assert satisfies(m, Disbelief(Top()))
        assert satisfies(m, Belief(Bottom()))


class TestSatisfaction:
    def test_belief_is_global_truth_on_m(self, u2):
        m = ModelWBD(models_of(p, u2), frozenset({0b1}), u2)
        assert satisfies(m, Belief(p))
        assert satisfies(m, Belief(Or(p, q)))
        assert not satisfies(m, Belief(q))

    def test_disbelief_needs_one_refuting_source(self, u2):
        family = frozenset({models_of(Not(q), u2)})
        m = ModelWBD(u2.full_mask, family, u2)
        assert satisfies(m, Disbelief(q))
        assert not satisfies(m, Disbelief(p))

    def test_gbd_uses_its_single_source(self, u2):
        m = ModelGBD(u2.full_mask, models_of(Not(q), u2), u2)
        assert satisfies(m, Disbelief(q))
        assert satisfies(m, Disbelief(And(q, Top())))  # class-based, not syntactic
        assert not satisfies(m, Disbelief(p))

    def test_holds_all(self, u2):
        gamma = parse_information_set("B: p\nD: q")
        m = ModelWBD(models_of(p, u2), frozenset({models_of(Not(q), u2)}), u2)
        assert holds_all(m, gamma)
        assert not holds_all(m, gamma.union([Belief(q)]))


class TestEnumeration:
    def test_unconstrained_counts_match_closed_forms(self, u1):
        # one atom: 4 world sets; families are nonempty subsets of them
        assert count_models("gbd", InformationSet(), u1) == 4 * 4
        assert count_models("wbd", InformationSet(), u1) == 4 * (2**4 - 1)
        # bd: for each m, nonempty families over subsets of m
        assert count_models("bd", InformationSet(), u1) == sum(
            2 ** (2 ** bin(m).count("1")) - 1 for m in range(4)
        )

    @pytest.mark.parametrize("logic", LOGICS)
    def test_enumerate_agrees_with_count(self, logic, u1):
        gamma = parse_information_set("B: p\nD: !p")
        listed = list(enumerate_models(logic, gamma, u1))
        assert len(listed) == count_models(logic, gamma, u1)
        assert all(holds_all(m, gamma) for m in listed)

    def test_scale_guards(self):
        u3 = AtomUniverse(("p", "q", "r"))
        u4 = AtomUniverse(("a", "b", "c", "d"))
        gamma = InformationSet()
        alpha = parse_sentence("B: p")
        with pytest.raises(ScaleLimitError):
            brute_force_entails("wbd", gamma, alpha, u3)
        with pytest.raises(ScaleLimitError):
            brute_force_entails("bd", gamma, alpha, u3)
        with pytest.raises(ScaleLimitError):
            brute_force_entails("gbd", gamma, alpha, u4)
        # gbd is cheap enough for three atoms
        assert brute_force_entails("gbd", gamma, Belief(Top()), u3).entailed


class TestOracleVerdicts:
    def test_disbelief_aggregation_separates_the_logics(self, u2):
        gamma = parse_information_set("D: p\nD: q")
        alpha = parse_sentence("D: p | q")
        assert not brute_force_entails("wbd", gamma, alpha, u2).entailed
        assert brute_force_entails("gbd", gamma, alpha, u2).entailed
        assert not brute_force_entails("bd", gamma, alpha, u2).entailed

    def test_belief_disbelief_coupling_separates_bd(self, u1):
        gamma = parse_information_set("B: !p")
        alpha = parse_sentence("D: p")
        assert not brute_force_entails("wbd", gamma, alpha, u1).entailed
        assert not brute_force_entails("gbd", gamma, alpha, u1).entailed
        assert brute_force_entails("bd", gamma, alpha, u1).entailed

    def test_empty_gamma_entails_only_the_trivial_sentences(self, u1):
        for logic in LOGICS:
            assert brute_force_entails(logic, InformationSet(), Belief(Top()), u1).entailed
            assert brute_force_entails(
                logic, InformationSet(), Disbelief(Bottom()), u1
            ).entailed
            assert not brute_force_entails(logic, InformationSet(), Belief(p), u1).entailed

    def test_countermodel_witness_is_valid(self, u1):
        verdict = brute_force_entails(
            "wbd", parse_information_set("B: p"), parse_sentence("D: !p"), u1
        )
        assert not verdict.entailed
        witness = verdict.witness
        assert holds_all(witness, parse_information_set("B: p"))
        assert not satisfies(witness, parse_sentence("D: !p"))

    def test_first_countermodel_is_deterministic(self, u2):
        gamma = parse_information_set("B: p | q")
        alpha = parse_sentence("B: p")
        first = brute_force_entails("bd", gamma, alpha, u2).witness
        second = brute_force_entails("bd", gamma, alpha, u2).witness
        assert first == second

    @pytest.mark.parametrize("logic", LOGICS)
    @settings(max_examples=25)
    @given(gamma=information_sets(max_size=3, max_leaves=4))
    def test_consequence_slice_matches_per_query_checks(self, logic, gamma, u2):
        slice_ = brute_force_consequences(logic, gamma, u2)
        for mask in range(u2.full_mask + 1):
            rep = formula_for_class(mask, u2)
            for alpha in (Belief(rep), Disbelief(rep)):
                assert (alpha in slice_) == brute_force_entails(
                    logic, gamma, alpha, u2
                ).entailed


class TestCountermodelConstruction:
    @pytest.mark.parametrize("logic", LOGICS)
    @settings(max_examples=25)
    @given(gamma=information_sets(max_size=3, max_leaves=4), alpha=sentences(max_leaves=4))
    def test_constructed_countermodels_are_genuine(self, logic, gamma, alpha, u2):
        verdict = decide(logic, gamma, alpha)
        if verdict.entailed:
            return
        witness = construct_countermodel(logic, gamma, alpha, u2)
        assert holds_all(witness, gamma)
        assert not satisfies(witness, alpha)

    def test_entailed_queries_are_rejected(self, u1):
        with pytest.raises(CountermodelConstructionError):
            construct_countermodel(
                "wbd", parse_information_set("B: p"), parse_sentence("B: p"), u1
            )

    def test_bn_has_no_model_theory_here(self, u1):
        with pytest.raises(ValueError):
            construct_countermodel(
                "bn", InformationSet(), parse_sentence("B: p"), u1
            )


def test_render_and_dict_are_consistent(u1):
    m = ModelBD(0b11, frozenset({0b01}), u1)
    text = render_model(m)
    data = model_to_dict(m)
    assert data["type"] == "bd"
    assert data["m"] == [0, 1]
    assert data["family"] == [[0]]
    assert "v0" in text and "v1" in text
