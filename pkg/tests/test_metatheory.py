"""The cross-validation suite: registry, determinism, report shapes."""

from __future__ import annotations

import json
import random

import pytest

from bdlogic.metatheory import (
    REQUIRED_CASE_IDS,
    generate_information_set,
    run_suite,
)

# a light but representative slice — the full suite runs in the acceptance
# gate and via `bdl meta`
SMOKE_CASES = [
    "agnosticism",
    "membership-d-gap",
    "bprime-counterexample-bd",
    "collapse-bn",
    "tarskian-bd",
]


def test_registry_is_complete():
    report = run_suite(seed=1, scale="quick", case_ids=SMOKE_CASES)
    assert {c["case_id"] for c in report.canonical_dict()["cases"]} == set(
        SMOKE_CASES
    )
    assert len(REQUIRED_CASE_IDS) == 32


def test_unknown_case_id_rejected():
    with pytest.raises(ValueError):
        run_suite(case_ids=["no-such-case"])


def test_unknown_scale_rejected():
    with pytest.raises(ValueError):
        run_suite(scale="enormous")


def test_smoke_cases_pass_and_count_checks():
    report = run_suite(seed=3, scale="quick", case_ids=SMOKE_CASES)
    assert report.all_passed
    assert report.total_checks > 0
    data = report.canonical_dict()
    assert data["all_passed"] is True
    assert data["total_checks"] == report.total_checks
    for case in data["cases"]:
        assert case["passed"] is True
        assert case["cases_run"] > 0


def test_reports_are_deterministic_for_a_seed():
    a = run_suite(seed=11, scale="quick", case_ids=SMOKE_CASES).to_json()
    b = run_suite(seed=11, scale="quick", case_ids=SMOKE_CASES).to_json()
    assert a == b


def test_different_seeds_change_the_sampling():
    a = run_suite(seed=1, scale="quick", case_ids=["tarskian-bd"]).canonical_dict()
    b = run_suite(seed=2, scale="quick", case_ids=["tarskian-bd"]).canonical_dict()
    # both pass, but they are distinct runs over distinct samples; the
    # canonical payload pins seed so the dicts differ
    assert a["seed"] != b["seed"]


def test_canonical_payload_has_no_timing(cu1):
    report = run_suite(seed=5, scale="quick", case_ids=["agnosticism"])
    blob = report.to_json()
    data = json.loads(blob)
    assert "wall_ms" not in blob
    assert data["schema"] == 1
    assert data["scale"] == "quick"
    # json round trip is stable
    assert json.dumps(data, indent=2, sort_keys=True) == blob


def test_text_report_shape():
    report = run_suite(seed=5, scale="quick", case_ids=SMOKE_CASES)
    text = report.to_text()
    assert text.startswith("metatheory suite — seed 5, scale quick")
    assert "SUITE: PASS" in text
    for case_id in SMOKE_CASES:
        assert case_id in text


class TestGenerateInformationSet:
    def test_respects_max_size(self, cu2):
        rng = random.Random(0)
        for _ in range(50):
            iset = generate_information_set(cu2, 3, rng)
            assert len(iset) <= 3

    def test_deterministic_under_seeding(self, cu2):
        a = [generate_information_set(cu2, 4, random.Random(9)) for _ in range(10)]
        b = [generate_information_set(cu2, 4, random.Random(9)) for _ in range(10)]
        assert a == b

    def test_draws_only_universe_sentences(self, cu1):
        rng = random.Random(1)
        allowed = set(cu1.sentences)
        for _ in range(30):
            assert set(generate_information_set(cu1, 5, rng)) <= allowed
