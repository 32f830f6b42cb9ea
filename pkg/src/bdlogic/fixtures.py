"""Small worked scenarios with their expected verdicts.

Each fixture is a `.bdl` document plus a list of checkable expectations
(entailments or consistency flags per logic).  They drive the ``examples``
CLI subcommand and double as regression anchors in the test suite:

* ``murder`` — believe ``s`` and ``k -> m``, disbelieve ``s & m``.  Only
  the logic whose disbelief rule may consult the beliefs concludes
  ``D: k``; the weak and general systems do not.
* ``lottery`` — disbelieve every ticket win but believe exactly one wins.
  Rationally coherent: no flag is raised in the weak or belief-consulting
  systems, while the general system's pooled reading collapses.
* ``agnostic`` — disbelieve ``p`` and disbelieve ``!p``.  Suspension of
  judgment; fine everywhere except the general system, where the two
  disbelief sources pool into a refutation of everything.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal, Optional, Sequence

from .decision import decide, inconsistency_report
from .syntax import (
    And,
    Atom,
    Formula,
    InformationSet,
    Not,
    Or,
    Sentence,
    parse_information_set,
    parse_sentence,
    render_formula,
    render_sentence,
)
from .verdicts import LogicId

__all__ = [
    "Expectation",
    "ExpectationResult",
    "Fixture",
    "FIXTURES",
    "agnostic",
    "evaluate",
    "exactly_one",
    "lottery",
    "murder",
]


@dataclass(frozen=True)
class Expectation:
    """One checkable claim about a fixture under one logic."""

    logic: LogicId
    kind: Literal["entailment", "flag"]
    query: Optional[Sentence] = None
    flag: Optional[str] = None  # attribute of InconsistencyReport
    expected: bool = True

    def describe(self) -> str:
        if self.kind == "entailment":
            verb = "entails" if self.expected else "does not entail"
            assert self.query is not None
            return f"{self.logic} {verb} {render_sentence(self.query)}"
        assert self.flag is not None
        state = "set" if self.expected else "clear"
        return f"{self.logic} flag {self.flag} is {state}"


@dataclass(frozen=True)
class ExpectationResult:
    expectation: Expectation
    actual: bool

    @property
    def ok(self) -> bool:
        return self.actual == self.expectation.expected

    def render(self) -> str:
        mark = "ok  " if self.ok else "FAIL"
        return f"{mark} {self.expectation.describe()}"


@dataclass(frozen=True)
class Fixture:
    name: str
    title: str
    document: str
    expectations: tuple[Expectation, ...]

    @property
    def gamma(self) -> InformationSet:
        return parse_information_set(self.document)


def evaluate(fixture: Fixture) -> list[ExpectationResult]:
    gamma = fixture.gamma
    results = []
    for exp in fixture.expectations:
        if exp.kind == "entailment":
            assert exp.query is not None
            actual = decide(exp.logic, gamma, exp.query).entailed
        else:
            assert exp.flag is not None
            actual = bool(getattr(inconsistency_report(exp.logic, gamma), exp.flag))
        results.append(ExpectationResult(exp, actual))
    return results


def exactly_one(formulas: Sequence[Formula]) -> Formula:
    """Disjunction over picks: that formula true, every other one false."""
    if not formulas:
        raise ValueError("exactly_one needs at least one formula")
    picks: list[Formula] = []
    for i, chosen in enumerate(formulas):
        term: Formula = chosen
        for j, other in enumerate(formulas):
            if j != i:
                term = And(term, Not(other))
        picks.append(term)
    out = picks[0]
    for term in picks[1:]:
        out = Or(out, term)
    return out


def murder() -> Fixture:
    doc = "\n".join(
        [
            "# case notes: s = seen at the scene, k = killer, m = had a motive",
            "B: s",
            "B: k -> m",
            "D: s & m",
        ]
    )
    query = parse_sentence("D: k")
    return Fixture(
        name="murder",
        title="disbelief by consulting the beliefs",
        document=doc,
        expectations=(
            Expectation("bd", "entailment", query=query, expected=True),
            Expectation("wbd", "entailment", query=query, expected=False),
            Expectation("gbd", "entailment", query=query, expected=False),
            Expectation("bd", "flag", flag="combined_inconsistent", expected=False),
        ),
    )


def lottery(tickets: int = 2) -> Fixture:
    if not 2 <= tickets <= 8:
        raise ValueError("lottery supports 2..8 tickets")
    names = [f"t{i}" for i in range(1, tickets + 1)]
    atoms = [Atom(n) for n in names]
    lines = [f"# {tickets}-ticket lottery: disbelieve each win, believe exactly one"]
    lines.extend(f"D: {n}" for n in names)
    lines.append(f"B: {render_formula(exactly_one(atoms))}")
    doc = "\n".join(lines)
    return Fixture(
        name="lottery",
        title=f"lottery with {tickets} tickets",
        document=doc,
        expectations=(
            Expectation("wbd", "flag", flag="combined_inconsistent", expected=False),
            Expectation("bd", "flag", flag="combined_inconsistent", expected=False),
            Expectation("bd", "flag", flag="d_inconsistent", expected=False),
            Expectation("gbd", "flag", flag="combined_inconsistent", expected=True),
            Expectation("gbd", "flag", flag="b_inconsistent", expected=False),
        ),
    )


def agnostic() -> Fixture:
    doc = "\n".join(
        [
            "# suspending judgment: disbelieve p and its negation",
            "D: p",
            "D: !p",
        ]
    )
    top_disbelief = parse_sentence("D: true")
    return Fixture(
        name="agnostic",
        title="agnosticism about p",
        document=doc,
        expectations=(
            Expectation("wbd", "flag", flag="combined_inconsistent", expected=False),
            Expectation("bd", "flag", flag="combined_inconsistent", expected=False),
            Expectation("gbd", "flag", flag="d_inconsistent", expected=True),
            Expectation("gbd", "flag", flag="combined_inconsistent", expected=True),
            Expectation("gbd", "entailment", query=top_disbelief, expected=True),
        ),
    )


FIXTURES: dict[str, Callable[..., Fixture]] = {
    "murder": murder,
    "lottery": lottery,
    "agnostic": agnostic,
}
