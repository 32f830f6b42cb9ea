"""Shared fixtures, hypothesis strategies, and an independent evaluator.

The evaluator here is deliberately naive: it walks the formula tree with a
dict-based valuation instead of bitmasks, so truth-table tests in
test_plcore.py check the fast implementation against genuinely different
code.
"""

from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from bdlogic import (
    And,
    Atom,
    AtomUniverse,
    Belief,
    Bottom,
    Disbelief,
    Formula,
    Iff,
    Implies,
    InformationSet,
    Not,
    Or,
    Top,
    build_universe,
)

settings.register_profile(
    "bdlogic",
    max_examples=60,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("bdlogic")


# --------------------------------------------------------------------------
# independent evaluation oracle


def evaluate(formula: Formula, valuation: dict[str, bool]) -> bool:
    """Evaluate a formula under a {atom: bool} valuation, by recursion."""
    if isinstance(formula, Atom):
        return valuation[formula.name]
    if isinstance(formula, Top):
        return True
    if isinstance(formula, Bottom):
        return False
    if isinstance(formula, Not):
        return not evaluate(formula.operand, valuation)
    if isinstance(formula, And):
        return evaluate(formula.left, valuation) and evaluate(formula.right, valuation)
    if isinstance(formula, Or):
        return evaluate(formula.left, valuation) or evaluate(formula.right, valuation)
    if isinstance(formula, Implies):
        return (not evaluate(formula.left, valuation)) or evaluate(
            formula.right, valuation
        )
    if isinstance(formula, Iff):
        return evaluate(formula.left, valuation) == evaluate(formula.right, valuation)
    raise TypeError(f"unknown formula node: {formula!r}")


def valuation_for_world(index: int, universe: AtomUniverse) -> dict[str, bool]:
    return {name: bool(index >> i & 1) for i, name in enumerate(universe.atoms)}


# --------------------------------------------------------------------------
# hypothesis strategies


def formulas(
    atom_names: tuple[str, ...] = ("p", "q"), max_leaves: int = 10
) -> st.SearchStrategy[Formula]:
    leaves = st.one_of(
        st.sampled_from([Atom(n) for n in atom_names]),
        st.just(Top()),
        st.just(Bottom()),
    )
    return st.recursive(
        leaves,
        lambda inner: st.one_of(
            inner.map(Not),
            st.tuples(inner, inner).map(lambda t: And(*t)),
            st.tuples(inner, inner).map(lambda t: Or(*t)),
            st.tuples(inner, inner).map(lambda t: Implies(*t)),
            st.tuples(inner, inner).map(lambda t: Iff(*t)),
        ),
        max_leaves=max_leaves,
    )


# Identifier-shaped atom names for parser round trips.  "true"/"false" are
# keywords, so they never appear as atoms.
atom_names_wide = st.from_regex(r"[a-z][a-z0-9_]{0,6}", fullmatch=True).filter(
    lambda s: s not in ("true", "false")
)


@st.composite
def formulas_wide(draw) -> Formula:
    names = tuple(draw(st.lists(atom_names_wide, min_size=1, max_size=4, unique=True)))
    return draw(formulas(names, max_leaves=14))


def sentences(
    atom_names: tuple[str, ...] = ("p", "q"), max_leaves: int = 8
) -> st.SearchStrategy[Belief | Disbelief]:
    body = formulas(atom_names, max_leaves)
    return st.one_of(body.map(Belief), body.map(Disbelief))


def information_sets(
    atom_names: tuple[str, ...] = ("p", "q"),
    max_size: int = 4,
    max_leaves: int = 6,
) -> st.SearchStrategy[InformationSet]:
    return st.frozensets(
        sentences(atom_names, max_leaves), min_size=0, max_size=max_size
    ).map(InformationSet)


# --------------------------------------------------------------------------
# fixtures


@pytest.fixture(scope="session")
def u1() -> AtomUniverse:
    return AtomUniverse(("p",))


@pytest.fixture(scope="session")
def u2() -> AtomUniverse:
    return AtomUniverse(("p", "q"))


@pytest.fixture(scope="session")
def cu1():
    return build_universe(1)


@pytest.fixture(scope="session")
def cu2():
    return build_universe(2)
