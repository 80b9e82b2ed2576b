import itertools
import math
from functools import lru_cache

import pytest
from hypothesis import strategies as st

from scstar.automata import Dfa, run
from scstar.pipeline import antichain_min, is_antichain

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def even_a():
    """(aa)*"""
    return Dfa(2, ("a",), 0, {0}, [[1], [0]])


@pytest.fixture
def a_plus():
    return Dfa(2, ("a",), 0, {1}, [[1], [1]])


@pytest.fixture
def a_star():
    return Dfa(1, ("a",), 0, {0}, [[0]])


@pytest.fixture
def sigma_star():
    return Dfa(1, ("a", "b"), 0, {0}, [[0, 0]])


@pytest.fixture
def empty_lang():
    return Dfa(1, ("a", "b"), 0, set(), [[0, 0]])


@st.composite
def dfas(draw, max_n=4, max_k=2):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_k))
    delta = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=k, max_size=k),
                          min_size=n, max_size=n))
    finals = draw(st.sets(st.integers(0, n - 1)))
    return Dfa(n, tuple("abc"[:k]), 0, finals, delta)


# -- membership by word splitting, independent of any automaton construction --

def plus_member(inner):
    """Membership in inner^+ where ``inner`` is a predicate on tuples."""
    def member(word):
        word = tuple(word)

        @lru_cache(maxsize=None)
        def from_(i):
            if i == len(word):
                return False
            for j in range(i + 1, len(word) + 1):
                if inner(word[i:j]) and (j == len(word) or from_(j)):
                    return True
            return False

        if not word:
            return inner(())
        return from_(0)
    return member


def pcp_member(d):
    """Membership in L(d)^{+c+}."""
    plus = plus_member(lambda w: run(d, w))
    return plus_member(lambda w: not plus(w))


def scs_member(d):
    """Membership in L(d)^{*c*}."""
    pcp = pcp_member(d)
    return lambda w: len(tuple(w)) == 0 or pcp(w)


# -- chain-form definition, checked without search pruning --

def is_form_brute(sets):
    """Definition check over every ordering and every choice of distinguished elements."""
    for order in itertools.permutations(sets):
        for qs in itertools.product(*[[q for q in range(8) if x >> q & 1] for x in order]):
            if len(set(qs)) != len(qs):
                continue
            chain = [x & ~(1 << q) for x, q in zip(order, qs)]
            if any(a & b != a for a, b in zip(chain, chain[1:])):
                continue
            if any(chain[-1] >> q & 1 for q in qs):
                continue
            return True
    return False


def all_antichains(universe):
    subsets = list(range(1, 1 << universe))
    for r in range(1, math.comb(universe, universe // 2) + 1):  # Sperner bound
        for fam in itertools.combinations(subsets, r):
            if is_antichain(fam):
                yield antichain_min(fam)
