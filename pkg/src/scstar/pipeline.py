"""Plus-complement-plus and star-complement-star via antichain-pruned subset construction.

Stage names follow the construction:

* ``D``   input DFA for L
* ``N1``  D plus empty-word moves from non-initial finals back to the start (L+)
* ``D1``  subset construction of N1 (L+), states labelled by subsets of D
* ``D2``  complement of D1
* ``N3``  D2 plus empty-word moves from non-initial finals to the state {0}
* ``D3``  subset construction of N3; here kept as antichains of D-subsets
* ``D3min`` the minimal DFA for the result

A state of D3 is a family of D-subsets.  A family containing ``S ⊆ T`` behaves
exactly like the family without ``T``, so only ⊆-minimal members are kept.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .automata import (Dfa, EpsNfa, complement, determinize, members,
                       minimize, state_cap, with_epsilon)
from .errors import InputError, StateCapExceeded

Antichain = tuple  # tuple[int, ...] of bitmasks, sorted by (popcount, value)


def _order(x: int):
    return (x.bit_count(), x)


def antichain_min(sets: Iterable[int]) -> Antichain:
    """Keep the ⊆-minimal sets, deduplicated, in canonical order."""
    kept: list[int] = []
    for x in sorted(set(sets), key=_order):
        for y in kept:
            if y & x == y:
                break
        else:
            kept.append(x)
    if not kept:
        raise InputError("antichain_min of an empty collection")
    return tuple(kept)


def is_antichain(sets: Antichain) -> bool:
    return all(x == y or x & y != x for x in sets for y in sets)


def plus_nfa(d: Dfa) -> EpsNfa:
    moves = {(q, a): frozenset({t}) for q, row in enumerate(d.delta) for a, t in enumerate(row)}
    eps = {q: frozenset({d.initial}) for q in d.finals if q != d.initial}
    return EpsNfa(d.state_count, d.alphabet, d.initial, d.finals, moves, eps)


def n3_nfa(d2: Dfa, labels) -> EpsNfa:
    """Second plus step on the complemented determinization ``d2``.

    ``labels[i]`` is the D-subset of state ``i``; the target of the new
    empty-word moves is the state labelled with the singleton start set.
    """
    start_label = labels[d2.initial]
    if start_label.bit_count() != 1:
        raise RuntimeError("D2 has no state labelled with the start singleton")
    target = d2.initial
    moves = {(q, a): frozenset({t}) for q, row in enumerate(d2.delta) for a, t in enumerate(row)}
    eps = {q: frozenset({target}) for q in d2.finals if q != target}
    return EpsNfa(d2.state_count, d2.alphabet, d2.initial, d2.finals, moves, eps)


def make_stepper(d: Dfa) -> Callable[[Antichain, int], tuple[Antichain, bool]]:
    """One-symbol transition of pruned D3 for ``d`` (symbol given by index).

    Each member ``X`` maps to ``X.a``.  If ``X.a`` meets F it gets the start
    state added (non-final in D2); otherwise it is final in D2 and the start
    singleton joins the successor through the empty-word move.
    """
    fmask = d.final_mask
    start = 1 << d.initial
    images: dict[tuple[int, int], int] = {}

    def step(s: Antichain, a: int) -> tuple[Antichain, bool]:
        out = []
        accepting = False
        for x in s:
            y = images.get((x, a))
            if y is None:
                y = images[x, a] = d.image(x, a)
            if y & fmask:
                out.append(y | start)
            else:
                out.append(y)
                accepting = True
        if accepting:
            out.append(start)
        return antichain_min(out), accepting

    return step


def pruned_step(s: Antichain, symbol: str, d: Dfa) -> tuple[Antichain, bool]:
    return make_stepper(d)(tuple(s), d.symbol_index(symbol))


def accepting(s: Antichain, d: Dfa) -> bool:
    """Whether a D3 state is final: some member avoids every final of ``d``."""
    fmask = d.final_mask
    return any(not x & fmask for x in s)


def run_pruned(d: Dfa, word, start: Antichain | None = None) -> tuple[Antichain, bool]:
    """Drive pruned D3 along ``word``; returns the reached state and its finality."""
    step = make_stepper(d)
    s = start if start is not None else (1 << d.initial,)
    acc = accepting(s, d)
    for sym in word:
        s, acc = step(s, d.symbol_index(sym))
    return s, acc


def pruned_determinize(d: Dfa, cap: int | None = None,
                       stepper: Callable[[Dfa], Callable] = make_stepper) -> tuple[Dfa, tuple[Antichain, ...]]:
    """Breadth-first exploration of pruned D3 from ``{{0}}``."""
    cap = state_cap(cap)
    step = stepper(d)
    k = len(d.alphabet)
    init = (1 << d.initial,)
    index = {init: 0}
    labels = [init]
    finals = set()
    if not init[0] & d.final_mask:  # ε ∈ L+c+ iff ε ∉ L
        finals.add(0)
    delta = []
    i = 0
    while i < len(labels):
        s = labels[i]
        row = []
        for a in range(k):
            t, acc = step(s, a)
            j = index.get(t)
            if j is None:
                if len(labels) >= cap:
                    raise StateCapExceeded(cap, len(labels) - i)
                j = index[t] = len(labels)
                labels.append(t)
                if acc:
                    finals.add(j)
            row.append(j)
        delta.append(row)
        i += 1
    return Dfa(len(labels), d.alphabet, 0, finals, delta), tuple(labels)


@dataclass(frozen=True)
class CanonicalForm:
    """Family ``{ {q_i} ∪ S_i }`` with distinct ``q_i`` outside ``S_k`` and a ⊆-chain ``S_i``."""

    k: int
    q: tuple[int, ...]
    chain: tuple[int, ...]

    def sets(self) -> Antichain:
        return antichain_min((1 << q) | s for q, s in zip(self.q, self.chain))


def canonical_form_check(s: Antichain) -> CanonicalForm | None:
    """Search orderings of ``s`` and a distinguished element per member for the chain form."""
    sets = list(s)
    k = len(sets)
    used = [False] * k
    qs: list[int] = []
    chain: list[int] = []

    def extend(prev: int, qmask: int) -> bool:
        if len(qs) == k:
            return True
        for i, x in enumerate(sets):
            if used[i]:
                continue
            for q in members(x):
                rest = x & ~(1 << q)
                # rest must extend the chain and avoid every earlier q (all chain sets sit in S_k)
                if qmask >> q & 1 or rest & prev != prev or rest & qmask:
                    continue
                used[i] = True
                qs.append(q)
                chain.append(rest)
                if extend(rest, qmask | 1 << q):
                    return True
                used[i] = False
                qs.pop()
                chain.pop()
        return False

    if k and extend(0, 0):
        return CanonicalForm(k, tuple(qs), tuple(chain))
    return None


@dataclass
class PipelineReport:
    variant: str
    d_states: int
    n1_states: int
    d1_states: int
    d2_states: int
    n3_states: int
    d3_states: int
    d3min_states: int
    plus_states: int  # size of the minimal DFA for L+c+ (equals d3min_states for the plus variant)
    epsilon_in_L: bool
    epsilon_in_result: bool
    canonical_violations: int
    result: Dfa
    stages: dict = field(default_factory=dict, repr=False)

    def rows(self) -> list[tuple[str, object]]:
        return [("variant", self.variant), ("D", self.d_states), ("N1", self.n1_states),
                ("D1", self.d1_states), ("D2", self.d2_states), ("N3", self.n3_states),
                ("D3", self.d3_states), ("D3min", self.d3min_states),
                ("L+c+ min", self.plus_states), ("eps in L", self.epsilon_in_L),
                ("eps in result", self.epsilon_in_result),
                ("canonical violations", self.canonical_violations)]


def plus_complement_plus(d: Dfa, cap: int | None = None, check_form: bool = True) -> PipelineReport:
    n1 = plus_nfa(d)
    d1, d1_labels = determinize(n1, cap)
    d2 = complement(d1)
    n3 = n3_nfa(d2, d1_labels)
    d3, d3_labels = pruned_determinize(d, cap)
    result = minimize(d3)
    violations = 0
    if check_form:
        violations = sum(canonical_form_check(s) is None for s in d3_labels)
    eps_in_l = d.initial in d.finals
    return PipelineReport(
        variant="plus", d_states=d.state_count, n1_states=n1.state_count,
        d1_states=d1.state_count, d2_states=d2.state_count, n3_states=n3.state_count,
        d3_states=d3.state_count, d3min_states=result.state_count,
        plus_states=result.state_count, epsilon_in_L=eps_in_l,
        epsilon_in_result=result.initial in result.finals,
        canonical_violations=violations, result=result,
        stages={"N1": n1, "D1": (d1, d1_labels), "D2": (d2, d1_labels), "N3": n3,
                "D3": (d3, d3_labels), "D3min": result},
    )


def star_complement_star(d: Dfa, cap: int | None = None, check_form: bool = True) -> PipelineReport:
    """L*c* equals L+c+ when ε ∉ L and L+c+ ∪ {ε} otherwise."""
    rep = plus_complement_plus(d, cap, check_form)
    result = with_epsilon(rep.result) if rep.epsilon_in_L else rep.result
    rep.variant = "star"
    rep.result = result
    rep.d3min_states = result.state_count
    rep.epsilon_in_result = result.initial in result.finals
    rep.stages["D3min"] = result
    return rep


def plus_dfa(d: Dfa) -> Dfa:
    """Minimal DFA for L+."""
    return minimize(determinize(plus_nfa(d))[0])


ORBIT_NAMES = ("L", "L+", "Lc+", "L+c+", "Lc+c+")


@dataclass
class Orbit:
    languages: dict  # name -> minimal Dfa

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(self.languages[name].state_count for name in ORBIT_NAMES)

    def all_ten(self) -> dict:
        """The five languages and their complements."""
        out = dict(self.languages)
        for name in ORBIT_NAMES:
            out[f"({name})c"] = complement(self.languages[name])
        return out


def orbit(d: Dfa, cap: int | None = None) -> Orbit:
    dc = complement(d)
    langs = {
        "L": minimize(d),
        "L+": plus_dfa(d),
        "Lc+": plus_dfa(dc),
        "L+c+": plus_complement_plus(d, cap, check_form=False).result,
        "Lc+c+": plus_complement_plus(dc, cap, check_form=False).result,
    }
    return Orbit(langs)
