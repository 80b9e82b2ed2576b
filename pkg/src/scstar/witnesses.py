"""Witness DFA families for the lower bound, with their reachability and separating words.

All witnesses live on states ``0..n-1`` with finals ``{0, 1}``.  States
``2..n-2`` (the *cycle*) carry the interesting dynamics: ``a`` and ``b``
rotate them by one, ``e`` swaps 2 and 3, ``f`` merges 2 into 3.  ``c`` and
``d`` shuttle the start state through ``n-1`` and back, ``g`` collapses
``{0, 2}`` to 2 and sends 3 to 0.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .automata import Dfa, bits, members
from .errors import InputError
from .pipeline import Antichain, antichain_min, run_pruned

KINDS = {
    "reach": ("a", "b", "c", "d"),
    "dist": ("b", "e", "f", "g"),
    "combined": ("a", "b", "c", "d", "e", "f", "g"),
}


def _check_n(n: int) -> None:
    if n < 5:
        raise InputError(f"witness automata need n >= 5 (got {n})")


def _columns(n: int) -> dict[str, list[int]]:
    last = n - 1
    cycle = {i: (i + 1 if i < n - 2 else 2) for i in range(2, n - 1)}
    ident = list(range(n))

    a = [1, 2] + [cycle[i] for i in range(2, n - 1)] + [last]
    b = [0, 2] + [cycle[i] for i in range(2, n - 1)] + [last]
    c = [last, last] + list(range(2, n - 1)) + [last]
    d = [1, 1] + list(range(2, n - 1)) + [0]
    e = list(ident)
    e[2], e[3] = 3, 2
    f = list(ident)
    f[2] = 3
    g = list(ident)
    g[0], g[1], g[3] = 2, 2, 0
    return {"a": a, "b": b, "c": c, "d": d, "e": e, "f": f, "g": g}


def witness(kind: str, n: int) -> Dfa:
    if kind not in KINDS:
        raise InputError(f"unknown witness family {kind!r}; choose from {sorted(KINDS)}")
    _check_n(n)
    cols = _columns(n)
    symbols = KINDS[kind]
    delta = [[cols[s][q] for s in symbols] for q in range(n)]
    return Dfa(n, symbols, 0, {0, 1}, delta)


def shift(q: int, i: int, n: int) -> int:
    """The cycle state sent to ``q`` by any length-``i`` word over {a, b}."""
    if not 2 <= q <= n - 2:
        raise InputError(f"state {q} is not on the cycle 2..{n - 2}")
    return (q - i - 2) % (n - 3) + 2


def shift_set(mask: int, i: int, n: int) -> int:
    return bits(shift(q, i, n) for q in members(mask))


@dataclass(frozen=True)
class FamilyState:
    """The D3 state ``{ {0, q_i} ∪ S_i : i = 1..k }``; ``chain`` holds the ``S_i`` as bitmasks."""

    n: int
    q: tuple[int, ...]
    chain: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.q)

    def validate(self) -> None:
        cycle = bits(range(2, self.n - 1))
        if not self.q or len(self.q) != len(self.chain):
            raise InputError("a family state needs k >= 1 distinguished states")
        if len(set(self.q)) != len(self.q) or any(not 2 <= q <= self.n - 2 for q in self.q):
            raise InputError(f"distinguished states {self.q} must be distinct cycle states")
        for s, t in zip(self.chain, self.chain[1:]):
            if s & t != s:
                raise InputError("chain is not increasing")
        top = self.chain[-1]
        if top & ~cycle or bits(self.q) & top:
            raise InputError("chain must lie on the cycle and avoid every distinguished state")

    def antichain(self) -> Antichain:
        return antichain_min(1 | (1 << q) | s for q, s in zip(self.q, self.chain))


def _forms(universe: tuple[int, ...], k: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every (q, chain) with k distinct q from ``universe`` and a chain over the rest."""
    for q in itertools.permutations(universe, k):
        rest = [x for x in universe if x not in q]
        for levels in itertools.product(range(1, k + 2), repeat=len(rest)):
            chain = tuple(bits(x for x, lv in zip(rest, levels) if lv <= i) for i in range(1, k + 1))
            yield q, chain


def family_states(n: int, restricted: bool = False) -> Iterator[FamilyState]:
    """Distinct family states, each with the first representation found."""
    _check_n(n)
    if restricted:
        m = math.ceil(n / 2)
        k = max(1, m - 3)
        q = tuple(range(2, k + 2))
        lo = max(m - 1, k + 2)
        rest = tuple(range(lo, n - 1))
        for levels in itertools.product(range(1, k + 2), repeat=len(rest)):
            chain = tuple(bits(x for x, lv in zip(rest, levels) if lv <= i) for i in range(1, k + 1))
            yield FamilyState(n, q, chain)
        return
    universe = tuple(range(2, n - 1))
    seen = set()
    for k in range(1, len(universe) + 1):
        for q, chain in _forms(universe, k):
            fs = FamilyState(n, q, chain)
            key = fs.antichain()
            if key not in seen:
                seen.add(key)
                yield fs


def subset_word(n: int, subset: int) -> str:
    """Word over {a, b} driving the plus-automaton from {0} to {0} ∪ subset (subset ⊆ 1..n-2)."""
    if not subset:
        return ""
    elems = members(subset)
    if elems[0] < 1 or elems[-1] > n - 2:
        raise InputError("subset must lie in 1..n-2")
    low = elems[0]
    rest = bits(x - low for x in elems[1:])
    return subset_word(n, rest) + "a" + "b" * (low - 1)


def reach_string(n: int, fs: FamilyState) -> str:
    """Word leading pruned D3 of the reach witness from {{0}} to ``fs``."""
    _check_n(n)
    if fs.n != n:
        raise InputError("family state built for a different n")
    fs.validate()
    w = subset_word(n, fs.chain[0])
    ell = shift(fs.q[0], len(w), n) - 1  # b^ell carries state 1 onto q_1 ⊖ |w|
    tail = "b" * ell + w
    if fs.k == 1:
        return "a" + tail
    back = len(w) + ell
    sub = FamilyState(n, tuple(shift(q, back, n) for q in fs.q[1:]),
                      tuple(shift_set(s, back, n) for s in fs.chain[1:]))
    return reach_string(n, sub) + "cd" + tail


@lru_cache(maxsize=None)
def _monoid(n: int) -> dict[tuple[int, ...], str]:
    """Shortest word over {b, e, f} for every reachable self-map of the cycle."""
    cols = _columns(n)
    cycle = tuple(range(2, n - 1))
    gens = [(s, cols[s]) for s in ("b", "e", "f")]
    ident = cycle
    words = {ident: ""}
    queue = deque([ident])
    while queue:
        t = queue.popleft()
        for s, col in gens:
            u = tuple(col[x] for x in t)
            if u not in words:
                words[u] = words[t] + s
                queue.append(u)
    return words


def transformation_word(n: int, target: dict[int, int]) -> str:
    _check_n(n)
    cycle = tuple(range(2, n - 1))
    if set(target) != set(cycle) or any(v not in cycle for v in target.values()):
        raise InputError(f"target must map {cycle[0]}..{cycle[-1]} into itself")
    key = tuple(target[x] for x in cycle)
    try:
        return _monoid(n)[key]
    except KeyError:
        raise RuntimeError(f"{{b, e, f}} does not reach {target}") from None


def separating_string(n: int, subset: int) -> str:
    """``w_T g`` with ``w_T`` collapsing T onto 2 and the rest of the cycle onto 3."""
    _check_n(n)
    cycle = range(2, n - 1)
    if subset & ~bits(cycle):
        raise InputError("T must lie on the cycle 2..n-2")
    target = {x: 2 if subset >> x & 1 else 3 for x in cycle}
    return transformation_word(n, target) + "g"


def check_reachability(n: int) -> list[FamilyState]:
    """Family states NOT landed on by their reach string (empty list means all good)."""
    d = witness("combined", n)
    return [fs for fs in family_states(n) if run_pruned(d, reach_string(n, fs))[0] != fs.antichain()]


def acceptance_signature(n: int, state: Antichain) -> tuple[bool, ...]:
    """Acceptance of every separating string from ``state``, one per subset of the cycle."""
    d = witness("combined", n)
    cycle = bits(range(2, n - 1))
    out = []
    for t in range(cycle + 1):
        if t & ~cycle:
            continue
        out.append(run_pruned(d, separating_string(n, t), start=state)[1])
    return tuple(out)


def check_distinguishability(n: int) -> list[tuple[FamilyState, FamilyState]]:
    """Pairs of distinct family states that no separating string tells apart."""
    groups: dict[tuple[bool, ...], list[FamilyState]] = {}
    for fs in family_states(n):
        groups.setdefault(acceptance_signature(n, fs.antichain()), []).append(fs)
    return [(g[0], other) for g in groups.values() for other in g[1:]]
