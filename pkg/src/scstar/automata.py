"""Finite automata over named alphabets and the classical algorithms on them.

State sets (the ``StateSet`` of the design notes) are plain ``int`` bitmasks:
bit ``q`` set means state ``q`` is a member.  This keeps subset constructions
cheap and makes sets hashable for free.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InputError, StateCapExceeded

DEFAULT_STATE_CAP = 2_000_000
EPS = "eps"


def state_cap(cap: int | None = None) -> int:
    """Resolve the exploration cap: explicit value, then ``SCS_STATE_CAP``, then default."""
    if cap is not None:
        return cap
    env = os.environ.get("SCS_STATE_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"SCS_STATE_CAP is not an integer: {env!r}") from None
    return DEFAULT_STATE_CAP


# -- bitmask state sets ------------------------------------------------------

def bits(states: Iterable[int]) -> int:
    mask = 0
    for q in states:
        mask |= 1 << q
    return mask


def members(mask: int) -> tuple[int, ...]:
    out = []
    q = 0
    while mask:
        if mask & 1:
            out.append(q)
        mask >>= 1
        q += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return mask.bit_count()


def set_label(mask: int) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


# -- automaton types ---------------------------------------------------------

def _check_alphabet(alphabet: Sequence[str]) -> tuple[str, ...]:
    alphabet = tuple(alphabet)
    if len(set(alphabet)) != len(alphabet):
        raise InputError(f"duplicate symbols in alphabet {alphabet}")
    for s in alphabet:
        if not isinstance(s, str) or not s or any(c.isspace() for c in s):
            raise InputError(f"invalid symbol {s!r}")
        if s == EPS:
            raise InputError(f"{EPS!r} is reserved for empty-word moves")
    return alphabet


@dataclass(frozen=True)
class Dfa:
    """Complete DFA.  ``delta[q][i]`` is the successor of ``q`` on ``alphabet[i]``."""

    state_count: int
    alphabet: tuple[str, ...]
    initial: int
    finals: frozenset[int]
    delta: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", _check_alphabet(self.alphabet))
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        n = self.state_count
        if n < 1:
            raise InputError("a DFA needs at least one state")
        if not 0 <= self.initial < n:
            raise InputError(f"initial state {self.initial} out of range")
        if any(not 0 <= f < n for f in self.finals):
            raise InputError(f"final states {sorted(self.finals)} out of range")
        if len(self.delta) != n or any(len(row) != len(self.alphabet) for row in self.delta):
            raise InputError("transition table is not total")
        for row in self.delta:
            for t in row:
                if not 0 <= t < n:
                    raise InputError(f"transition target {t} out of range")

    def symbol_index(self, symbol: str) -> int:
        try:
            return self.alphabet.index(symbol)
        except ValueError:
            raise InputError(f"symbol {symbol!r} not in alphabet {self.alphabet}") from None

    @property
    def final_mask(self) -> int:
        return bits(self.finals)

    def step(self, q: int, symbol: str) -> int:
        return self.delta[q][self.symbol_index(symbol)]

    def image(self, mask: int, a: int) -> int:
        """``X.a`` for a bitmask ``X`` and symbol index ``a``."""
        out = 0
        row = self.delta
        q = 0
        while mask:
            if mask & 1:
                out |= 1 << row[q][a]
            mask >>= 1
            q += 1
        return out

    def restrict(self, symbols: Sequence[str]) -> "Dfa":
        """The same automaton seen over a sub-alphabet."""
        idx = [self.symbol_index(s) for s in symbols]
        return Dfa(self.state_count, tuple(symbols), self.initial, self.finals,
                   tuple(tuple(row[i] for i in idx) for row in self.delta))


@dataclass(frozen=True)
class EpsNfa:
    """NFA with empty-word moves.  Missing ``moves`` entries mean the empty set."""

    state_count: int
    alphabet: tuple[str, ...]
    initial: int
    finals: frozenset[int]
    moves: dict = field(default_factory=dict)  # (q, symbol index) -> frozenset
    eps: dict = field(default_factory=dict)    # q -> frozenset

    def __post_init__(self):
        object.__setattr__(self, "alphabet", _check_alphabet(self.alphabet))
        object.__setattr__(self, "finals", frozenset(self.finals))
        n = self.state_count
        ids = {self.initial, *self.finals}
        for (q, a), targets in self.moves.items():
            if not 0 <= a < len(self.alphabet):
                raise InputError(f"symbol index {a} out of range")
            ids.add(q)
            ids.update(targets)
        for q, targets in self.eps.items():
            ids.add(q)
            ids.update(targets)
        if n < 1 or any(not 0 <= q < n for q in ids):
            raise InputError("NFA refers to a state outside its range")

    def closure_masks(self) -> list[int]:
        """Per-state empty-word closure as bitmasks."""
        out = []
        for q in range(self.state_count):
            seen = {q}
            stack = [q]
            while stack:
                p = stack.pop()
                for r in self.eps.get(p, ()):
                    if r not in seen:
                        seen.add(r)
                        stack.append(r)
            out.append(bits(seen))
        return out


def as_nfa(d: Dfa) -> EpsNfa:
    moves = {(q, a): frozenset({t}) for q, row in enumerate(d.delta) for a, t in enumerate(row)}
    return EpsNfa(d.state_count, d.alphabet, d.initial, d.finals, moves, {})


# -- operations --------------------------------------------------------------

def run(d: Dfa, word: Iterable[str]) -> bool:
    """Membership test; a ``str`` word is read one character per symbol."""
    q = d.initial
    for s in word:
        q = d.delta[q][d.symbol_index(s)]
    return q in d.finals


def determinize(n: EpsNfa, cap: int | None = None) -> tuple[Dfa, tuple[int, ...]]:
    """Subset construction with empty-word closure.

    Returns the DFA over reachable closed subsets together with the subset
    (as a bitmask) labelling each DFA state.  The empty subset appears only
    when it is reachable, as a dead state.
    """
    cap = state_cap(cap)
    closure = n.closure_masks()
    k = len(n.alphabet)
    step = [[0] * k for _ in range(n.state_count)]
    for (q, a), targets in n.moves.items():
        m = 0
        for t in targets:
            m |= closure[t]
        step[q][a] = m
    final_mask = bits(n.finals)

    start = closure[n.initial]
    index = {start: 0}
    labels = [start]
    delta = []
    i = 0
    while i < len(labels):
        x = labels[i]
        row = []
        for a in range(k):
            y = 0
            m, q = x, 0
            while m:
                if m & 1:
                    y |= step[q][a]
                m >>= 1
                q += 1
            j = index.get(y)
            if j is None:
                if len(labels) >= cap:
                    raise StateCapExceeded(cap, len(labels) - i)
                j = index[y] = len(labels)
                labels.append(y)
            row.append(j)
        delta.append(row)
        i += 1
    finals = {j for j, x in enumerate(labels) if x & final_mask}
    return Dfa(len(labels), n.alphabet, 0, finals, delta), tuple(labels)


def complement(d: Dfa) -> Dfa:
    finals = frozenset(range(d.state_count)) - d.finals
    return Dfa(d.state_count, d.alphabet, d.initial, finals, d.delta)


def canonical(d: Dfa) -> Dfa:
    """Renumber reachable states in BFS order (symbols in alphabet order)."""
    order = {d.initial: 0}
    queue = deque([d.initial])
    seq = []
    while queue:
        q = queue.popleft()
        seq.append(q)
        for t in d.delta[q]:
            if t not in order:
                order[t] = len(order)
                queue.append(t)
    delta = [[order[t] for t in d.delta[q]] for q in seq]
    finals = {order[q] for q in seq if q in d.finals}
    return Dfa(len(seq), d.alphabet, 0, finals, delta)


def minimize(d: Dfa) -> Dfa:
    """Hopcroft partition refinement followed by canonical renumbering."""
    d = canonical(d)
    n, k = d.state_count, len(d.alphabet)
    inverse = [[[] for _ in range(n)] for _ in range(k)]
    for q, row in enumerate(d.delta):
        for a, t in enumerate(row):
            inverse[a][t].append(q)

    blocks = [b for b in (set(d.finals), set(range(n)) - d.finals) if b]
    block_of = [0] * n
    for i, b in enumerate(blocks):
        for q in b:
            block_of[q] = i
    work = {(i, a) for i in range(len(blocks)) for a in range(k)}
    while work:
        bi, a = work.pop()
        pre = set()
        for t in blocks[bi]:
            pre.update(inverse[a][t])
        touched: dict[int, set[int]] = {}
        for q in pre:
            touched.setdefault(block_of[q], set()).add(q)
        for yi, inside in touched.items():
            y = blocks[yi]
            if len(inside) == len(y):
                continue
            outside = y - inside
            blocks[yi] = inside
            ni = len(blocks)
            blocks.append(outside)
            for q in outside:
                block_of[q] = ni
            for c in range(k):
                if (yi, c) in work:
                    work.add((ni, c))
                elif len(inside) <= len(outside):
                    work.add((yi, c))
                else:
                    work.add((ni, c))

    reps = [next(iter(b)) for b in blocks]
    delta = [[block_of[d.delta[r][a]] for a in range(k)] for r in reps]
    finals = {i for i, r in enumerate(reps) if r in d.finals}
    return canonical(Dfa(len(blocks), d.alphabet, block_of[d.initial], finals, delta))


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    """Language equality by searching the product for a distinguishing pair."""
    if set(d1.alphabet) != set(d2.alphabet):
        raise InputError(f"alphabets differ: {d1.alphabet} vs {d2.alphabet}")
    remap = [d2.symbol_index(s) for s in d1.alphabet]
    start = (d1.initial, d2.initial)
    seen = {start}
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        if (p in d1.finals) != (q in d2.finals):
            return False
        for a, b in enumerate(remap):
            nxt = (d1.delta[p][a], d2.delta[q][b])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return True


def with_epsilon(d: Dfa) -> Dfa:
    """Minimal DFA for ``L(d) ∪ {ε}``."""
    if d.initial in d.finals:
        return minimize(d)
    n = d.state_count
    delta = list(d.delta) + [d.delta[d.initial]]
    return minimize(Dfa(n + 1, d.alphabet, n, d.finals | {n}, delta))


def without_epsilon(d: Dfa) -> Dfa:
    """Minimal DFA for ``L(d) \\ {ε}``."""
    if d.initial not in d.finals:
        return minimize(d)
    n = d.state_count
    delta = list(d.delta) + [d.delta[d.initial]]
    return minimize(Dfa(n + 1, d.alphabet, n, d.finals, delta))


def words(alphabet: Sequence[str], max_len: int):
    """All words over ``alphabet`` up to ``max_len``, shortest first."""
    layer: list[tuple[str, ...]] = [()]
    for _ in range(max_len + 1):
        yield from layer
        layer = [w + (s,) for w in layer for s in alphabet]
