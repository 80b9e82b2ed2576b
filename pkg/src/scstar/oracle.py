"""Brute-force references: the unpruned double subset construction and exhaustive DFA search."""
from __future__ import annotations

import json
import os
import random
import string
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .automata import Dfa, complement, determinize, minimize
from .errors import InputError, StateCapExceeded
from .pipeline import n3_nfa, plus_nfa, pruned_determinize

SLICES = 64


def naive_pipeline(d: Dfa, cap: int | None = None) -> Dfa:
    """Minimal DFA for L+c+ with plain subset construction at both levels."""
    d1, labels = determinize(plus_nfa(d), cap)
    d3, _ = determinize(n3_nfa(complement(d1), labels), cap)
    return minimize(d3)


def pruned_pipeline(d: Dfa, cap: int | None = None) -> Dfa:
    return minimize(pruned_determinize(d, cap)[0])


def alphabet_of(k: int) -> tuple[str, ...]:
    if not 1 <= k <= 26:
        raise InputError(f"alphabet size {k} unsupported")
    return tuple(string.ascii_lowercase[:k])


def random_dfa(rng: random.Random, n: int, k: int) -> Dfa:
    delta = [[rng.randrange(n) for _ in range(k)] for _ in range(n)]
    finals = {q for q in range(n) if rng.random() < 0.5}
    return Dfa(n, alphabet_of(k), 0, finals, delta)


def random_corpus(seed: int, count: int, n_max: int, k_max: int) -> list[Dfa]:
    """Seeded corpus (Python's Mersenne Twister); sizes drawn uniformly."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        k = rng.randint(1, k_max)
        out.append(random_dfa(rng, n, k))
    return out


@dataclass(frozen=True)
class SearchSpec:
    n: int
    k: int
    jobs: int = 1
    offset: int = 0
    stride: int = 1
    cap: int | None = None

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise InputError("search needs n >= 1 and k >= 1")
        if self.stride < 1 or not 0 <= self.offset < self.stride:
            raise InputError("slice needs 0 <= offset < stride")
        if self.n ** (self.n * self.k) * 2 ** self.n >= 2 ** 128:
            raise InputError("enumeration index does not fit in 128 bits")

    @property
    def total(self) -> int:
        return self.n ** (self.n * self.k) * 2 ** self.n


def dfa_from_index(n: int, k: int, index: int) -> Dfa:
    """Index = table number * 2^n + final-set bitmask; table cells are base-n digits, (0, a) first."""
    fmask = index % (1 << n)
    table = index >> n
    cells = []
    for _ in range(n * k):
        table, digit = divmod(table, n)
        cells.append(digit)
    delta = [cells[q * k:(q + 1) * k] for q in range(n)]
    return Dfa(n, alphabet_of(k), 0, {q for q in range(n) if fmask >> q & 1}, delta)


def encode(d: Dfa) -> str:
    """Compact canonical text: ``n:k:<table digits>:<final bits>``."""
    table = "".join(str(t) if t < 10 else f"({t})" for row in d.delta for t in row)
    fbits = "".join("1" if q in d.finals else "0" for q in range(d.state_count))
    return f"{d.state_count}:{len(d.alphabet)}:{table}:{fbits}"


def enumerate_dfas(spec: SearchSpec):
    for index in range(spec.offset, spec.total, spec.stride):
        yield dfa_from_index(spec.n, spec.k, index)


@dataclass
class SearchResult:
    n: int
    k: int
    max_sc: int = 0
    argmax: str | None = None
    histogram: dict = field(default_factory=dict)
    capped: int = 0
    count: int = 0

    @property
    def valid(self) -> bool:
        return self.capped == 0

    def add(self, d: Dfa, sc: int | None) -> None:
        self.count += 1
        if sc is None:
            self.capped += 1
            return
        self.histogram[sc] = self.histogram.get(sc, 0) + 1
        code = encode(d)
        if sc > self.max_sc or (sc == self.max_sc and (self.argmax is None or code < self.argmax)):
            self.max_sc, self.argmax = sc, code

    def merge(self, other: "SearchResult") -> "SearchResult":
        out = SearchResult(self.n, self.k, self.max_sc, self.argmax, dict(self.histogram),
                           self.capped + other.capped, self.count + other.count)
        for sc, c in other.histogram.items():
            out.histogram[sc] = out.histogram.get(sc, 0) + c
        if other.argmax is not None and (
                other.max_sc > out.max_sc
                or (other.max_sc == out.max_sc and (out.argmax is None or other.argmax < out.argmax))):
            out.max_sc, out.argmax = other.max_sc, other.argmax
        return out

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "k": self.k, "max_sc": self.max_sc, "argmax": self.argmax,
                           "histogram": {str(s): c for s, c in sorted(self.histogram.items())},
                           "capped": self.capped, "count": self.count}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SearchResult":
        obj = json.loads(text)
        return cls(obj["n"], obj["k"], obj["max_sc"], obj["argmax"],
                   {int(s): c for s, c in obj["histogram"].items()}, obj["capped"], obj["count"])


def _search_slice(args) -> tuple[int, str]:
    n, k, offset, stride, cap = args
    res = SearchResult(n, k)
    for d in enumerate_dfas(SearchSpec(n, k, offset=offset, stride=stride)):
        try:
            sc = pruned_pipeline(d, cap).state_count
        except StateCapExceeded:
            sc = None
        res.add(d, sc)
    return offset, res.to_json()


def max_sc_search(spec: SearchSpec, checkpoint: str | None = None) -> SearchResult:
    """Exhaustive max of sc(L+c+) over the slice ``spec`` of the DFA space.

    The slice is cut into ``SLICES`` sub-slices that are the unit of work and of
    checkpointing; the merge is order independent, so the result does not
    depend on ``jobs``.  ``checkpoint`` names a file of completed sub-slice ids
    (one per line); their partial results live in ``<checkpoint>.parts``.
    """
    parts: dict[int, SearchResult] = {}
    if checkpoint and os.path.exists(checkpoint):
        with open(checkpoint) as fh:
            done = {int(line) for line in fh if line.strip()}
        if os.path.exists(checkpoint + ".parts"):
            with open(checkpoint + ".parts") as fh:
                for line in fh:
                    sid, _, payload = line.partition(" ")
                    if int(sid) in done:
                        parts[int(sid)] = SearchResult.from_json(payload)

    stride = spec.stride * SLICES
    todo = [(spec.n, spec.k, spec.offset + spec.stride * i, stride, spec.cap)
            for i in range(SLICES) if i not in parts]

    def record(sid: int, payload: str):
        parts[sid] = SearchResult.from_json(payload)
        if checkpoint:
            with open(checkpoint + ".parts", "a") as fh:
                fh.write(f"{sid} {payload}\n")
            with open(checkpoint, "a") as fh:
                fh.write(f"{sid}\n")

    to_sid = {args[2]: (args[2] - spec.offset) // spec.stride for args in todo}
    if spec.jobs <= 1:
        for args in todo:
            offset, payload = _search_slice(args)
            record(to_sid[offset], payload)
    else:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            for offset, payload in pool.map(_search_slice, todo):
                record(to_sid[offset], payload)

    result = SearchResult(spec.n, spec.k)
    for sid in sorted(parts):
        result = result.merge(parts[sid])
    return result
