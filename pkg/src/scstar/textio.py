"""Line-oriented text format for DFAs/NFAs, and Graphviz export.

Format (``#`` starts a comment)::

    states 3
    alphabet a b
    initial 0
    final 1 2
    0 a 1
    ...

For NFAs several ``q s q'`` lines may share ``(q, s)`` and the symbol
``eps`` denotes an empty-word move.
"""
from __future__ import annotations

from typing import Sequence

from .automata import EPS, Dfa, EpsNfa, members
from .errors import InputError


def _directives(text: str):
    header = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        key = line[0]
        if key in ("states", "alphabet", "initial", "final"):
            if key in header:
                raise InputError(f"line {lineno}: duplicate {key!r} directive")
            header[key] = (lineno, line[1:])
        elif len(line) == 3:
            edges.append((lineno, line))
        else:
            raise InputError(f"line {lineno}: cannot parse {raw.strip()!r}")
    for key in ("states", "alphabet", "initial"):
        if key not in header:
            raise InputError(f"missing {key!r} directive")
    header.setdefault("final", (0, []))
    return header, edges


def _int(lineno, tok, n=None):
    try:
        v = int(tok)
    except ValueError:
        raise InputError(f"line {lineno}: expected a state id, got {tok!r}") from None
    if v < 0 or (n is not None and v >= n):
        raise InputError(f"line {lineno}: state {v} out of range")
    return v


def _header(header):
    lineno, args = header["states"]
    if len(args) != 1:
        raise InputError(f"line {lineno}: 'states' takes one argument")
    n = _int(lineno, args[0])
    if n < 1:
        raise InputError(f"line {lineno}: need at least one state")
    alphabet = tuple(header["alphabet"][1])
    if EPS in alphabet:
        raise InputError(f"line {header['alphabet'][0]}: {EPS!r} is reserved")
    lineno, args = header["initial"]
    if len(args) != 1:
        raise InputError(f"line {lineno}: 'initial' takes one argument")
    initial = _int(lineno, args[0], n)
    lineno, args = header["final"]
    finals = {_int(lineno, t, n) for t in args}
    return n, alphabet, initial, finals


def parse_dfa(text: str) -> Dfa:
    header, edges = _directives(text)
    n, alphabet, initial, finals = _header(header)
    index = {s: i for i, s in enumerate(alphabet)}
    table: dict[tuple[int, int], int] = {}
    for lineno, (q, s, t) in edges:
        if s not in index:
            raise InputError(f"line {lineno}: unknown symbol {s!r}")
        key = (_int(lineno, q, n), index[s])
        if key in table:
            raise InputError(f"line {lineno}: duplicate transition for ({q}, {s})")
        table[key] = _int(lineno, t, n)
    for q in range(n):
        for s, a in index.items():
            if (q, a) not in table:
                raise InputError(f"missing transition for ({q}, {s})")
    delta = [[table[q, a] for a in range(len(alphabet))] for q in range(n)]
    return Dfa(n, alphabet, initial, finals, delta)


def parse_nfa(text: str) -> EpsNfa:
    header, edges = _directives(text)
    n, alphabet, initial, finals = _header(header)
    index = {s: i for i, s in enumerate(alphabet)}
    moves: dict[tuple[int, int], set[int]] = {}
    eps: dict[int, set[int]] = {}
    for lineno, (q, s, t) in edges:
        q, t = _int(lineno, q, n), _int(lineno, t, n)
        if s == EPS:
            eps.setdefault(q, set()).add(t)
        elif s in index:
            moves.setdefault((q, index[s]), set()).add(t)
        else:
            raise InputError(f"line {lineno}: unknown symbol {s!r}")
    return EpsNfa(n, alphabet, initial, finals,
                  {k: frozenset(v) for k, v in moves.items()},
                  {k: frozenset(v) for k, v in eps.items()})


def _header_lines(n, alphabet, initial, finals, comment=None):
    lines = [f"# {comment}"] if comment else []
    lines += [f"states {n}", "alphabet " + " ".join(alphabet), f"initial {initial}",
              " ".join(["final", *map(str, sorted(finals))])]
    return lines


def format_dfa(d: Dfa, comment: str | None = None) -> str:
    lines = _header_lines(d.state_count, d.alphabet, d.initial, d.finals, comment)
    for q, row in enumerate(d.delta):
        for s, t in zip(d.alphabet, row):
            lines.append(f"{q} {s} {t}")
    return "\n".join(lines) + "\n"


def format_nfa(n: EpsNfa, comment: str | None = None) -> str:
    lines = _header_lines(n.state_count, n.alphabet, n.initial, n.finals, comment)
    for q in range(n.state_count):
        for a, s in enumerate(n.alphabet):
            for t in sorted(n.moves.get((q, a), ())):
                lines.append(f"{q} {s} {t}")
        for t in sorted(n.eps.get(q, ())):
            lines.append(f"{q} {EPS} {t}")
    return "\n".join(lines) + "\n"


def antichain_label(sets: Sequence[int], sep: str = "") -> str:
    """``{0,1}{2}`` style label; ``sep="|"`` gives the DOT form ``{0,1|2}``."""
    inner = [",".join(map(str, members(x))) for x in sets]
    if sep:
        return "{" + sep.join(inner) + "}"
    return "".join("{" + s + "}" for s in inner)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', r'\"') + '"'


def to_dot(automaton: Dfa | EpsNfa, labels: Sequence[str] | None = None, name: str = "A") -> str:
    """Graphviz source with nodes in id order and edges grouped per target."""
    out = [f"digraph {_quote(name)} {{", "  rankdir=LR;", '  __start [shape=point];']
    for q in range(automaton.state_count):
        shape = "doublecircle" if q in automaton.finals else "circle"
        label = labels[q] if labels is not None else str(q)
        out.append(f"  {q} [shape={shape}, label={_quote(label)}];")
    out.append(f"  __start -> {automaton.initial};")
    edges: dict[tuple[int, int], list[str]] = {}
    if isinstance(automaton, Dfa):
        for q, row in enumerate(automaton.delta):
            for s, t in zip(automaton.alphabet, row):
                edges.setdefault((q, t), []).append(s)
    else:
        for q in range(automaton.state_count):
            for a, s in enumerate(automaton.alphabet):
                for t in automaton.moves.get((q, a), ()):
                    edges.setdefault((q, t), []).append(s)
            for t in automaton.eps.get(q, ()):
                edges.setdefault((q, t), []).append("ε")
    for (q, t) in sorted(edges):
        out.append(f"  {q} -> {t} [label={_quote(','.join(edges[q, t]))}];")
    out.append("}")
    return "\n".join(out) + "\n"
