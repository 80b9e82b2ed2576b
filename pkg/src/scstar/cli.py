"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 state cap exceeded.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import bounds
from .automata import set_label
from .errors import InputError, StateCapExceeded
from .oracle import SearchSpec, max_sc_search
from .pipeline import ORBIT_NAMES, orbit, plus_complement_plus, run_pruned, star_complement_star
from .textio import antichain_label, format_dfa, format_nfa, parse_dfa, to_dot
from .witnesses import (KINDS, family_states, reach_string, separating_string, witness)


def _read_dfa(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_dfa(text)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def _table(rows, csv: bool) -> str:
    if csv:
        return "\n".join(",".join(str(c) for c in row) for row in rows)
    width = max(len(str(k)) for k, _ in rows)
    return "\n".join(f"{str(k) + ':':>{width + 1}} {v}" for k, v in rows)


def _emit_stages(report, out_dir: str) -> None:
    os.makedirs(out_dir, exist_ok=True)
    st = report.stages

    def write(name, text):
        with open(os.path.join(out_dir, name), "w") as fh:
            fh.write(text)

    for name in ("N1", "N3"):
        write(f"{name}.nfa", format_nfa(st[name], comment=name))
        write(f"{name}.dot", to_dot(st[name], name=name))
    for name in ("D1", "D2"):
        d, labels = st[name]
        text_labels = [set_label(x) for x in labels]
        write(f"{name}.dfa", format_dfa(d, comment=name))
        write(f"{name}.dot", to_dot(d, text_labels, name=name))
        write(f"{name}.labels", "".join(f"{i} {lab}\n" for i, lab in enumerate(text_labels)))
    d3, labels = st["D3"]
    write("D3.dfa", format_dfa(d3, comment="D3 (antichain-pruned)"))
    write("D3.dot", to_dot(d3, [antichain_label(s, "|") for s in labels], name="D3"))
    write("D3.labels", "".join(f"{i} {antichain_label(s)}\n" for i, s in enumerate(labels)))
    write("D3min.dfa", format_dfa(st["D3min"], comment="D3min"))
    write("D3min.dot", to_dot(st["D3min"], name="D3min"))


def cmd_pipeline(args) -> int:
    d = _read_dfa(args.file)
    run = star_complement_star if args.variant == "star" else plus_complement_plus
    report = run(d, args.cap)
    print(_table(report.rows(), args.csv))
    if args.emit_stages:
        _emit_stages(report, args.emit_stages)
    if args.dot:
        print(to_dot(report.result, name="D3min"), end="")
    return 0


def cmd_witness(args) -> int:
    try:
        d = witness(args.family, args.n)
    except InputError as exc:
        raise InputError(f"{exc}; the distinguishability construction requires n >= 5") from None
    text = format_dfa(d, comment=f"{args.family} witness, n={args.n}")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    summary = f"alphabet: {' '.join(d.alphabet)}  finals: {' '.join(map(str, sorted(d.finals)))}"
    print(summary, file=sys.stderr if not args.out else sys.stdout)

    if args.report == "reach":
        comb = witness("combined", args.n)
        for fs in family_states(args.n):
            w = reach_string(args.n, fs)
            ok = run_pruned(comb, w)[0] == fs.antichain()
            print(f"{antichain_label(fs.antichain())} {w} {'ok' if ok else 'fail'}")
    elif args.report == "separate":
        comb = witness("combined", args.n)
        cycle = [x for x in range(2, args.n - 1)]
        full = sum(1 << x for x in cycle)
        for t in range(full + 1):
            if t & ~full:
                continue
            w = separating_string(args.n, t)
            ok = all(run_pruned(comb, w, start=(1 | sub,))[1] == (sub & t == sub)
                     for sub in range(full + 1) if not sub & ~full)
            print(f"{set_label(t)} {w} {'ok' if ok else 'fail'}")
    return 0


def cmd_bounds(args) -> int:
    rows = bounds.bound_table(args.max_n)
    if args.csv:
        print(",".join(bounds.COLUMNS))
        for r in rows:
            print(",".join(r.fields()))
        return 0
    cells = [list(bounds.COLUMNS)] + [r.fields() for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(bounds.COLUMNS))]
    for row in cells:
        print("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    return 0


def cmd_search(args) -> int:
    spec = SearchSpec(args.n, args.k, jobs=args.jobs, cap=args.cap)
    res = max_sc_search(spec, checkpoint=args.resume)
    rows = [("n", res.n), ("k", res.k), ("dfas", res.count), ("max_sc", res.max_sc),
            ("argmax", res.argmax), ("upper_count", bounds.upper_count(res.n)),
            ("capped", res.capped)]
    rows += [(f"sc={sc}", c) for sc, c in sorted(res.histogram.items())]
    print(_table(rows, args.csv))
    if not res.valid:
        print("result invalid: some runs hit the state cap; raise SCS_STATE_CAP", file=sys.stderr)
        return 3
    return 0


def cmd_verify(args) -> int:
    from .verify import run_suites

    print(f"# verify n_max={args.n_max} samples={args.samples} seed={args.seed} prng=mt19937")
    results = run_suites(args.n_max, args.samples, args.seed)
    for r in results:
        print(r.line())
    return 0 if all(r.passed for r in results) else 1


def cmd_orbit(args) -> int:
    d = _read_dfa(args.file)
    o = orbit(d, args.cap)
    rows = list(zip(ORBIT_NAMES, o.sizes))
    print(_table(rows, args.csv))
    if not args.csv:
        print("complements have the same sizes")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="scstar", description="State complexity of star-complement-star.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("pipeline", help="run L -> L+c+ (or L*c*) on a DFA file")
    s.add_argument("file")
    s.add_argument("--variant", choices=("plus", "star"), default="plus")
    s.add_argument("--emit-stages", metavar="DIR")
    s.add_argument("--dot", action="store_true", help="print the minimal result as DOT")
    s.add_argument("--cap", type=int)
    s.add_argument("--csv", action="store_true")
    s.set_defaults(func=cmd_pipeline)

    s = sub.add_parser("witness", help="write a witness DFA")
    s.add_argument("family", choices=sorted(KINDS))
    s.add_argument("n", type=int)
    s.add_argument("--out")
    s.add_argument("--report", choices=("reach", "separate"),
                   help="also list family states with reach strings, or separating strings")
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("bounds", help="print the bound table")
    s.add_argument("--max-n", type=int, default=12)
    s.add_argument("--csv", action="store_true")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("search", help="exhaustive max sc(L+c+) over all n-state k-letter DFAs")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--resume", metavar="FILE")
    s.add_argument("--cap", type=int)
    s.add_argument("--csv", action="store_true")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("verify", help="run the verification suites")
    s.add_argument("--n-max", type=int, default=5)
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--seed", type=int, default=7)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("orbit", help="sizes of L, L+, Lc+, L+c+, Lc+c+")
    s.add_argument("file")
    s.add_argument("--cap", type=int)
    s.add_argument("--csv", action="store_true")
    s.set_defaults(func=cmd_orbit)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for flag in ("n_max", "samples", "max_n", "jobs"):
        if getattr(args, flag, 1) is not None and getattr(args, flag, 1) < 0:
            parser.error(f"--{flag.replace('_', '-')} must be non-negative")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StateCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
