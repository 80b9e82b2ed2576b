"""Exhaustive max-sc sweep over small (n, k), with f(n) alongside for scale."""
import argparse
import time

from scstar.bounds import upper_count
from scstar.oracle import SearchSpec, max_sc_search


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--k-max", type=int, default=2)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    print("n,k,dfas,max_sc,f(n),argmax,histogram,seconds")
    for n in range(1, args.n_max + 1):
        for k in range(1, args.k_max + 1):
            start = time.perf_counter()
            res = max_sc_search(SearchSpec(n, k, jobs=args.jobs))
            hist = " ".join(f"{sc}:{c}" for sc, c in sorted(res.histogram.items()))
            print(f"{n},{k},{res.count},{res.max_sc},{upper_count(n)},{res.argmax},{hist},"
                  f"{time.perf_counter() - start:.1f}", flush=True)


if __name__ == "__main__":
    main()
