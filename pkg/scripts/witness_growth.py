"""State counts of the combined witness's plus-complement-plus as n grows.

Prints, per n: family size, D3 (pruned) states, minimal states, f(n) and the
constructive lower count. The pruned determinization grows about tenfold per
step: n = 9 takes a few seconds, n = 10 under a minute.
"""
import argparse
import time
from dataclasses import dataclass

from scstar import bounds
from scstar.pipeline import plus_complement_plus
from scstar.witnesses import family_states, witness


@dataclass(frozen=True)
class GrowthConfig:
    n_min: int = 5
    n_max: int = 7
    cap: int | None = None


def run(cfg: GrowthConfig) -> list[tuple]:
    rows = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        start = time.perf_counter()
        rep = plus_complement_plus(witness("combined", n), cfg.cap, check_form=False)
        family = sum(1 for _ in family_states(n))
        rows.append((n, family, rep.d3_states, rep.d3min_states, bounds.upper_count(n),
                     bounds.lower_count(n), round(time.perf_counter() - start, 2)))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=5)
    ap.add_argument("--n-max", type=int, default=7)
    ap.add_argument("--cap", type=int)
    args = ap.parse_args()
    print("n,family,D3,D3min,f(n),lower,seconds")
    for row in run(GrowthConfig(args.n_min, args.n_max, args.cap)):
        print(",".join(map(str, row)), flush=True)


if __name__ == "__main__":
    main()
