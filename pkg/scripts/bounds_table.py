"""Bound table with the asymptotic ratio, to more rows than the CLI default."""
import argparse

from scstar.bounds import COLUMNS, bound_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=12)
    args = ap.parse_args()
    print(",".join(COLUMNS))
    for row in bound_table(args.max_n):
        print(",".join(row.fields()))


if __name__ == "__main__":
    main()
