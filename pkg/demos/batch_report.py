"""Color a batch of random 4-regular graphs and tabulate what each one needed.

Run: python3 demos/batch_report.py [--n 16 64 128] [--seeds 0-4]
"""

import argparse

from aec.cli import RunReport, color_instance, parse_seeds
from aec.generator import random_regular


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, nargs="+", default=[16, 64, 128])
    ap.add_argument("--seeds", default="0-4")
    args = ap.parse_args()
    print("\t".join(RunReport.COLUMNS))
    for n in args.n:
        for seed in parse_seeds(args.seeds):
            G = random_regular(n, seed=seed)
            _, report, _ = color_instance(G, seed=seed, name=f"rr-n{n}-s{seed}")
            print(report.row())


if __name__ == "__main__":
    main()
