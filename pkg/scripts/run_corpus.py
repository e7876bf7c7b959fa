"""Sweep every quandle up to a given order and tabulate the theorem checks.

    python3 scripts/run_corpus.py --max-size 5
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from symquandle.corpus import run_corpus


@dataclass
class CorpusConfig:
    max_size: int = 4
    bound: int = 10_000          # coset budget for As(Q, rho)
    finite_bound: int = 10**5    # coset budget for the As(Q, id) finiteness check


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, value in asdict(CorpusConfig()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=int, default=value)
    ap.add_argument("--json", action="store_true", help="dump the full summary")
    args = ap.parse_args()
    cfg = CorpusConfig(args.max_size, args.bound, args.finite_bound)

    t = time.perf_counter()
    out = run_corpus(cfg.max_size, cfg.bound, cfg.finite_bound)
    if args.json:
        print(json.dumps(out, indent=2, sort_keys=True))
        return
    print(f"quandles per order: {out['quandles_per_order']}   (Q, rho) pairs: {out['pairs']}")
    print(f"{'check':<24}{'pass':>7}{'fail':>7}{'skipped':>9}")
    for name, c in out["checks"].items():
        print(f"{name:<24}{c['pass']:>7}{c['fail']:>7}{c['skipped']:>9}")
    print(f"theorem violations: {out['theorem_violations']}   ({time.perf_counter() - t:.2f}s)")


if __name__ == "__main__":
    main()
