"""H2 of small connected quandles, computed from the chain complex and, when
As(Q, rho) is finite, from the stabilizer formula at every basepoint.

    python3 scripts/h2_table.py --max-size 5
"""

import argparse
from dataclasses import dataclass

from symquandle.homology import h2_chain, h2_crosscheck
from symquandle.quandle import enumerate_quandles, is_connected
from symquandle.symmetric import enumerate_good_involutions


@dataclass
class H2Config:
    max_size: int = 5
    bound: int = 10_000


def rows(cfg):
    for n in range(1, cfg.max_size + 1):
        for q in enumerate_quandles(n, limit=max(5, cfg.max_size)):
            if not is_connected(q):
                continue
            chain = h2_chain(q)
            invs = enumerate_good_involutions(q)
            if not invs:
                yield n, q.table, str(chain), "-", "no good involution"
                continue
            for rho in invs:
                cc = h2_crosscheck(q, rho, cfg.bound)
                group = "Unknown" if cc.agree is None else str(next(iter(cc.group.values())))
                yield n, q.table, str(chain), list(rho.images), group


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-size", type=int, default=H2Config.max_size)
    ap.add_argument("--bound", type=int, default=H2Config.bound)
    args = ap.parse_args()
    for n, table, chain, rho, group in rows(H2Config(args.max_size, args.bound)):
        print(f"n={n}  {table}  rho={rho}  chain: {chain or '0'}  group formula: {group or '0'}")


if __name__ == "__main__":
    main()
