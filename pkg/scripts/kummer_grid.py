"""Kummer-type congruences over a grid of instances satisfying p >= 2r+1.

For each instance, n runs over 1..p-1 with gcd(n, p-1) = 1 and
m = n + p^(N+1)(p-1); prints the difference valuation and T_l valuations.

    python scripts/kummer_grid.py --primes 5 7 --rmax 2 --json grid.json
"""

from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass, field
from math import gcd

from feuler import kummer as km


@dataclass
class GridConfig:
    primes: list[int] = field(default_factory=lambda: [5, 7])
    rmax: int = 2
    alphas: list[int] = field(default_factory=lambda: [0, 1, 2])
    weights: list[tuple[int, ...]] = field(default_factory=lambda: [(1,), (2,), (1, 1), (1, 2), (1, 3)])
    u: int = 2
    N: int = 0


def run(cfg: GridConfig) -> list[dict]:
    rows = []
    for p in cfg.primes:
        for k in cfg.weights:
            r = len(k)
            if r > cfg.rmax or p < 2 * r + 1 or any(x % p == 0 for x in k):
                continue
            for alpha in cfg.alphas:
                for n in range(1, p):
                    m = n + p ** (cfg.N + 1) * (p - 1)
                    if gcd(m, p - 1) != 1:
                        continue
                    inst = km.KummerInstance.make(p, r, alpha, k, u=cfg.u, N=cfg.N, n=n, m=m)
                    diff = km.phi_padic(inst, n) - km.phi_padic(inst, m)
                    rows.append({
                        "p": p, "k": list(k), "alpha": alpha, "n": n, "m": m,
                        "diff_valuation": diff.valuation(),
                        "pass": km.check_congruence(inst),
                        "t_valuations": km.t_valuations(inst, n),
                    })
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[5, 7])
    ap.add_argument("--rmax", type=int, default=2)
    ap.add_argument("--u", type=int, default=2)
    ap.add_argument("--N", type=int, default=0)
    ap.add_argument("--json", help="also write rows to this file")
    args = ap.parse_args()
    cfg = GridConfig(primes=args.primes, rmax=args.rmax, u=args.u, N=args.N)
    rows = run(cfg)
    for row in rows:
        print(f"{'PASS' if row['pass'] else 'FAIL'} p={row['p']} k={row['k']} alpha={row['alpha']} "
              f"n={row['n']} m={row['m']} v(diff)={row['diff_valuation']} T_v={row['t_valuations']}")
    print(f"{sum(r['pass'] for r in rows)}/{len(rows)} instances pass")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
