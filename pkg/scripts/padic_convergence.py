"""Agreeing p-adic digits between level-N Riemann sums and their limits.

    python scripts/padic_convergence.py --p 5 --u 2 --nmax 4 --levels 1 5
"""

from __future__ import annotations

import argparse
from dataclasses import asdict, dataclass

from feuler import padic as pa


@dataclass
class ConvergenceConfig:
    p: int = 5
    u: int = 2
    nmax: int = 4
    rmax: int = 2
    levels: tuple[int, int] = (1, 5)


def run(cfg: ConvergenceConfig) -> dict:
    lo, hi = cfg.levels
    out: dict = {"config": asdict(cfg), "rows": []}
    for r in range(1, cfg.rmax + 1):
        for n in range(cfg.nmax + 1):
            row = {"r": r, "n": n, "witt": [], "multi": [], "restricted": [], "zeta": []}
            for N in range(lo, hi + 1):
                u = pa.padic_unit(cfg.u, cfg.p, pa.guard_precision(N, n))
                row["witt"].append(pa.witt_check(n, r, u, N).agree_digits)
                lim = pa.padic_eval(pa.multi_moment_exact(n, r, 0, (1,) * r), u)
                row["multi"].append(pa.agree_digits(pa.multi_moment(n, r, 0, (1,) * r, u, N), lim))
                lim = pa.padic_eval(pa.restricted_moment_exact(n, r, cfg.p), u)
                row["restricted"].append(pa.agree_digits(pa.restricted_moment(n, r, u, N), lim))
                row["zeta"].append(pa.agree_digits(pa.padic_zeta_negk(n, r, u),
                                                   pa.padic_zeta_negk_truncated(n, r, u, N)))
            out["rows"].append(row)
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--u", type=int, default=2)
    ap.add_argument("--nmax", type=int, default=4)
    ap.add_argument("--rmax", type=int, default=2)
    ap.add_argument("--levels", type=int, nargs=2, default=(1, 5))
    args = ap.parse_args()
    cfg = ConvergenceConfig(args.p, args.u, args.nmax, args.rmax, tuple(args.levels))
    res = run(cfg)
    for row in res["rows"]:
        print(f"r={row['r']} n={row['n']}  witt={row['witt']}  multi={row['multi']}  "
              f"restricted={row['restricted']}  zeta={row['zeta']}")


if __name__ == "__main__":
    main()
