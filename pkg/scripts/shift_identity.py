"""Both exponents in zeta_r(u|s, r) = u^e zeta_r(u|s): e = -r and e = +r,
with the ratio of the two sides and the certified error bound.

    python scripts/shift_identity.py --M 60
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from feuler import zeta as z


@dataclass
class ShiftConfig:
    M: int = 60
    rmax: int = 3
    us: tuple[float, ...] = (2.0, 3.0, -2.0, 1.5)
    ss: tuple[float, ...] = (2.0, 3.0, 1.5)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--M", type=int, default=60)
    ap.add_argument("--rmax", type=int, default=3)
    args = ap.parse_args()
    cfg = ShiftConfig(M=args.M, rmax=args.rmax)
    print(f"{'r':>2} {'u':>5} {'s':>4} {'lhs':>22} {'ratio lhs/zeta':>22} {'u^-r ok':>8} {'u^r ok':>7}")
    for r in range(1, cfg.rmax + 1):
        for u in cfg.us:
            for s in cfg.ss:
                M = cfg.M if abs(u) >= 2 else 2 * cfg.M
                lhs, base, _ = z.lemma2_sides(s, u, r, M, exponent=0)
                print(f"{r:>2} {u:>5} {s:>4} {lhs:>22.17g} {lhs / base:>22.17g} "
                      f"{z.check_lemma2(s, u, r, M)!s:>8} {z.check_lemma2(s, u, r, M, exponent=r)!s:>7}")


if __name__ == "__main__":
    main()
