"""Exploratory runs with p < 2r+1, outside the hypotheses of the integrality
and congruence statements.  Outcomes are recorded, not asserted.

    python scripts/below_bound.py
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from feuler import kummer as km
from feuler.errors import NotIntegralError
from feuler.padic import padic_eval


@dataclass
class ExploreConfig:
    cases: list[tuple[int, tuple[int, ...], int]] = field(default_factory=lambda: [
        (3, (1, 1), 0), (3, (1, 1), 1), (3, (1, 2), 1), (5, (1, 1, 1), 0), (5, (1, 2, 3), 1),
        (3, (1, 1, 1), 0),
    ])
    u: int = 2
    nmax: int = 5


def run(cfg: ExploreConfig) -> list[dict]:
    rows = []
    for p, k, alpha in cfg.cases:
        inst = km.KummerInstance.make(p, len(k), alpha, k, u=cfg.u, precision=12)
        for n in range(cfg.nmax + 1):
            try:
                v = padic_eval(km.phi_expression(inst, n), inst.u).valuation()
            except NotIntegralError:
                v = None
            m = n + p * (p - 1)
            cong = (km.phi_padic(inst, n) - km.phi_padic(inst, m)).valuation() if n else None
            rows.append({"p": p, "k": k, "alpha": alpha, "n": n,
                         "integral": km.check_integrality(inst, n, enforce_bound=False),
                         "valuation": v, "cong_valuation": cong})
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=5)
    ap.add_argument("--u", type=int, default=2)
    args = ap.parse_args()
    for row in run(ExploreConfig(u=args.u, nmax=args.nmax)):
        print(f"p={row['p']} k={row['k']} alpha={row['alpha']} n={row['n']}: "
              f"integral={row['integral']} v(Phi_n)={row['valuation']} "
              f"v(Phi_n - Phi_(n+p(p-1)))={row['cong_valuation']}")


if __name__ == "__main__":
    main()
