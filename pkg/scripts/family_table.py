#!/usr/bin/env python3
"""Tabulate χ, χ̃, det Z̄ and charpoly(Z̄) over the standard poset families."""

import argparse
from dataclasses import dataclass

from ordercomplement import incidence as inc
from ordercomplement import linalg as la
from ordercomplement import poset as ps


@dataclass
class TableConfig:
    max_n: int = 8
    max_boolean: int = 4
    divisors: tuple = (6, 12, 30, 36, 60, 210)


def rows(cfg):
    for n in range(1, cfg.max_n + 1):
        yield f"chain:{n}", ps.chain(n)
    for n in range(1, cfg.max_n + 1):
        yield f"antichain:{n}", ps.antichain(n)
    for k in range(cfg.max_boolean + 1):
        yield f"boolean:{k}", ps.boolean_lattice(k)
    for m in cfg.divisors:
        yield f"divisor:{m}", ps.divisor_poset(m)
    # boolean lattice with top and bottom removed: order complex of the proper part is a sphere
    for k in range(2, cfg.max_boolean + 1):
        b = ps.boolean_lattice(k)
        proper = ps.remove_element(ps.remove_element(b, b.n - 1), 0)
        yield f"boolean:{k} proper part", proper


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=TableConfig.max_n)
    ap.add_argument("--max-boolean", type=int, default=TableConfig.max_boolean)
    args = ap.parse_args()
    cfg = TableConfig(max_n=args.max_n, max_boolean=args.max_boolean)

    print(f"{'poset':<24} {'n':>3} {'χ':>4} {'χ̃':>4} {'det Z̄':>7}  theorem  charpoly(Z̄)")
    for name, p in rows(cfg):
        chi = inc.euler_char_chains(p)
        det = inc.det_complement_direct(p)
        cp = la.charpoly(inc.complement_matrix(p))
        agree = det == inc.det_complement_via_theorem(p) and cp == inc.charpoly_formula(p)
        print(f"{name:<24} {p.n:>3} {chi:>4} {chi - 1:>4} {det:>7}  {'ok' if agree else 'FAIL':<7}  {la.render_poly(cp)}")


if __name__ == "__main__":
    main()
