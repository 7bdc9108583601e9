#!/usr/bin/env python3
"""Show the LP/ILP gap on the twisted-band instance and how one gated
contraction closes it.

Usage: python scripts/contraction_gain_demo.py
"""
from fractions import Fraction

from plink.complexes import contract_edge, push_chain
from plink.fixtures import (MOBIUS_OHCP_CONTRACT_EDGE, mobius_ohcp_instance)
from plink.homology import boundary_matrix
from plink.ohcp import OHCPInstance, solve_ohcp_ilp, solve_ohcp_lp
from plink.tugraph import is_totally_unimodular


def show(tag, sol):
    kinds = sorted({str(Fraction(v)) for v in sol.chain.values()})
    print(f"  {tag}: objective {sol.objective}  "
          f"({len(sol.chain)} edges, coefficients {{{', '.join(kinds)}}})")


def main():
    inst = mobius_ohcp_instance()
    cx = inst.complex
    print("weighted Moebius band, input = oriented core cycle")
    print(f"  [d_2] totally unimodular: "
          f"{is_totally_unimodular(boundary_matrix(cx, 2)).status}")
    show("LP ", solve_ohcp_lp(inst))
    show("ILP", solve_ohcp_ilp(inst))

    e = MOBIUS_OHCP_CONTRACT_EDGE
    print(f"\ncontracting edge {e} "
          f"(1-link condition: {cx.satisfies_p_link(e, 1)})")
    ct = contract_edge(cx, e)
    inst2 = OHCPInstance(complex=ct.target, p=1,
                         chain=push_chain(ct, inst.chain))
    print(f"  [d_2] totally unimodular: "
          f"{is_totally_unimodular(boundary_matrix(ct.target, 2)).status}")
    show("LP ", solve_ohcp_lp(inst2))
    show("ILP", solve_ohcp_ilp(inst2))


if __name__ == "__main__":
    main()
