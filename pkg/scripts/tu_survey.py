#!/usr/bin/env python3
"""Survey total-unimodularity verdicts across the named fixtures, comparing
the chordless-circuit search against brute submatrix determinants.

Usage: python scripts/tu_survey.py [--p 2]
"""
import argparse
import time

from plink import fixtures
from plink.homology import boundary_matrix
from plink.tugraph import is_totally_unimodular


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, default=2)
    args = ap.parse_args()

    print(f"{'fixture':18s} {'shape':>9s} {'circuit':>8s} {'det':>6s} "
          f"{'t_circ':>8s} {'t_det':>8s}")
    for name in fixtures.FIXTURE_NAMES:
        cx = fixtures.generate(name)
        if args.p > cx.dim:
            continue
        bm = boundary_matrix(cx, args.p)
        t0 = time.time()
        circ = is_totally_unimodular(bm, strategy="circuit")
        t1 = time.time()
        # submatrix enumeration is combinatorial; skip it on wide matrices
        if min(bm.shape) <= 6:
            det = is_totally_unimodular(bm, strategy="determinant")
            det_status, t_det = str(det.status), f"{time.time() - t1:7.3f}s"
            assert circ.status == det.status or None in (circ.status,
                                                         det.status)
        else:
            det_status, t_det = "-", "-"
        print(f"{name:18s} {str(bm.shape):>9s} {str(circ.status):>8s} "
              f"{det_status:>6s} {t1 - t0:7.3f}s {t_det:>8s}")


if __name__ == "__main__":
    main()
