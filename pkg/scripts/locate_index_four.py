"""Scan the boundary rays B_0..B_k and report where each named index-4 rule is a ground state.

Useful for seeing that phi'' at |A| = (k+1)/2 sits on a different ray than phi'.

    python scripts/locate_index_four.py --k 3 5
"""

import argparse

from weakperiodic.configurations import phi_double_prime, phi_prime
from weakperiodic.energy import Coupling
from weakperiodic.phase_regions import boundary_slope
from weakperiodic.verifier import verify


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, nargs="+", default=[1, 3, 5])
    ap.add_argument("--radius", type=int, default=6)
    args = ap.parse_args()

    for k in args.k:
        for size in range(1, k + 1):
            A = range(1, size + 1)
            for make in (phi_prime, phi_double_prime):
                rule = make(A, k)
                rays = [
                    f"B_{i}"
                    for i in range(k + 1)
                    if verify(rule, Coupling(boundary_slope(i, k), 1), args.radius).is_ground_state
                ]
                classes = sorted(verify(rule, Coupling(0, 0), args.radius).class_set)
                print(f"k={k} |A|={size} {rule.label:<17} classes={classes} ground state on: {rays or '-'}")


if __name__ == "__main__":
    main()
