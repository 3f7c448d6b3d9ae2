"""Write the phase diagram of each k as CSV and SVG.

    python scripts/phase_diagram.py --k 1 2 3 --out results/phase
"""

import argparse
import csv
from fractions import Fraction
from pathlib import Path

from weakperiodic.plotting import phase_grid, phase_svg


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, nargs="+", default=[1, 2, 3, 4])
    ap.add_argument("--lo", type=Fraction, default=Fraction(-4))
    ap.add_argument("--hi", type=Fraction, default=Fraction(4))
    ap.add_argument("--step", type=Fraction, default=Fraction(1, 4))
    ap.add_argument("--out", type=Path, default=Path("results/phase"))
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    for k in args.k:
        rows = phase_grid(k, args.lo, args.hi, args.step)
        with open(args.out / f"phase_k{k}.csv", "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["J1", "J2", "members", "detail"])
            for r in rows:
                d = r.to_json()
                w.writerow([d["J1"], d["J2"], ";".join(map(str, d["members"])), d["detail"]])
        (args.out / f"phase_k{k}.svg").write_text(phase_svg(k, rows, args.lo, args.hi, args.step))
        interior = sum(1 for r in rows if r.label.kind == "interior")
        print(f"k={k}: {len(rows)} grid points, {interior} interior, written to {args.out}")


if __name__ == "__main__":
    main()
