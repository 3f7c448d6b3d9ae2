"""Run every machine check for k = 1..6 and print a one-line verdict per (check, k).

    python scripts/run_theorem_checks.py --out results/checks
"""

import argparse
import json
import time
from pathlib import Path

from weakperiodic.verifier import (
    MAX_K,
    check_corollary,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    lemma1_census,
)


def run(k, radius):
    sections = {
        "lemma1": [lemma1_census(k).to_json()],
        "theorem1": [c.to_json() for c in check_theorem1(k, radius)] if k <= 4 else [],
        "theorem2": [r.to_json() for r in check_theorem2(k, radius)],
        "theorem3": [r.to_json() for r in check_theorem3(k, radius)],
    }
    if k % 2 == 0:
        sections["corollary"] = [r.to_json() for r in check_corollary(k, radius)]
    return sections


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kmax", type=int, default=MAX_K)
    ap.add_argument("--radius", type=int, default=6)
    ap.add_argument("--out", type=Path, help="directory for per-k JSON reports")
    args = ap.parse_args()

    for k in range(1, args.kmax + 1):
        t0 = time.perf_counter()
        sections = run(k, args.radius)
        dt = time.perf_counter() - t0
        for name, items in sections.items():
            if not items:
                continue
            bad = [item for item in items if not item["agrees"]]
            verdict = "agrees" if not bad else f"DISAGREES in {len(bad)}/{len(items)}"
            print(f"k={k} {name:<9} {verdict}")
            for item in bad:
                params = item.get("parameters", {"i": item.get("i")})
                extra = item.get("strictly_weak_periodic_members", item.get("intruders"))
                print(f"      {params} -> {extra}")
                for note in item.get("notes", []):
                    print(f"      note: {note}")
        print(f"k={k} done in {dt:.1f}s")
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            (args.out / f"checks_k{k}.json").write_text(json.dumps(sections, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
