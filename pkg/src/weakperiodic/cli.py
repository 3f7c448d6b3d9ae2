"""Command-line front end.

Exit codes: 0 on success (and, for ``check``, full agreement), 1 when a
theorem check disagrees, 2 on usage errors.  Rationals are given as integers
or ``p/q``; write negative fractions as ``--j1=-1/2``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .configurations import classify_periodicity, rule_by_label, rule_from_json, rule_to_json
from .energy import Coupling, as_fraction
from .group_core import SubgroupSpec
from .phase_regions import classify, ground_state_descriptor
from .plotting import phase_grid, phase_svg
from .verifier import (
    DEFAULT_RADIUS,
    MAX_K,
    MIN_RADIUS,
    check_corollary,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    enumerate_ground_states,
    lemma1_census,
    verify,
)


class UsageError(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r} (use p/q)") from exc


def parse_set(text: str) -> frozenset[int]:
    try:
        A = frozenset(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"--set expects comma-separated integers, got {text!r}") from exc
    if not A:
        raise argparse.ArgumentTypeError("--set must name at least one generator")
    return A


@dataclass
class RunConfig:
    command: str
    k: int
    A: frozenset[int] | None
    J1: Fraction
    J2: Fraction
    radius: int
    index: int
    format: str
    out: str | None
    seed: int

    @property
    def coupling(self) -> Coupling:
        return Coupling(self.J1, self.J2)

    def subgroup(self) -> SubgroupSpec:
        A = self.A if self.A is not None else frozenset({1})
        try:
            if self.index == 2:
                return SubgroupSpec.index_two(A, self.k)
            return SubgroupSpec.index_four(A, self.k)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc

    def validate(self) -> None:
        if self.k < 1:
            raise UsageError("--k must be >= 1")
        if self.radius < MIN_RADIUS:
            raise UsageError(f"--radius must be >= {MIN_RADIUS}")
        if self.A is not None and not self.A <= set(range(1, self.k + 2)):
            raise UsageError(f"--set must be a subset of 1..{self.k + 1}")


def _dump(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _coupling_json(J: Coupling) -> list[str]:
    return [str(J.J1), str(J.J2)]


def cmd_classify(cfg: RunConfig) -> tuple[int, str]:
    J = cfg.coupling
    label = classify(J, cfg.k)
    out = {
        "k": cfg.k,
        "J": _coupling_json(J),
        "region": label.to_json(),
        "ground_states": ground_state_descriptor(J, cfg.k).to_json(),
    }
    return 0, _dump(out)


def _rule_entry(rep) -> dict[str, Any]:
    return {
        "rule": rule_to_json(rep.rule),
        "periodicity": classify_periodicity(rep.rule).value,
        "report": rep.to_json(),
    }


def cmd_enumerate(cfg: RunConfig) -> tuple[int, str]:
    s = cfg.subgroup()
    found = enumerate_ground_states(cfg.index, s.A, cfg.k, cfg.coupling, cfg.radius)
    return 0, _dump([_rule_entry(rep) for _, rep in found])


def cmd_verify(cfg: RunConfig, rule_label: str | None, rule_file: str | None) -> tuple[int, str]:
    if rule_file:
        try:
            rule = rule_from_json(json.loads(Path(rule_file).read_text()))
        except (OSError, KeyError, ValueError) as exc:
            raise UsageError(f"cannot read rule from {rule_file}: {exc}") from exc
    else:
        s = cfg.subgroup()
        try:
            rule = rule_by_label(rule_label or "phi_1", s.A, cfg.k, cfg.index)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if rule.subgroup.index != cfg.index:
            raise UsageError(f"rule {rule_label} is not an index-{cfg.index} rule")
    return 0, _dump(_rule_entry(verify(rule, cfg.coupling, cfg.radius)))


def cmd_census(cfg: RunConfig) -> tuple[int, str]:
    if cfg.k > MAX_K:
        raise UsageError(f"census supports k <= {MAX_K}")
    rep = lemma1_census(cfg.k, seed=cfg.seed)
    return (0 if rep.agrees else 1), _dump(rep.to_json())


def cmd_check(cfg: RunConfig) -> tuple[int, str]:
    if cfg.k > MAX_K:
        raise UsageError(f"check supports k <= {MAX_K}")
    k, n = cfg.k, cfg.radius
    sections: dict[str, list[dict[str, Any]]] = {
        "lemma1": [lemma1_census(k, seed=cfg.seed).to_json()],
        "theorem1": [r.to_json() for r in check_theorem1(k, n)],
        "theorem2": [r.to_json() for r in check_theorem2(k, n)],
        "theorem3": [r.to_json() for r in check_theorem3(k, n)],
    }
    if k % 2 == 0:
        sections["corollary"] = [r.to_json() for r in check_corollary(k, n)]
    summary = {name: all(item["agrees"] for item in items) for name, items in sections.items()}
    all_agree = all(summary.values())
    out = {"k": k, "radius": n, "summary": summary, "all_agree": all_agree, "details": sections}
    return (0 if all_agree else 1), _dump(out)


def cmd_phase_grid(cfg: RunConfig, lo: Fraction, hi: Fraction, step: Fraction) -> tuple[int, str]:
    if step <= 0:
        raise UsageError("--step must be positive")
    if hi < lo:
        raise UsageError("--hi must not be below --lo")
    rows = phase_grid(cfg.k, lo, hi, step)
    if cfg.format == "svg":
        return 0, phase_svg(cfg.k, rows, lo, hi, step)
    if cfg.format == "json":
        return 0, _dump([row.to_json() for row in rows])
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["J1", "J2", "members", "detail"])
    for row in rows:
        d = row.to_json()
        writer.writerow([d["J1"], d["J2"], ";".join(map(str, d["members"])), d["detail"]])
    return 0, buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weakperiodic",
        description="Exact ground states of the competing-interaction Ising model on the Cayley tree.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, required=True, help="tree order")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--seed", type=int, default=0)

    coupling = argparse.ArgumentParser(add_help=False)
    coupling.add_argument("--j1", type=parse_rational, default=Fraction(0))
    coupling.add_argument("--j2", type=parse_rational, default=Fraction(0))

    rules = argparse.ArgumentParser(add_help=False)
    rules.add_argument("--set", dest="A", type=parse_set, help="generator set A, e.g. 1,2")
    rules.add_argument("--index", type=int, choices=(2, 4), default=2)
    rules.add_argument("--radius", type=int, default=DEFAULT_RADIUS)

    sub.add_parser("classify", parents=[common, coupling], help="region and ground-state set of J")
    sub.add_parser("enumerate", parents=[common, coupling, rules], help="all weak-periodic ground states")
    p_verify = sub.add_parser("verify", parents=[common, coupling, rules], help="check one rule")
    p_verify.add_argument("--rule", help="phi_1..phi_8, phi_prime, phi_double_prime, g4[...]; prefix - to negate")
    p_verify.add_argument("--rule-file", help="JSON rule table")
    p_check = sub.add_parser("check", parents=[common], help="machine-check the lemma, theorems and corollary")
    p_check.add_argument("--radius", type=int, default=DEFAULT_RADIUS)
    sub.add_parser("census", parents=[common], help="ball-class census")
    p_grid = sub.add_parser("phase-grid", parents=[common], help="phase diagram over a rational grid")
    p_grid.add_argument("--lo", type=parse_rational, default=Fraction(-2))
    p_grid.add_argument("--hi", type=parse_rational, default=Fraction(2))
    p_grid.add_argument("--step", type=parse_rational, default=Fraction(1, 2))
    p_grid.add_argument("--format", choices=("csv", "svg", "json"), default="csv")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        k=args.k,
        A=getattr(args, "A", None),
        J1=getattr(args, "j1", Fraction(0)),
        J2=getattr(args, "j2", Fraction(0)),
        radius=getattr(args, "radius", DEFAULT_RADIUS),
        index=getattr(args, "index", 2),
        format=getattr(args, "format", "json"),
        out=args.out,
        seed=args.seed,
    )
    try:
        cfg.validate()
        if cfg.command == "classify":
            code, text = cmd_classify(cfg)
        elif cfg.command == "enumerate":
            code, text = cmd_enumerate(cfg)
        elif cfg.command == "verify":
            code, text = cmd_verify(cfg, args.rule, args.rule_file)
        elif cfg.command == "check":
            code, text = cmd_check(cfg)
        elif cfg.command == "census":
            code, text = cmd_census(cfg)
        else:
            code, text = cmd_phase_grid(cfg, args.lo, args.hi, args.step)
    except UsageError as exc:
        parser.error(str(exc))
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
