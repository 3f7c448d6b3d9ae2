"""Brute-force ground-state checks of weak-periodic rules on finite balls V_n.

A rule is a ground state at J when every unit ball lies in a minimal-energy
level class.  Only balls centred at depth 2..n-1 are inspected: those are
complete and every vertex in them has a parent, so the verdict never
depends on how the root's spin is chosen.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable

import numpy as np

from .configurations import (
    Periodicity,
    SpinConfigView,
    WeakPeriodicRule,
    catalog_index2,
    catalog_index4,
    classify_periodicity,
    index_two_rule,
    periodic_sigma,
    rule_by_label,
)
from .energy import (
    Coupling,
    _coupling,
    ball_energy,
    class_census_size,
    class_of,
    iter_ball_configs,
    level_energy,
    min_level_set,
)
from .group_core import tree_layout
from .phase_regions import boundary_slope, interior_points

DEFAULT_RADIUS = 6
MIN_RADIUS = 4
MAX_K = 6
CRITICAL_POINT = Coupling(2, 1)

CaseTriple = tuple[int, int, int]


@dataclass
class VerificationReport:
    rule: WeakPeriodicRule
    coupling: Coupling
    is_ground_state: bool
    classes_seen: Counter
    case_coverage: frozenset[CaseTriple]
    radius_used: int
    minimal_levels: frozenset[int]
    witness: dict[str, Any] | None = None

    @property
    def class_set(self) -> frozenset[int]:
        return frozenset(self.classes_seen)

    def to_json(self) -> dict[str, Any]:
        return {
            "rule": self.rule.label,
            "J": [str(self.coupling.J1), str(self.coupling.J2)],
            "is_ground_state": self.is_ground_state,
            "classes_seen": {str(c): n for c, n in sorted(self.classes_seen.items())},
            "case_coverage": [list(t) for t in sorted(self.case_coverage)],
            "radius_used": self.radius_used,
            "minimal_levels": sorted(self.minimal_levels),
            "witness": self.witness,
        }


@dataclass(frozen=True)
class _Sweep:
    centres: np.ndarray
    class_counts: dict[int, int]
    coverage: frozenset[CaseTriple]
    first_centre: dict[int, int]


@lru_cache(maxsize=8192)
def _ball_sweep(rule: WeakPeriodicRule, n: int) -> _Sweep:
    """Ball class of every checkable centre of V_n; independent of the coupling."""
    layout = tree_layout(rule.k, n)
    spins = SpinConfigView(rule).spins(layout)
    cls = layout.classes(rule.subgroup)
    par = layout.parent
    child = np.arange(1, layout.size)
    differs = (spins[child] != spins[par[child]]).astype(np.int64)
    # each bond counts once for the child's ball and once for the parent's ball
    opposite = np.bincount(par[child], weights=differs, minlength=layout.size).astype(np.int64)
    opposite[child] += differs
    centres = np.nonzero((layout.depth >= 2) & (layout.depth <= n - 1))[0]
    ball_cls = opposite[centres]
    values, first, counts = np.unique(ball_cls, return_index=True, return_counts=True)
    triples = np.stack([cls[par[centres]], cls[centres], spins[par[centres]]], axis=1)
    coverage = frozenset(tuple(int(v) for v in row) for row in np.unique(triples, axis=0))
    return _Sweep(
        centres=centres,
        class_counts={int(c): int(m) for c, m in zip(values, counts)},
        coverage=coverage,
        first_centre={int(c): int(centres[f]) for c, f in zip(values, first)},
    )


def verify(rule: WeakPeriodicRule, J, n: int = DEFAULT_RADIUS) -> VerificationReport:
    if n < MIN_RADIUS:
        raise ValueError(f"radius {n} too small: need n >= {MIN_RADIUS} for a checkable ball")
    J = _coupling(J)
    k = rule.k
    sweep = _ball_sweep(rule, n)
    minimal = min_level_set(k, J)
    bad = [c for c in sweep.class_counts if c not in minimal]
    witness = None
    if bad:
        # earliest offending centre in breadth-first order
        v, c = min((sweep.first_centre[c], c) for c in bad)
        witness = {
            "center": str(tree_layout(k, n).word(v)),
            "class": c,
            "energy": str(level_energy(k, c, J)),
        }
    return VerificationReport(
        rule, J, not bad, Counter(sweep.class_counts), sweep.coverage, n, minimal, witness
    )


def enumerate_ground_states(
    index: int, A: Iterable[int], k: int, J, n: int = DEFAULT_RADIUS
) -> list[tuple[str, VerificationReport]]:
    """Run :func:`verify` over every rule of the given index; keep the ground states."""
    A = frozenset(A)
    if index == 2:
        rules = catalog_index2(A, k)
    elif index == 4:
        rules = catalog_index4(A, k)
    else:
        raise ValueError(f"index must be 2 or 4, got {index}")
    reports = [verify(rule, J, n) for rule in rules]
    return [(r.rule.label, r) for r in reports if r.is_ground_state]


def same_configuration(r1: WeakPeriodicRule, r2: WeakPeriodicRule, n: int = DEFAULT_RADIUS) -> bool:
    """Whether two rules give identical spins on every non-root vertex of V_n."""
    layout = tree_layout(r1.k, n)
    s1 = SpinConfigView(r1).spins(layout)
    s2 = SpinConfigView(r2).spins(layout)
    return bool(np.array_equal(s1[1:], s2[1:]))


@dataclass
class TheoremReport:
    theorem: str
    k: int
    size_A: int
    coupling: Coupling
    predicted: frozenset[str]
    observed: list[str]
    strictly_weak_periodic_members: list[str]
    agrees: bool
    periodic_members: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "parameters": {
                "k": self.k,
                "size_A": self.size_A,
                "J": [str(self.coupling.J1), str(self.coupling.J2)],
            },
            "predicted": sorted(self.predicted),
            "observed": self.observed,
            "strictly_weak_periodic_members": self.strictly_weak_periodic_members,
            "periodic_members": self.periodic_members,
            "agrees": self.agrees,
            "notes": self.notes,
        }


def _split(found: list[tuple[str, VerificationReport]]):
    strict, periodic = [], []
    for label, rep in found:
        if classify_periodicity(rep.rule) is Periodicity.STRICTLY_WEAK_PERIODIC:
            strict.append(label)
        else:
            periodic.append(label)
    return strict, periodic


def _is_critical(i: int, k: int) -> bool:
    return 2 * i == k + 1


def check_theorem2(k: int, n: int = DEFAULT_RADIUS, J=CRITICAL_POINT) -> list[TheoremReport]:
    """Index-2 rules at J: strictly weak-periodic ground states are exactly +/-phi_8 iff 2|A| = k+1."""
    if not 1 <= k <= MAX_K:
        raise ValueError(f"k must lie in 1..{MAX_K}")
    J = _coupling(J)
    out = []
    for i in range(1, k + 2):
        found = enumerate_ground_states(2, range(1, i + 1), k, J, n)
        strict, periodic = _split(found)
        predicted = frozenset({"phi_8", "-phi_8"}) if _is_critical(i, k) else frozenset()
        notes = []
        # periodic index-2 rules are functions of the vertex class alone, i.e. +/-phi_1, +/-phi_7
        reference = [index_two_rule(m, range(1, i + 1), k, s) for m in (1, 7) for s in (1, -1)]
        for label, rep in found:
            if label in periodic and not any(same_configuration(rep.rule, r, n) for r in reference):
                notes.append(f"{label} is periodic but differs from +/-phi_1, +/-phi_7")
        agrees = frozenset(strict) == predicted and not notes
        out.append(
            TheoremReport("theorem2", k, i, J, predicted, [l for l, _ in found], strict, agrees, periodic, notes)
        )
    return out


def check_theorem3(k: int, n: int = DEFAULT_RADIUS, J=CRITICAL_POINT) -> list[TheoremReport]:
    """Index-4 rules at J: strictly weak-periodic ground states are +/-phi', +/-phi'' iff 2|A| = k+1."""
    if not 1 <= k <= MAX_K:
        raise ValueError(f"k must lie in 1..{MAX_K}")
    J = _coupling(J)
    out = []
    for i in range(1, k + 1):
        found = enumerate_ground_states(4, range(1, i + 1), k, J, n)
        strict, periodic = _split(found)
        if _is_critical(i, k):
            predicted = frozenset({"phi_prime", "-phi_prime", "phi_double_prime", "-phi_double_prime"})
        else:
            predicted = frozenset()
        agrees = frozenset(strict) == predicted
        notes = [_locate(label, i, k, n) for label in sorted(predicted - set(strict))]
        out.append(
            TheoremReport("theorem3", k, i, J, predicted, [l for l, _ in found], strict, agrees, periodic, notes)
        )
    return out


def _locate(label: str, i: int, k: int, n: int) -> str:
    """Where on the boundary rays a predicted-but-missing index-4 rule is a ground state."""
    rule = rule_by_label(label, range(1, i + 1), k, index=4)
    hits = [
        f"B_{b} (J = ({boundary_slope(b, k)}, 1))"
        for b in range(k + 1)
        if verify(rule, Coupling(boundary_slope(b, k), 1), n).is_ground_state
    ]
    classes = sorted(verify(rule, CRITICAL_POINT, n).class_set)
    where = ", ".join(hits) if hits else "no boundary ray"
    return f"{label} not a ground state here (ball classes {classes}); ground state on {where}"


def check_corollary(k: int, n: int = DEFAULT_RADIUS) -> list[TheoremReport]:
    """For even k no index-2 ground state on any boundary ray B_i is strictly weak-periodic."""
    out = []
    for b in range(k + 1):
        J = Coupling(boundary_slope(b, k), 1)
        for i in range(1, k + 2):
            found = enumerate_ground_states(2, range(1, i + 1), k, J, n)
            strict, periodic = _split(found)
            agrees = not strict if k % 2 == 0 else True
            out.append(
                TheoremReport("corollary", k, i, J, frozenset(), [l for l, _ in found], strict, agrees, periodic)
            )
    return out


@dataclass
class Theorem1Check:
    k: int
    i: int
    interior: list[Coupling]
    holds_inside: bool
    fails_elsewhere: bool
    intruders: list[str]

    @property
    def agrees(self) -> bool:
        return self.holds_inside and self.fails_elsewhere and not self.intruders

    def to_json(self) -> dict[str, Any]:
        return {
            "theorem": "theorem1",
            "k": self.k,
            "i": self.i,
            "interior_points": [[str(J.J1), str(J.J2)] for J in self.interior],
            "holds_inside": self.holds_inside,
            "fails_elsewhere": self.fails_elsewhere,
            "intruders": self.intruders,
            "agrees": self.agrees,
        }


def check_theorem1(k: int, n: int = DEFAULT_RADIUS, points: int = 5) -> list[Theorem1Check]:
    """sigma_i is a ground state exactly on the open region of level i; no other index-2 rule over {1..i} is."""
    regions = {m: interior_points(m, k, points) for m in range(k + 2)}
    out = []
    for i in range(k + 2):
        sigma = periodic_sigma(i, k)
        inside = all(verify(sigma, J, n).is_ground_state for J in regions[i])
        elsewhere = not any(
            verify(sigma, J, n).is_ground_state for m, pts in regions.items() if m != i for J in pts
        )
        A = range(1, max(i, 1) + 1)
        intruders = set()
        for rule in catalog_index2(A, k):
            if same_configuration(rule, sigma, n) or same_configuration(-rule, sigma, n):
                continue
            if any(verify(rule, J, n).is_ground_state for J in regions[i]):
                intruders.add(rule.label)
        out.append(Theorem1Check(k, i, regions[i], inside, elsewhere, sorted(intruders)))
    return out


@dataclass
class CensusReport:
    k: int
    counts: list[int]
    formula: list[int]
    energy_mismatches: list[str]

    @property
    def agrees(self) -> bool:
        return self.counts == self.formula and sum(self.counts) == 2 ** (self.k + 2) and not self.energy_mismatches

    def to_json(self) -> dict[str, Any]:
        return {
            "theorem": "lemma1",
            "k": self.k,
            "counts": self.counts,
            "formula": self.formula,
            "total": sum(self.counts),
            "energy_mismatches": self.energy_mismatches,
            "agrees": self.agrees,
        }


def lemma1_census(k: int, seed: int = 0, points: int = 5) -> CensusReport:
    """Count ball configurations per level class and compare energies with the closed form."""
    if not 1 <= k <= MAX_K:
        raise ValueError(f"k must lie in 1..{MAX_K}")
    rng = random.Random(seed)
    couplings = [Coupling(1, 0), Coupling(0, 1)] + [
        Coupling(Fraction(rng.randint(-20, 20), rng.randint(1, 12)), Fraction(rng.randint(-20, 20), rng.randint(1, 12)))
        for _ in range(points)
    ]
    counts = [0] * (k + 2)
    mismatches = []
    for b in iter_ball_configs(k):
        c = class_of(b)
        counts[c] += 1
        for J in couplings:
            if ball_energy(b, J) != level_energy(k, c, J):
                mismatches.append(f"{b} at {J}")
    formula = [class_census_size(k, i) for i in range(k + 2)]
    return CensusReport(k, counts, formula, mismatches)


def _ball_class(center: int, leaves: list[int]) -> int:
    return sum(1 for v in leaves if v != center)


def case_table(rule: WeakPeriodicRule) -> frozenset[tuple[int, int, int, int]]:
    """Ball classes the rule produces, derived symbolically from its sign table.

    A centre at depth >= 2 is reached from its grandparent by two distinct
    generators; only their membership in A matters.  Each realisable choice
    gives a tuple (parent class, centre class, parent spin, ball class).
    """
    s = rule.subgroup
    table = rule.table
    avail = s.letter_type_counts()
    out = set()
    for c in range(s.n_classes):
        for last_in_A in (True, False):
            for prev_in_A in (True, False):
                if avail[last_in_A] < 1 or avail[prev_in_A] < 1:
                    continue
                # the two letters are distinct generators
                if last_in_A == prev_in_A and avail[last_in_A] < 2:
                    continue
                j = s.step(c, last_in_A)
                g = s.step(j, prev_in_A)
                centre = table[(j, c)]
                parent_spin = table[(g, j)]
                leaves = [parent_spin]
                for t in (True, False):
                    n_kids = avail[t] - (1 if t == last_in_A else 0)
                    leaves += [table[(c, s.step(c, t))]] * n_kids
                out.add((j, c, parent_spin, _ball_class(centre, leaves)))
    return frozenset(out)


def case_classes(rule: WeakPeriodicRule) -> frozenset[int]:
    return frozenset(t[3] for t in case_table(rule))


def case_coverage_predicted(rule: WeakPeriodicRule) -> frozenset[CaseTriple]:
    return frozenset(t[:3] for t in case_table(rule))


def proof_case_classes(label: str, i: int, k: int) -> frozenset[int]:
    """Ball classes listed in the case-by-case proofs.

    The proofs count by ``i`` the neighbours that stay in the centre's coset,
    i.e. generators outside A, so pass ``i = k + 1 - |A|``.  The phi_8 and
    phi' lists are symmetric under that exchange.
    """
    base = label.lstrip("-")
    if base in ("phi_8", "phi_prime"):
        return frozenset({i, i + 1, k + 1 - i, k + 2 - i})
    if base == "phi_3":
        return frozenset({k + 1 - i, k - i, k + 1, 1, 0})
    if base == "phi_2":
        return frozenset({k + 2 - i, k + 1 - i, i, 1, 0})
    if base == "phi_1":
        return frozenset({0})
    raise ValueError(f"no proof case list for {label!r}")

