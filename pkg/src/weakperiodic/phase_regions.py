"""Exact phase regions of the (J1, J2) plane.

Region ``A_m`` is where ball level ``m`` has the lowest energy.  Membership is
computed from the closed-form wedge inequalities and, independently, as the
argmin of the level energies; the two must agree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .energy import Coupling, _coupling, min_level_set

ORIGIN = "origin"
INTERIOR = "interior"
BOUNDARY = "boundary"
ANTIPODAL = "antipodal"


class RegionInconsistency(RuntimeError):
    """The inequality and argmin computations of region membership disagree."""


@dataclass(frozen=True)
class RegionLabel:
    members: frozenset[int]
    kind: str
    index: int | None = None

    @property
    def detail(self) -> str:
        if self.kind == INTERIOR:
            return f"InteriorOf({self.index})"
        if self.kind == BOUNDARY:
            return f"BoundarySegment({self.index})"
        if self.kind == ANTIPODAL:
            return "AntipodalBoundary"
        return "Origin"

    def to_json(self) -> dict:
        return {"members": sorted(self.members), "detail": self.detail}


@dataclass(frozen=True)
class GroundStateDescriptor:
    case: str
    index: int | None = None

    @property
    def name(self) -> str:
        if self.case in ("Pair", "BoundaryFamily"):
            return f"{self.case}({self.index})"
        return self.case

    @property
    def periodic_states(self) -> list[str]:
        if self.case == "Pair":
            return [f"sigma_{self.index}", f"-sigma_{self.index}"]
        if self.case == "BoundaryFamily":
            i = self.index
            return [f"sigma_{i}", f"-sigma_{i}", f"sigma_{i + 1}", f"-sigma_{i + 1}"]
        if self.case == "AntipodalQuadruple":
            return ["sigma_0", "-sigma_0", "sigma_k+1", "-sigma_k+1"]
        return []

    def to_json(self) -> dict:
        out = {"case": self.name, "periodic_states": self.periodic_states}
        if self.case == "BoundaryFamily":
            out["non_periodic_family"] = f"S_{self.index}"
        if self.case == "AllConfigs":
            out["ground_states"] = "all configurations"
        return out


def _in_wedge(m: int, k: int, J: Coupling) -> bool:
    J1, J2 = J.J1, J.J2
    if m == 0:
        return J1 <= 0 and J1 + 2 * k * J2 <= 0
    if m == k + 1:
        return J1 >= 0 and J1 - 2 * k * J2 >= 0
    return J2 >= 0 and 2 * (2 * m - k - 2) * J2 <= J1 <= 2 * (2 * m - k) * J2


def members_by_inequalities(J, k: int) -> frozenset[int]:
    J = _coupling(J)
    return frozenset(m for m in range(k + 2) if _in_wedge(m, k, J))


def _detail(members: frozenset[int], k: int, J: Coupling) -> tuple[str, int | None]:
    if J.is_origin:
        if members != frozenset(range(k + 2)):
            raise RegionInconsistency(f"origin must lie in every region, got {sorted(members)}")
        return ORIGIN, None
    if len(members) == 1:
        return INTERIOR, next(iter(members))
    if len(members) == 2:
        lo, hi = sorted(members)
        if hi == lo + 1:
            return BOUNDARY, lo
        if (lo, hi) == (0, k + 1):
            return ANTIPODAL, None
    raise RegionInconsistency(f"non-adjacent region overlap {sorted(members)} at {J}")


def classify(J, k: int) -> RegionLabel:
    J = _coupling(J)
    by_ineq = members_by_inequalities(J, k)
    by_argmin = min_level_set(k, J)
    if by_ineq != by_argmin:
        raise RegionInconsistency(
            f"k={k}, J={J}: inequalities give {sorted(by_ineq)}, argmin gives {sorted(by_argmin)}"
        )
    kind, index = _detail(by_ineq, k, J)
    return RegionLabel(by_ineq, kind, index)


def ground_state_descriptor(J, k: int) -> GroundStateDescriptor:
    label = classify(J, k)
    if label.kind == ORIGIN:
        return GroundStateDescriptor("AllConfigs")
    if label.kind == INTERIOR:
        return GroundStateDescriptor("Pair", label.index)
    if label.kind == BOUNDARY:
        return GroundStateDescriptor("BoundaryFamily", label.index)
    return GroundStateDescriptor("AntipodalQuadruple")


def boundary_slope(i: int, k: int) -> int:
    """B_i lies on J1 = slope * J2 with J2 >= 0."""
    return 2 * (2 * i - k)


@dataclass(frozen=True)
class IntersectionCase:
    i: int
    j: int
    case: str  # "adjacent", "origin" or "antipodal"
    slope: int | None = None

    def contains(self, J: Coupling) -> bool:
        if self.case == "origin":
            return J.is_origin
        if self.case == "antipodal":
            return J.J1 == 0 and J.J2 <= 0
        return J.J1 == self.slope * J.J2 and J.J2 >= 0

    def describe(self) -> str:
        if self.case == "origin":
            return "{(0, 0)}"
        if self.case == "antipodal":
            return "J1 = 0, J2 <= 0"
        return f"J1 = {self.slope} * J2, J2 >= 0"


def intersection_case(i: int, j: int, k: int) -> IntersectionCase:
    if i == j or not (0 <= i <= k + 1 and 0 <= j <= k + 1):
        raise ValueError(f"need distinct region indices in 0..{k + 1}, got {i}, {j}")
    lo, hi = sorted((i, j))
    if hi - lo == k + 1:
        return IntersectionCase(lo, hi, "antipodal")
    if hi - lo == 1:
        return IntersectionCase(lo, hi, "adjacent", boundary_slope(lo, k))
    return IntersectionCase(lo, hi, "origin")


def _rand_fraction(rng: random.Random, lo: int = 1, hi: int = 9) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 9))


def on_set_points(case: IntersectionCase, count: int, rng: random.Random) -> list[Coupling]:
    if case.case == "origin":
        return [Coupling(0, 0)] * count
    pts = []
    for _ in range(count):
        t = _rand_fraction(rng)
        if case.case == "antipodal":
            pts.append(Coupling(0, -t))
        else:
            pts.append(Coupling(case.slope * t, t))
    return pts


def off_set_points(case: IntersectionCase, count: int, rng: random.Random) -> list[Coupling]:
    """Points near, but not on, the claimed set: nudged off the line or onto its mirror ray."""
    pts = []
    while len(pts) < count:
        t = _rand_fraction(rng)
        eps = Fraction(rng.choice((-1, 1)), rng.randint(1, 50))
        if case.case == "origin":
            J = Coupling(rng.randint(-9, 9) * t, rng.randint(-9, 9) * t)
        elif case.case == "antipodal":
            J = rng.choice((Coupling(eps, -t), Coupling(0, t)))
        else:
            J = rng.choice((Coupling(case.slope * t + eps, t), Coupling(-case.slope * t, -t)))
        if not case.contains(J):
            pts.append(J)
    return pts


@dataclass(frozen=True)
class IntersectionCheck:
    case: IntersectionCase
    on_set: int
    off_set: int
    failures: tuple[Coupling, ...]

    @property
    def validated(self) -> bool:
        return not self.failures


def intersection_check(i: int, j: int, k: int, samples: int = 20, seed: int = 0) -> IntersectionCheck:
    """Claimed shape of A_i meet A_j, tested on exact points on and off that set."""
    case = intersection_case(i, j, k)
    rng = random.Random(seed)
    failures = []
    for J in on_set_points(case, samples, rng):
        if not {i, j} <= classify(J, k).members:
            failures.append(J)
    for J in off_set_points(case, samples, rng):
        if {i, j} <= classify(J, k).members:
            failures.append(J)
    return IntersectionCheck(case, samples, samples, tuple(failures))


def _integer_points() -> Iterator[Coupling]:
    r = 0
    while True:
        r += 1
        for a in range(-r, r + 1):
            for b in range(-r, r + 1):
                if max(abs(a), abs(b)) == r:
                    yield Coupling(a, b)


def interior_points(m: int, k: int, count: int = 5) -> list[Coupling]:
    """The first ``count`` integer points, by sup-norm then lexicographic order, inside the open region m."""
    if not 0 <= m <= k + 1:
        raise ValueError(f"region index must lie in 0..{k + 1}")
    pts = []
    for J in _integer_points():
        label = classify(J, k)
        if label.kind == INTERIOR and label.index == m:
            pts.append(J)
            if len(pts) == count:
                return pts
    raise AssertionError("unreachable")


def random_coupling(rng: random.Random, num: int = 12, den: int = 6) -> Coupling:
    return Coupling(
        Fraction(rng.randint(-num, num), rng.randint(1, den)),
        Fraction(rng.randint(-num, num), rng.randint(1, den)),
    )
