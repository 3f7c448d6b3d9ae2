"""Exact energies: unit balls, the k+2 ball levels, relative and finite-volume Hamiltonians.

Every coupling and energy is a ``Fraction``; floats are refused so that ties
on boundary lines are decided exactly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterator, Mapping

from .configurations import SpinConfigView, evaluate
from .group_core import GroupWord, enumerate_ball, neighbors, successors

Spins = Mapping[GroupWord, int]


def as_fraction(value) -> Fraction:
    """Exact rational from int, Fraction or a ``"p/q"`` / integer string."""
    if isinstance(value, bool):
        raise TypeError("booleans are not couplings")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"expected an integer or p/q rational, got {value!r}")
        return Fraction(text)
    raise TypeError(f"refusing inexact coupling {value!r} of type {type(value).__name__}")


@dataclass(frozen=True)
class Coupling:
    J1: Fraction
    J2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "J1", as_fraction(self.J1))
        object.__setattr__(self, "J2", as_fraction(self.J2))

    def scaled(self, lam) -> Coupling:
        lam = as_fraction(lam)
        return Coupling(self.J1 * lam, self.J2 * lam)

    @property
    def is_origin(self) -> bool:
        return self.J1 == 0 and self.J2 == 0

    def __iter__(self):
        return iter((self.J1, self.J2))

    def __str__(self) -> str:
        return f"({self.J1}, {self.J2})"


def _coupling(J) -> Coupling:
    return J if isinstance(J, Coupling) else Coupling(*J)


@dataclass(frozen=True)
class BallConfig:
    center_spin: int
    neighbor_spins: tuple[int, ...]

    def __post_init__(self):
        spins = tuple(int(v) for v in self.neighbor_spins)
        if any(v not in (-1, 1) for v in spins) or self.center_spin not in (-1, 1):
            raise ValueError("spins must be +1 or -1")
        if len(spins) < 2:
            raise ValueError("a unit ball has k+1 >= 2 leaves")
        object.__setattr__(self, "neighbor_spins", spins)

    @property
    def k(self) -> int:
        return len(self.neighbor_spins) - 1

    def __neg__(self) -> BallConfig:
        return BallConfig(-self.center_spin, tuple(-v for v in self.neighbor_spins))


def ball_energy(b: BallConfig, J) -> Fraction:
    """Half the centre-leaf bond sum times J1 plus the leaf-pair sum times J2."""
    J = _coupling(J)
    edges = b.center_spin * sum(b.neighbor_spins)
    pairs = sum(y * z for y, z in itertools.combinations(b.neighbor_spins, 2))
    return J.J1 * edges / 2 + J.J2 * pairs


def class_of(b: BallConfig) -> int:
    """Number of leaves whose spin differs from the centre."""
    return sum(1 for v in b.neighbor_spins if v != b.center_spin)


def level_energy(k: int, i: int, J) -> Fraction:
    if not 0 <= i <= k + 1:
        raise ValueError(f"level i must lie in 0..{k + 1}, got {i}")
    J = _coupling(J)
    return (Fraction(k + 1, 2) - i) * J.J1 + (Fraction(k * (k + 1), 2) + 2 * i * (i - k - 1)) * J.J2


def level_energies(k: int, J) -> list[Fraction]:
    return [level_energy(k, i, J) for i in range(k + 2)]


def min_level_set(k: int, J) -> frozenset[int]:
    levels = level_energies(k, J)
    low = min(levels)
    return frozenset(i for i, u in enumerate(levels) if u == low)


def class_census_size(k: int, i: int) -> int:
    """Closed-form size of level class i: twice the binomial C(k+1, i)."""
    return 2 * math.comb(k + 1, i)


def iter_ball_configs(k: int) -> Iterator[BallConfig]:
    for center in (1, -1):
        for leaves in itertools.product((1, -1), repeat=k + 1):
            yield BallConfig(center, leaves)


def ball_at(spins: Spins, x: GroupWord) -> BallConfig:
    return BallConfig(spins[x], tuple(spins[y] for y in neighbors(x)))


def _distance_two(x: GroupWord) -> Iterator[GroupWord]:
    for y in neighbors(x):
        for z in neighbors(y):
            if z != x:
                yield z


def relative_hamiltonian(sigma: Spins, phi: Spins, J, n: int) -> Fraction:
    """H(sigma, phi) for two assignments on V_n that differ only well inside V_n.

    Only bonds and distance-2 pairs touching the difference set contribute.
    The difference set must lie in V_{n-2} so no such term leaves V_n.
    """
    J = _coupling(J)
    diff = [x for x in phi if sigma[x] != phi[x]]
    for x in diff:
        if len(x) > n - 2:
            raise ValueError(f"vertex {x} differs within two steps of the boundary of V_{n}")
    bonds: set[frozenset[GroupWord]] = set()
    pairs: set[frozenset[GroupWord]] = set()
    for x in diff:
        bonds.update(frozenset((x, y)) for y in neighbors(x))
        pairs.update(frozenset((x, z)) for z in _distance_two(x))

    def delta(pair):
        y, z = tuple(pair)
        return sigma[y] * sigma[z] - phi[y] * phi[z]

    return J.J1 * sum(map(delta, bonds)) + J.J2 * sum(map(delta, pairs))


def configuration_energy(spins: Spins, k: int, n: int, J) -> Fraction:
    """Free-boundary energy of an assignment on V_n: every bond and distance-2 pair inside V_n."""
    J = _coupling(J)
    bond_sum = 0
    pair_sum = 0
    for x in enumerate_ball(k, n):
        if len(x) == n:
            continue
        kids = successors(x)
        s = spins[x]
        bond_sum += sum(s * spins[y] for y in kids)
        # distance-2 pairs: grandchildren of x, and pairs of siblings below x
        if len(x) <= n - 2:
            pair_sum += sum(s * spins[z] for y in kids for z in successors(y))
        pair_sum += sum(spins[y] * spins[z] for y, z in itertools.combinations(kids, 2))
    return J.J1 * bond_sum + J.J2 * pair_sum


def finite_volume_energy(view: SpinConfigView, n: int, J) -> Fraction:
    """Energy on V_n of the configuration a view defines."""
    if n < 1:
        raise ValueError("radius must be >= 1")
    k = view.rule.k
    spins = {x: evaluate(view, x) for x in enumerate_ball(k, n)}
    return configuration_energy(spins, k, n, J)
