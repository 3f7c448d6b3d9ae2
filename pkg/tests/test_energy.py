import itertools
import math
import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from weakperiodic.configurations import SpinConfigView, catalog_index2, evaluate, index_two_rule, phi_prime
from weakperiodic.energy import (
    BallConfig,
    Coupling,
    as_fraction,
    ball_at,
    ball_energy,
    class_census_size,
    class_of,
    configuration_energy,
    finite_volume_energy,
    iter_ball_configs,
    level_energies,
    level_energy,
    min_level_set,
    relative_hamiltonian,
)
from weakperiodic.group_core import GroupWord, enumerate_ball

from oracles import naive_energy, naive_levels

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
couplings = st.builds(Coupling, rationals, rationals)


def test_ball_energy_examples():
    J = Coupling(1, 0)
    assert ball_energy(BallConfig(1, (1, 1)), J) == 1
    assert ball_energy(BallConfig(1, (-1, -1)), J) == -1
    assert ball_energy(BallConfig(1, (1, -1, 1)), Coupling(0, 1)) == -1


def test_level_energy_examples():
    assert level_energy(1, 0, Coupling(1, 0)) == 1
    assert level_energy(2, 3, Coupling(0, 1)) == 3
    assert level_energy(2, 1, Coupling(0, 1)) == -1
    with pytest.raises(ValueError):
        level_energy(2, 4, Coupling(1, 1))


def test_min_level_set_examples():
    assert min_level_set(2, (0, 0)) == {0, 1, 2, 3}
    assert min_level_set(2, (-1, 0)) == {0}
    assert min_level_set(2, (1, 0)) == {3}


def test_as_fraction_refuses_inexact_input():
    assert as_fraction("3/4") == Fraction(3, 4)
    assert as_fraction(-2) == -2
    for bad in ("0.5", "1e3", ""):
        with pytest.raises(ValueError):
            as_fraction(bad)
    with pytest.raises(TypeError):
        as_fraction(0.5)
    with pytest.raises(TypeError):
        Coupling(1.0, 0)


def test_ball_config_validation():
    with pytest.raises(ValueError):
        BallConfig(1, (1,))
    with pytest.raises(ValueError):
        BallConfig(0, (1, 1))


@pytest.mark.parametrize("k", range(1, 7))
def test_every_ball_hits_its_level(k):
    # random exact J, all 2^(k+2) balls; energies must depend on the class alone
    rng = random.Random(k)
    J = Coupling(Fraction(rng.randint(-9, 9), rng.randint(1, 7)), Fraction(rng.randint(-9, 9), rng.randint(1, 7)))
    counts = Counter()
    for b in iter_ball_configs(k):
        i = class_of(b)
        counts[i] += 1
        assert ball_energy(b, J) == level_energy(k, i, J)
    assert sum(counts.values()) == 2 ** (k + 2)
    for i in range(k + 2):
        expected = 2 * math.factorial(k + 1) // (math.factorial(i) * math.factorial(k + 1 - i))
        assert counts[i] == class_census_size(k, i) == expected


@pytest.mark.parametrize("k", range(1, 7))
@given(J=couplings)
def test_levels_match_direct_sum(k, J):
    assert level_energies(k, J) == naive_levels(k, J.J1, J.J2)


@given(k=st.integers(1, 6), J=couplings, data=st.data())
def test_flip_symmetry(k, J, data):
    leaves = data.draw(st.lists(st.sampled_from([-1, 1]), min_size=k + 1, max_size=k + 1))
    b = BallConfig(data.draw(st.sampled_from([-1, 1])), tuple(leaves))
    assert ball_energy(-b, J) == ball_energy(b, J)
    assert class_of(-b) == class_of(b)


@given(k=st.integers(1, 6), J=couplings, i=st.integers(0, 7))
def test_antipodal_level_difference(k, J, i):
    if i > k + 1:
        return
    assert level_energy(k, i, J) - level_energy(k, k + 1 - i, J) == (k + 1 - 2 * i) * J.J1


@given(k=st.integers(1, 6), J=couplings, lam=st.fractions(min_value=Fraction(1, 10), max_value=10))
def test_argmin_is_scale_invariant(k, J, lam):
    assert min_level_set(k, J) == min_level_set(k, J.scaled(lam))


def _random_spins(k, n, rng):
    return {x: rng.choice((-1, 1)) for x in enumerate_ball(k, n)}


@pytest.mark.parametrize("k,n", [(1, 4), (2, 3), (3, 2)])
def test_configuration_energy_matches_pair_oracle(k, n):
    rng = random.Random(10 * k + n)
    J = Coupling(Fraction(3, 2), Fraction(-5, 7))
    for _ in range(5):
        spins = _random_spins(k, n, rng)
        by_tuple = {x.letters: v for x, v in spins.items()}
        assert configuration_energy(spins, k, n, J) == naive_energy(by_tuple, k, n, J.J1, J.J2)


def test_finite_volume_energy_examples():
    plus = SpinConfigView(index_two_rule(1, {1}, 1))
    assert finite_volume_energy(plus, 1, Coupling(1, 0)) == 2
    assert finite_volume_energy(plus, 1, Coupling(0, 1)) == 1
    with pytest.raises(ValueError):
        finite_volume_energy(plus, 0, Coupling(1, 0))


@pytest.mark.parametrize("rule", catalog_index2({1}, 2)[::3] + [phi_prime({1}, 2)], ids=lambda r: r.label)
def test_finite_volume_energy_equals_pair_oracle(rule):
    view = SpinConfigView(rule)
    spins = {x.letters: evaluate(view, x) for x in enumerate_ball(2, 3)}
    J = Coupling(2, -1)
    assert finite_volume_energy(view, 3, J) == naive_energy(spins, 2, 3, J.J1, J.J2)


def test_single_flip_on_path():
    k, n = 1, 4
    plus = {x: 1 for x in enumerate_ball(k, n)}
    flipped = dict(plus)
    flipped[GroupWord(k, (1,))] = -1
    # two bonds and two distance-2 pairs break, each changing by -2
    assert relative_hamiltonian(flipped, plus, Coupling(1, 0), n) == -4
    assert relative_hamiltonian(flipped, plus, Coupling(0, 1), n) == -4
    assert relative_hamiltonian(flipped, plus, Coupling(1, 1), n) == -8


def test_relative_hamiltonian_rejects_boundary_changes():
    k, n = 2, 4
    plus = {x: 1 for x in enumerate_ball(k, n)}
    sigma = dict(plus)
    sigma[GroupWord(k, (1, 2, 1))] = -1
    with pytest.raises(ValueError):
        relative_hamiltonian(sigma, plus, Coupling(1, 1), n)


def _ball_sum_difference(sigma, phi, k, n_outer, J):
    total = Fraction(0)
    for x in enumerate_ball(k, n_outer - 1):
        total += ball_energy(ball_at(sigma, x), J) - ball_energy(ball_at(phi, x), J)
    return total


@pytest.mark.parametrize("k", [1, 2, 3])
def test_relative_hamiltonian_is_ball_sum(k):
    rng = random.Random(100 + k)
    inner = [x for x in enumerate_ball(k, 3)]
    phi = _random_spins(k, 6, rng)
    for _ in range(20):
        J = Coupling(Fraction(rng.randint(-6, 6), rng.randint(1, 5)), Fraction(rng.randint(-6, 6), rng.randint(1, 5)))
        sigma = dict(phi)
        for x in rng.sample(inner, rng.randint(1, 5)):
            sigma[x] = -phi[x]
        h = relative_hamiltonian(sigma, phi, J, 6)
        assert h == _ball_sum_difference(sigma, phi, k, 6, J)
        assert h == configuration_energy(sigma, k, 6, J) - configuration_energy(phi, k, 6, J)


def test_iter_ball_configs_is_exhaustive():
    balls = list(iter_ball_configs(2))
    assert len(balls) == len(set(balls)) == 16
    assert {(b.center_spin,) + b.neighbor_spins for b in balls} == set(itertools.product((1, -1), repeat=4))
