"""Weak-periodic ground states of the Ising model with competing interactions on the Cayley tree."""

from .configurations import (
    Periodicity,
    SpinConfigView,
    WeakPeriodicRule,
    catalog_index2,
    catalog_index4,
    classify_periodicity,
    evaluate,
    periodic_sigma,
    phi_double_prime,
    phi_prime,
)
from .energy import BallConfig, Coupling, ball_energy, class_of, level_energy, min_level_set
from .group_core import GroupWord, SubgroupSpec, coset_class, enumerate_ball
from .phase_regions import classify, ground_state_descriptor
from .verifier import enumerate_ground_states, verify

__version__ = "0.1.0"
