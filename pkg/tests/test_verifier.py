import pytest

from weakperiodic.configurations import (
    Periodicity,
    SpinConfigView,
    catalog_index2,
    catalog_index4,
    classify_periodicity,
    index_two_rule,
    negate,
    periodic_sigma,
    phi_double_prime,
    phi_prime,
)
from weakperiodic.energy import Coupling
from weakperiodic.verifier import (
    case_classes,
    case_coverage_predicted,
    check_theorem1,
    check_theorem2,
    enumerate_ground_states,
    lemma1_census,
    proof_case_classes,
    same_configuration,
    verify,
)

from oracles import naive_ball_classes

J_CRIT = Coupling(2, 1)


def _oracle_classes(rule, n):
    view = SpinConfigView(rule)
    return naive_ball_classes(rule.k, rule.subgroup.A, rule.subgroup.index, rule.table, n, view.root_parent_class)


def test_verify_examples():
    rep = verify(index_two_rule(1, {1}, 2), Coupling(-1, 0), 6)
    assert rep.is_ground_state and rep.class_set == {0}
    rep = verify(index_two_rule(1, {1}, 2), Coupling(1, 0), 6)
    assert not rep.is_ground_state
    assert rep.witness["class"] == 0 and rep.witness["center"] == "a1a2"
    with pytest.raises(ValueError):
        verify(index_two_rule(1, {1}, 2), J_CRIT, 3)


def test_verify_json_shape():
    data = verify(index_two_rule(8, {1, 2}, 3), J_CRIT, 5).to_json()
    assert set(data) >= {"rule", "J", "is_ground_state", "classes_seen", "case_coverage", "radius_used", "witness"}
    assert data["J"] == ["2", "1"] and data["radius_used"] == 5


def test_enumerate_examples():
    labels = {label for label, _ in enumerate_ground_states(2, {1, 2}, 3, J_CRIT, 6)}
    assert {"phi_8", "-phi_8"} <= labels
    labels = {label for label, _ in enumerate_ground_states(2, {1}, 2, Coupling(-1, 0), 6)}
    assert {"phi_1", "-phi_1"} <= labels


def _cases():
    out = []
    for k in (1, 2, 3):
        for size in range(1, k + 2):
            A = range(1, size + 1)
            out += [(r, 6 if k < 3 else 5) for r in catalog_index2(A, k)]
            if size <= k:
                out += [(r, 5) for r in catalog_index4(A, k)[::23]]
    return out


@pytest.mark.parametrize("rule,n", _cases(), ids=lambda v: getattr(v, "label", str(v)))
def test_classes_match_naive_oracle(rule, n):
    assert verify(rule, J_CRIT, n).class_set == _oracle_classes(rule, n)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_ground_states_closed_under_negation(k):
    for size in range(1, k + 2):
        for index in ((2, 4) if size <= k else (2,)):
            found = {r.rule.entries for _, r in enumerate_ground_states(index, range(1, size + 1), k, J_CRIT, 5)}
            assert found == {tuple(-v for v in e) for e in found}


def test_small_radius_misses_classes():
    # on the path, centres of V_5 sit at depths 2..4 and so meet only three of the four depth residues
    rule = catalog_index4({1}, 1)[7]
    assert verify(rule, J_CRIT, 5).class_set < verify(rule, J_CRIT, 6).class_set


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_radius_six_is_stable(k):
    for size in range(1, k + 2):
        A = range(1, size + 1)
        rules = catalog_index2(A, k)
        if size <= k:
            rules = rules + catalog_index4(A, k)[:: 5 if k < 3 else 37]
        for rule in rules:
            r6, r7 = verify(rule, J_CRIT, 6), verify(rule, J_CRIT, 7)
            assert r6.class_set == r7.class_set
            assert r6.is_ground_state == r7.is_ground_state
            assert r6.case_coverage == r7.case_coverage


@pytest.mark.parametrize("k", [1, 3, 5])
def test_case_table_matches_sweep(k):
    for size in range(1, k + 2):
        A = range(1, size + 1)
        rules = catalog_index2(A, k)
        if size <= k:
            rules = rules + [phi_prime(A, k), phi_double_prime(A, k)]
        for rule in rules:
            rep = verify(rule, J_CRIT, 6)
            assert case_classes(rule) == rep.class_set
            assert case_coverage_predicted(rule) == rep.case_coverage


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_proof_case_lists(k):
    for size in range(1, k + 2):
        A = range(1, size + 1)
        i = k + 1 - size
        for num in (1, 2, 3, 8):
            seen = verify(index_two_rule(num, A, k), J_CRIT, 5 if k > 4 else 6).class_set
            claimed = proof_case_classes(f"phi_{num}", i, k)
            assert seen <= claimed
            if 2 <= size <= k - 1:
                assert seen == claimed
        if size <= k:
            seen = verify(phi_prime(A, k), J_CRIT, 5 if k > 4 else 6).class_set
            assert seen <= proof_case_classes("phi_prime", i, k)


def test_proof_case_classes_rejects_unknown():
    with pytest.raises(ValueError):
        proof_case_classes("phi_5", 1, 2)


@pytest.mark.parametrize("k,counts", [(1, [2, 4, 2]), (2, [2, 6, 6, 2])])
def test_census_examples(k, counts):
    rep = lemma1_census(k)
    assert rep.counts == counts and rep.agrees


def test_full_set_spot_check_k2():
    # A = every generator: H_A is the even-length subgroup
    rule = index_two_rule(8, {1, 2, 3}, 2)
    assert classify_periodicity(rule) is Periodicity.TRANSLATION_INVARIANT
    assert verify(rule, Coupling(-1, 0), 6).is_ground_state


@pytest.mark.parametrize("k,size", [(3, 2), (5, 3)])
def test_double_prime_lives_on_lower_ray(k, size):
    A = range(1, size + 1)
    pp = phi_double_prime(A, k)
    assert verify(pp, Coupling(-2, 1), 6).class_set == {size - 1, size}
    assert verify(pp, Coupling(-2, 1), 6).is_ground_state
    assert not verify(pp, J_CRIT, 6).is_ground_state
    assert verify(phi_prime(A, k), J_CRIT, 6).is_ground_state


def test_phi6_on_the_path():
    # k = 1 oddity: phi_6 is a second strictly weak-periodic ground state at J = (2, 1)
    rule = index_two_rule(6, {1}, 1)
    assert classify_periodicity(rule) is Periodicity.STRICTLY_WEAK_PERIODIC
    assert verify(rule, J_CRIT, 6).is_ground_state


@pytest.mark.parametrize("k", [2, 3, 4])
def test_theorem2_for_k_at_least_two(k):
    reports = check_theorem2(k, 6)
    assert all(r.agrees for r in reports)
    for r in reports:
        if 2 * r.size_A == k + 1:
            assert set(r.strictly_weak_periodic_members) == {"phi_8", "-phi_8"}


@pytest.mark.parametrize("k", [2, 3])
def test_theorem1(k):
    assert all(c.agrees for c in check_theorem1(k, 6))


def test_theorem1_path_intruder():
    checks = check_theorem1(1, 6)
    assert all(c.holds_inside and c.fails_elsewhere for c in checks)
    assert [c.intruders for c in checks] == [[], ["-phi_6", "phi_6"], []]


def test_same_configuration():
    a = periodic_sigma(3, 2)
    assert same_configuration(a, a)
    assert not same_configuration(a, negate(a))
