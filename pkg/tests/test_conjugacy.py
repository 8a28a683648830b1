import pytest

from knotpoly.braidrep import BraidWord
from knotpoly.conjugacy import (
    STATED_BRIDGE,
    WORKING_BRIDGE,
    Bridge,
    build_phi_n,
    check_two_strand_conjugacy,
    check_alexander_pair_conjugacy,
    check_n_strand_conjugacy,
    check_closure_transfer,
    check_phi_factorization,
    check_trace_conditions,
    partial_closure_ops,
    weak_conjugacy_data,
)
from knotpoly.laurent import GaussRational


@pytest.fixture(scope="module")
def data():
    return weak_conjugacy_data()


def test_lambda1_conjugate_to_alexander_pair():
    assert all(r.ok for r in check_alexander_pair_conjugacy())


def test_perturbed_theta_breaks_conjugacy():
    r, _ = check_alexander_pair_conjugacy((1, 3, 2, 4))
    assert not r.ok


@pytest.mark.parametrize("n", [2, 3, 4])
def test_phi_factorisation(data, n):
    assert check_phi_factorization(data, n).ok


def test_phi_is_diagonal(data):
    assert build_phi_n(data, 3)["phi"].is_diagonal()


def test_two_strand_conjugacy(data):
    assert check_two_strand_conjugacy(data).ok


@pytest.mark.parametrize("n,k", [(3, 1), (3, 2), (4, 2)])
def test_n_strand_conjugacy(data, n, k):
    assert check_n_strand_conjugacy(n, k, data).ok


def test_stated_pairing_is_not_a_conjugacy():
    assert not check_two_strand_conjugacy(weak_conjugacy_data(STATED_BRIDGE)).ok


def test_sign_partner_of_working_pairing():
    other = Bridge("t2", "t1", -1, GaussRational(0, 1))
    assert check_two_strand_conjugacy(weak_conjugacy_data(other)).ok


def test_phases_in_sigma_are_needed():
    assert not check_two_strand_conjugacy(weak_conjugacy_data(WORKING_BRIDGE, sigma_phases=False)).ok


@pytest.mark.parametrize("n", [2, 3])
def test_trace_conditions_on_sampled_tangles(data, n):
    ops = partial_closure_ops(data.target, n, 10, seed=1)
    results = check_trace_conditions(n, ops, data)
    assert all(r.ok for r in results), [str(r) for r in results if not r.ok]


@pytest.mark.parametrize("beta", [BraidWord(2, (1, 1)), BraidWord(2, (1, -1, 1)), BraidWord(3, (1, -2))])
def test_closure_transfer(data, beta):
    assert check_closure_transfer(beta, data).ok
