# coding: utf-8
import pytest

from netreserve.network import index_of
from netreserve.policies.lazy import LazyPolicy
from netreserve.policies.lazy import lazy_step
from netreserve.reservation import Reservation
from netreserve.simulation import simulate

from tests.networks import TWO_SERVER


@pytest.mark.parametrize("b_prev", [(5, 3), (1, 1), (7, 8)])
def test_lazy_step(b_prev):
    assert lazy_step(b_prev) == Reservation(*b_prev)


def test_lazy_policy():
    policy = LazyPolicy(TWO_SERVER)
    assert not policy.randomized
    decision = policy.decide(Reservation(5, 3), None)
    assert decision.sampled_index == index_of(TWO_SERVER, (5, 3))
    assert decision.distribution.is_point_mass
    assert decision.expected_cost_vs_prev_request == 0.0


def test_lazy_policy__repeated_requests():
    # an exact match never violates
    ledger = simulate(LazyPolicy(TWO_SERVER, initial_request=(4, 2)), [(4, 2), (4, 2), (6, 1), (6, 1)])
    costs = ledger.column("realized_cost")
    assert costs[[0, 1, 3]].tolist() == [0.0, 0.0, 0.0]
    assert costs[2] == pytest.approx(0.4)
