# coding: utf-8
import numpy as np
import pytest

from netreserve.benchmarks import INFEASIBLE
from netreserve.benchmarks import solve_distribution_K
from netreserve.benchmarks import solve_static_K
from netreserve.errors import InfeasibleError
from netreserve.metrics import cumulative_violation
from netreserve.metrics import deterministic_regret_K
from netreserve.metrics import realized_regret_K
from netreserve.metrics import time_average
from netreserve.network import index_of
from netreserve.policies import make_policy
from netreserve.simplex import expectation
from netreserve.simulation import simulate
from netreserve.workload import WorkloadSpec
from netreserve.workload import generate

from tests.networks import TWO_SERVER
from tests.networks import linear_network


class StubLedger(object):
    def __init__(self, **columns):
        self.columns = columns

    def column(self, name):
        return np.array(self.columns[name], dtype=float)


def test_realized_regret_K__benchmark_played():
    config = linear_network([2, 2], v=10.0)
    requests = [(1, 1)] * 4
    ledger = simulate(make_policy("lazy", config), requests)
    assert realized_regret_K(ledger, config, K=1).tolist() == [0.0, 0.0, 0.0, 0.0]
    assert deterministic_regret_K(ledger, config, K=1) == pytest.approx(np.zeros(4))


def test_realized_regret_K__single_slot():
    config = linear_network([2, 2], v=10.0)
    ledger = simulate(make_policy("lazy", config), [(1, 1)], initial_request=(2, 2))
    # C_R(2, 2) - C_R(1, 1)
    assert realized_regret_K(ledger, config, K=1).tolist() == [2.0]


def test_realized_regret_K__recomputed():
    requests = generate(WorkloadSpec("iid-uniform", seed=0), TWO_SERVER, 40)
    ledger = simulate(make_policy("saddle", TWO_SERVER, alpha=0.01), requests, np.random.default_rng(0))
    static = solve_static_K(TWO_SERVER, requests, 1)
    costs = TWO_SERVER.reservation_costs()
    expected = np.cumsum([costs[index_of(TWO_SERVER, a)] - costs[index_of(TWO_SERVER, static)]
                          for a in ledger.reservations])
    assert realized_regret_K(ledger, TWO_SERVER, requests, K=1) == pytest.approx(expected)


def test_deterministic_regret_K__point_mass_policy():
    requests = generate(WorkloadSpec("iid-uniform", seed=2), TWO_SERVER, 30)
    ledger = simulate(make_policy("naive", TWO_SERVER), requests)
    P = solve_distribution_K(TWO_SERVER, requests, 5)
    costs = TWO_SERVER.reservation_costs()
    expected = np.cumsum([costs[index_of(TWO_SERVER, a)] for a in ledger.reservations])
    expected -= np.arange(1, 31) * expectation(P, costs)
    assert deterministic_regret_K(ledger, TWO_SERVER, K=5, benchmark=P) == pytest.approx(expected)


def test_regret_K__infeasible():
    config = TWO_SERVER.with_threshold(-1.0)
    ledger = simulate(make_policy("lazy", config), [(2, 2)])
    with pytest.raises(InfeasibleError):
        realized_regret_K(ledger, config, K=1)
    with pytest.raises(InfeasibleError):
        deterministic_regret_K(ledger, config, K=1, benchmark=INFEASIBLE)


@pytest.mark.parametrize(
    "expected_cost, v, expected",
    [
        pytest.param([2.0, 2.0, 2.0], 2.0, [0.0, 0.0, 0.0], id="on-budget"),
        pytest.param([3.0, 3.0, 3.0], 2.0, [1.0, 2.0, 3.0], id="constant-excess"),
        pytest.param([0.0, 5.0], 2.0, [-2.0, 1.0], id="slack"),
    ],
)
def test_cumulative_violation(expected_cost, v, expected):
    ledger = StubLedger(expected_cost=expected_cost)
    assert cumulative_violation(ledger, v).tolist() == expected


def test_cumulative_violation__realized():
    ledger = StubLedger(expected_cost=[0.0, 0.0], realized_cost=[3.0, 1.0])
    assert cumulative_violation(ledger, 1.0, realized=True).tolist() == [2.0, 2.0]


def test_time_average():
    assert time_average([1.0, 4.0, 9.0]).tolist() == [1.0, 2.0, 3.0]
    assert time_average([]).tolist() == []
