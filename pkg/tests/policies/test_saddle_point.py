# coding: utf-8
import numpy as np
import pytest

from netreserve.errors import ConfigError
from netreserve.network import NetworkConfig
from netreserve.network import index_of
from netreserve.policies.saddle_point import SaddlePointPolicy
from netreserve.policies.saddle_point import SaddleState
from netreserve.policies.saddle_point import dual_step
from netreserve.policies.saddle_point import initial_distribution
from netreserve.policies.saddle_point import saddle_primal_step
from netreserve.policies.saddle_point import saddle_step
from netreserve.reservation import Reservation
from netreserve.simplex import Distribution
from netreserve.simplex import l2_distance
from netreserve.simulation import simulate
from netreserve.transfer import get_oracle
from netreserve.workload import WorkloadSpec
from netreserve.workload import generate

from tests.networks import TWO_SERVER

#: Two reservations with the reservation costs 1 and 2.
TWO_ATOMS = NetworkConfig.uniform([2], v=1.0, f_R={"kind": "table", "params": {"values": [1, 2]}})


def _project(y):
    # sort-and-threshold projection, written independently
    u = sorted(y, reverse=True)
    total = 0.0
    tau = 0.0
    for k, value in enumerate(u, 1):
        total += value
        if value - (total - 1.0) / k > 0:
            tau = (total - 1.0) / k
    return np.maximum(np.array(y) - tau, 0.0)


class TestSaddleState(object):
    def test_new(self):
        state = SaddleState(Distribution.uniform(2), 0, [1], 0.1, 0.2)
        assert state.lambda_ == 0.0
        assert state.b_prev == Reservation(1)

    @pytest.mark.parametrize(
        "lambda_, alpha, mu",
        [
            pytest.param(-0.1, 0.1, 0.1, id="negative-lambda"),
            pytest.param(0.0, 0.0, 0.1, id="null-alpha"),
            pytest.param(0.0, 0.1, -1.0, id="negative-mu"),
        ],
    )
    def test_new__invalid(self, lambda_, alpha, mu):
        with pytest.raises(ValueError):
            SaddleState(Distribution.uniform(2), lambda_, (1,), alpha, mu)


@pytest.mark.parametrize(
    "alpha, expected",
    [
        pytest.param(0.1, [0.55, 0.45], id="small-step"),
        pytest.param(10.0, [1.0, 0.0], id="large-step"),
    ],
)
def test_saddle_primal_step(alpha, expected):
    state = SaddleState(Distribution([0.5, 0.5]), 0.0, (1,), alpha, 0.1)
    P = saddle_primal_step(state, get_oracle(TWO_ATOMS))
    assert list(P) == pytest.approx(expected)


def test_saddle_primal_step__constant_gradient():
    config = NetworkConfig.uniform([4], v=1.0, f_R={"kind": "table", "params": {"values": [3, 3, 3, 3]}})
    P_prev = Distribution([0.1, 0.2, 0.3, 0.4])
    state = SaddleState(P_prev, 0.0, (1,), 0.05, 0.1)
    P = saddle_primal_step(state, get_oracle(config))
    assert P.p == pytest.approx(P_prev.p)


def test_saddle_primal_step__constraint_term():
    # the multiplier pushes the mass towards the reservations which do not violate
    oracle = get_oracle(TWO_SERVER)
    P_prev = Distribution.uniform(TWO_SERVER.size)
    b_prev = (5, 6)
    free = SaddleState(P_prev, 0.0, b_prev, 0.001, 0.1)
    constrained = free._replace(lambda_=10.0)
    column = oracle.column(index_of(TWO_SERVER, b_prev))
    expected_free = saddle_primal_step(free, oracle).p.dot(column)
    expected_constrained = saddle_primal_step(constrained, oracle).p.dot(column)
    assert expected_constrained < expected_free


def _simplex_grid(steps):
    i, j = np.meshgrid(np.arange(steps + 1), np.arange(steps + 1), indexing="ij")
    keep = i + j <= steps
    i, j = i[keep], j[keep]
    return np.column_stack([i, j, steps - i - j]) / float(steps)


def test_saddle_primal_step__grid_minimum():
    # the primal step minimizes the proximal Lagrangian over a 1/1000 grid of the 3-simplex
    grid = _simplex_grid(1000)
    squares = (grid ** 2).sum(axis=1)
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        config = NetworkConfig.uniform(
            [3],
            v=float(rng.uniform(0, 5)),
            f_R={"kind": "table", "params": {"values": rng.uniform(0, 10, size=3).tolist()}},
            f_V={"kind": "table", "params": {"values": rng.uniform(0, 10, size=3).tolist()}},
        )
        oracle = get_oracle(config)
        b_prev = (int(rng.integers(1, 4)),)
        P_prev = Distribution(rng.dirichlet(np.ones(3)))
        lambda_ = float(rng.uniform(0, 10))
        alpha = float(rng.uniform(0.05, 1.0))
        costs = config.reservation_costs()
        column = oracle.column(index_of(config, b_prev))

        def objective(q, squared):
            # E_q[C_R] + λ (E_q[C] - v) + ||q - P_prev||² / (2 α)
            distance = squared - 2 * q.dot(P_prev.p) + P_prev.p.dot(P_prev.p)
            return q.dot(costs) + lambda_ * (q.dot(column) - config.v) + distance / (2 * alpha)

        P = saddle_primal_step(SaddleState(P_prev, lambda_, b_prev, alpha, 0.1), oracle)
        best = objective(grid, squares).min()
        assert abs(objective(P.p, P.p.dot(P.p)) - best) <= 1e-5


@pytest.mark.parametrize(
    "lambda_, expected_cost, v, mu, expected",
    [
        pytest.param(0.5, 4.0, 2.0, 0.1, 0.7, id="ascent"),
        pytest.param(0.0, 1.0, 2.0, 0.1, 0.0, id="clamped"),
        pytest.param(0.2, 1.0, 2.0, 0.1, 0.1, id="descent"),
    ],
)
def test_dual_step(lambda_, expected_cost, v, mu, expected):
    assert dual_step(lambda_, expected_cost, v, mu) == pytest.approx(expected)


def test_saddle_step():
    oracle = get_oracle(TWO_SERVER)
    state = SaddleState(Distribution.uniform(TWO_SERVER.size), 0.0, (1, 1), 0.001, 0.1)
    decision, new_state = saddle_step(state, (4, 4), np.random.default_rng(0), oracle)
    column = oracle.column(index_of(TWO_SERVER, (4, 4)))
    assert new_state.b_prev == Reservation(4, 4)
    assert new_state.P_prev == decision.distribution
    assert decision.expected_cost_vs_prev_request == pytest.approx(decision.distribution.p.dot(column))
    assert new_state.lambda_ == pytest.approx(max(0.0, 0.1 * (decision.expected_cost_vs_prev_request - 2.0)))
    assert decision.sampled_index in decision.distribution.support


@pytest.mark.parametrize(
    "mode, support",
    [
        pytest.param("uniform", tuple(range(56)), id="uniform"),
        pytest.param("cheapest", (0,), id="cheapest"),
        pytest.param("point:55", (55,), id="point"),
    ],
)
def test_initial_distribution(mode, support):
    assert initial_distribution(TWO_SERVER, mode).support == support


@pytest.mark.parametrize("mode", ["point:56", "point:x", "gaussian", None])
def test_initial_distribution__invalid(mode):
    with pytest.raises(ConfigError):
        initial_distribution(TWO_SERVER, mode)


class TestSaddlePointPolicy(object):
    def test_init(self):
        policy = SaddlePointPolicy(TWO_SERVER)
        assert policy.name == "saddle"
        assert policy.randomized
        assert policy.lambda_ == 0.0
        assert policy.state.alpha == 0.001
        assert policy.state.mu == 0.1
        assert policy.initial_distribution == Distribution.uniform(56)

    def test_init__options(self):
        policy = SaddlePointPolicy(TWO_SERVER, alpha=0.01, mu=0.5, lambda_init=3.0, initial="point:7")
        assert policy.lambda_ == 3.0
        assert policy.state.alpha == 0.01
        assert policy.initial_distribution.support == (7,)

    def test_first_slot(self):
        # with lambda_1 = 0, the first step only sees the reservation costs
        policy = SaddlePointPolicy(TWO_SERVER, alpha=0.01)
        decision = policy.decide(Reservation(1, 1), np.random.default_rng(0))
        P0 = Distribution.uniform(56).p
        expected = _project(P0 - 0.01 * TWO_SERVER.reservation_costs())
        assert decision.distribution.p == pytest.approx(expected)

    def test_hand_simulation(self):
        requests = generate(WorkloadSpec("iid-uniform", seed=0), TWO_SERVER, 3)
        alpha, mu, v = 0.01, 0.1, TWO_SERVER.v
        ledger = simulate(SaddlePointPolicy(TWO_SERVER, alpha=alpha, mu=mu), requests, np.random.default_rng(11))

        oracle = get_oracle(TWO_SERVER)
        costs = TWO_SERVER.reservation_costs()
        rng = np.random.default_rng(11)
        P = np.full(56, 1.0 / 56)
        lambda_ = 0.0
        b_prev = Reservation(1, 1)
        for row, distribution, b in zip(ledger, ledger.distributions, requests):
            column = oracle.column(index_of(TWO_SERVER, b_prev))
            assert row.lambda_ == pytest.approx(lambda_)
            P = _project(P - alpha * (costs + lambda_ * column))
            assert distribution.p == pytest.approx(P)
            index = int(np.searchsorted(np.cumsum(distribution.p), rng.random(), side="right"))
            assert row.index == index
            lambda_ = max(0.0, lambda_ + mu * (P.dot(column) - v))
            b_prev = b
        assert ledger.final_lambda == pytest.approx(lambda_)

    def test_small_steps(self):
        # the proximal term keeps the distributions close
        requests = [(3, 3)] * 5
        ledger = simulate(SaddlePointPolicy(TWO_SERVER, alpha=1e-6), requests, np.random.default_rng(0))
        distributions = ledger.distributions
        for P, Q in zip(distributions, distributions[1:]):
            assert l2_distance(P, Q) < 1e-3
