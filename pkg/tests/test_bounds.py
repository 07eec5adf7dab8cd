# coding: utf-8
import math

import numpy as np
import pytest

from netreserve.benchmarks import InstanceConstants
from netreserve.bounds import BoundReport
from netreserve.bounds import best_aleph
from netreserve.bounds import bound_report
from netreserve.bounds import chi
from netreserve.bounds import drift_bound
from netreserve.bounds import drift_check
from netreserve.bounds import drift_series
from netreserve.bounds import epsilon_schedule
from netreserve.bounds import hp_slack
from netreserve.bounds import proximal_check
from netreserve.bounds import regret_bound_K
from netreserve.bounds import theta_of_aleph
from netreserve.bounds import varrho
from netreserve.errors import ConfigError
from netreserve.network import NetworkConfig
from netreserve.policies import make_policy
from netreserve.simplex import Distribution
from netreserve.simulation import simulate
from netreserve.transfer import get_oracle
from netreserve.workload import WorkloadSpec
from netreserve.workload import generate

from tests.networks import TWO_SERVER

#: Constants of the shipped two-server network.
CONSTANTS = InstanceConstants(65.9, 2.0, Distribution.point_mass(56, 55), 2.0)


def test_drift_bound():
    assert drift_bound(65.9, 2.0, 0.1) == pytest.approx(86.8762)


def test_varrho():
    assert varrho(65.9, 2.0, 0.1) == pytest.approx(12.98)


def test_theta_of_aleph():
    value = theta_of_aleph(3, 65.9, 2.0, 2.0, 0.001, 0.1)
    assert value == max(varrho(65.9, 2.0, 0.1), chi(3, 65.9, 2.0, 2.0, 0.001, 0.1))
    assert value >= varrho(65.9, 2.0, 0.1)


@pytest.mark.parametrize(
    "aleph, eta",
    [
        pytest.param(0, 2.0, id="null-aleph"),
        pytest.param(1, 0.0, id="no-slater-point"),
    ],
)
def test_theta_of_aleph__invalid(aleph, eta):
    with pytest.raises(ValueError):
        theta_of_aleph(aleph, 65.9, eta, 2.0, 0.001, 0.1)


def test_regret_bound_K__window_1():
    theta, v, alpha, mu, T = 65.9, 2.0, 0.001, 0.1, 500
    expected = (T - 1) * (0.5 * (4 * theta ** 2 + v ** 2) * mu + theta ** 2 * alpha / 4) + 1 / alpha
    assert regret_bound_K(theta, v, alpha, mu, T, 1) == pytest.approx(expected)


def test_regret_bound_K__increasing():
    values = [regret_bound_K(65.9, 2.0, 0.001, 0.1, 100, K) for K in (1, 2, 10, 100)]
    assert values == sorted(values)


@pytest.mark.parametrize("K", [0, 11])
def test_regret_bound_K__invalid(K):
    with pytest.raises(ValueError):
        regret_bound_K(65.9, 2.0, 0.001, 0.1, 10, K)


def test_hp_slack():
    assert hp_slack(65.9, 500, 0.1) == pytest.approx(math.sqrt(2 * math.log(10) * 500) * 65.9)
    assert hp_slack(65.9, 500, 1 - 1e-12) == pytest.approx(0.0, abs=1e-2)


@pytest.mark.parametrize("delta", [0.0, 1.0, 1.5])
def test_hp_slack__invalid(delta):
    with pytest.raises(ValueError):
        hp_slack(65.9, 500, delta)


def test_best_aleph():
    aleph, cap = best_aleph(CONSTANTS, 0.001, 0.1, aleph_max=50)
    assert 1 <= aleph <= 50
    for other in range(1, 51):
        assert cap <= theta_of_aleph(other, 65.9, 2.0, 2.0, 0.001, 0.1) * other
    assert cap == pytest.approx(theta_of_aleph(aleph, 65.9, 2.0, 2.0, 0.001, 0.1) * aleph)


class TestBoundReport(object):
    def test_bound_report(self):
        report = bound_report(CONSTANTS, 0.001, 0.1, T=500, K=1, aleph_max=50)
        assert isinstance(report, BoundReport)
        assert report.drift_B == pytest.approx(86.8762)
        assert report.lambda_cap == pytest.approx(report.theta * report.aleph)
        assert report.violation_cap == pytest.approx(report.lambda_cap / 0.1)
        assert report.regret_cap_K == pytest.approx(regret_bound_K(65.9, 2.0, 0.001, 0.1, 500, 1))
        assert report.hp_slack == pytest.approx(hp_slack(65.9, 500, 0.1))
        assert report.theta_of_aleph(report.aleph) == report.theta

    def test_bound_report__aleph(self):
        report = bound_report(CONSTANTS, 0.001, 0.1, T=500, aleph=7)
        assert report.aleph == 7

    def test_to_value(self):
        value = bound_report(CONSTANTS, 0.01, 0.1, T=100, K=10, aleph=2).to_value()
        assert value["K"] == 10
        assert value["aleph"] == 2
        assert set(value) >= {"drift_B", "lambda_cap", "violation_cap", "regret_cap_K", "hp_slack"}

    def test_no_slater_point(self):
        constants = CONSTANTS._replace(eta=0.0)
        with pytest.raises(ConfigError):
            bound_report(constants, 0.001, 0.1, T=500)

    def test_invalid_steps(self):
        with pytest.raises(ValueError):
            bound_report(CONSTANTS, 0.0, 0.1, T=500)


def test_epsilon_schedule():
    schedule = epsilon_schedule(0.1)
    assert schedule.alpha == pytest.approx(0.1)
    assert schedule.mu == pytest.approx(0.1)
    assert schedule.horizon == 1000
    assert schedule.regret_order == pytest.approx(0.1 + 0.1 + 0.01)
    assert schedule.violation_order == pytest.approx(0.001 + 0.1)


def test_epsilon_schedule__exponents():
    schedule = epsilon_schedule(0.5, iota=2, gamma=1, kappa=4)
    assert schedule.alpha == 0.25
    assert schedule.mu == 0.5
    assert schedule.horizon == 16


@pytest.mark.parametrize("epsilon", [0.0, 1.0, -0.5])
def test_epsilon_schedule__invalid(epsilon):
    with pytest.raises(ValueError):
        epsilon_schedule(epsilon)


def _saddle_ledger(config, requests, **options):
    return simulate(make_policy("saddle", config, **options), requests, np.random.default_rng(0))


def test_drift_series():
    ledger = _saddle_ledger(TWO_SERVER, [(7, 8)] * 3, mu=0.5, lambda_init=1.0)
    lambdas = np.append(ledger.column("lambda_"), ledger.final_lambda)
    assert drift_series(ledger) == pytest.approx(0.5 * (lambdas[1:] ** 2 - lambdas[:-1] ** 2))


def test_drift_check():
    requests = generate(WorkloadSpec("iid-uniform", seed=0), TWO_SERVER, 200)
    mu = 0.1
    ledger = _saddle_ledger(TWO_SERVER, requests, alpha=0.01, mu=mu)
    B = drift_bound(65.9, TWO_SERVER.v, mu)
    assert np.all(drift_check(ledger, B, mu, TWO_SERVER.v) >= -1e-9)


def test_proximal_check__single_atom():
    config = NetworkConfig.uniform([1], v=1.0, f_R={"kind": "power", "params": {"c": 1, "p": 1}})
    alpha, mu, theta = 0.01, 0.1, 1.0
    ledger = _saddle_ledger(config, [(1,)] * 20, alpha=alpha, mu=mu, lambda_init=5.0)
    B = drift_bound(theta, config.v, mu)
    comparator = Distribution.point_mass(1, 0)
    slack = proximal_check(ledger, get_oracle(config), comparator, alpha, mu, B, theta)
    assert slack.shape == (20,)
    assert np.all(slack >= -1e-9)
