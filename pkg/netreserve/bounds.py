# coding: utf-8
"""
Theoretical Bounds
==================

Calculators of the guarantees of the saddle-point policy, given the
instance constants *Θ*, *η* and *v* and the step sizes *α* and *μ*:

- the drift constant ``B = μ²(4Θ² + v²) / 2``, which bounds the one-slot
  drift ``Δ(λ_t) = (λ_{t+1}² - λ_t²) / 2`` up to the term
  ``μ λ_t (E_{P^t}[C(·, b^{t-1})] - v)``;
- for any positive integer *ℵ*, the multiplier cap ``λ_t ≤ θ(ℵ) ℵ``
  and the violation cap ``Υ_T ≤ θ(ℵ) ℵ / μ``, with ``θ(ℵ) = max(ϱ, χ(ℵ))``,
  ``ϱ = μ(2Θ - v)`` and::

      χ(ℵ) = (B/μ + αΘ²/4 + 1/(2α(ℵ+1)) + Θ) / (ηℵ) + ϱ(ℵ+2) / (2ℵ)

- the deterministic regret cap against the distribution *K*-benchmark::

      μ(2Θ+v)²(K-1)(2K-1)/6 + (T-K)(K(4Θ²+v²)μ/2 + Θ²α/4) + K(K-1)Θ + 1/α

- the high-probability slack of the realized regret ``sqrt(2 ln(1/δ) T Θ²)``.

.. doctest:: bounds_demo

    >>> from netreserve.bounds import drift_bound

    >>> round(drift_bound(65.9, v=2.0, mu=0.1), 6)
    86.8762

The module also provides empirical checks of the per-slot inequalities on a
ledger (:func:`drift_check` and :func:`proximal_check`) and the parameter
schedule of an *ε*-approximation (:func:`epsilon_schedule`).
"""
import collections
import math

import numpy as np

from netreserve.errors import ConfigError
from netreserve.network import index_of
from netreserve.simplex import expectation

#: Largest cap multiplier searched by :func:`best_aleph`.
ALEPH_MAX = 200


def drift_bound(theta, v, mu):
    """ Drift constant *B*. """
    return 0.5 * mu ** 2 * (4 * theta ** 2 + v ** 2)


def varrho(theta, v, mu):
    return mu * (2 * theta - v)


def chi(aleph, theta, eta, v, alpha, mu):
    B = drift_bound(theta, v, mu)
    first = (B / mu + alpha * theta ** 2 / 4 + 1.0 / (2 * alpha * (aleph + 1)) + theta) / (eta * aleph)
    return first + varrho(theta, v, mu) * (aleph + 2) / (2.0 * aleph)


def theta_of_aleph(aleph, theta, eta, v, alpha, mu):
    """
    *θ(ℵ) = max(ϱ, χ(ℵ))*.

    :raises ValueError: if *ℵ < 1* or *η ≤ 0*.
    """
    if aleph < 1:
        raise ValueError("aleph must be a positive integer: {0!r}".format(aleph))
    if eta <= 0:
        raise ValueError("a positive Slater margin is required: eta={0!r}".format(eta))
    return max(varrho(theta, v, mu), chi(aleph, theta, eta, v, alpha, mu))


def regret_bound_K(theta, v, alpha, mu, T, K):
    """ Cap of the deterministic regret against the distribution *K*-benchmark. """
    if not 1 <= K <= T:
        raise ValueError("window length out of range: K={0!r}, T={1!r}".format(K, T))
    return (
        mu * (2 * theta + v) ** 2 * (K - 1) * (2 * K - 1) / 6.0
        + (T - K) * (0.5 * K * (4 * theta ** 2 + v ** 2) * mu + theta ** 2 * alpha / 4)
        + K * (K - 1) * theta
        + 1.0 / alpha
    )


def hp_slack(theta, T, delta):
    """
    Slack between the realized and the deterministic regrets, with probability at least *1 - δ*.

    :raises ValueError: if *δ* is not in ]0, 1[.
    """
    if not 0 < delta < 1:
        raise ValueError("delta must be in ]0, 1[: {0!r}".format(delta))
    return math.sqrt(2 * math.log(1.0 / delta) * T * theta ** 2)


def best_aleph(constants, alpha, mu, aleph_max=ALEPH_MAX):
    """
    Search the cap multiplier *ℵ* in *1..aleph_max* minimizing *θ(ℵ) ℵ*.

    :type  constants: netreserve.benchmarks.InstanceConstants
    :param constants: Instance constants.

    :return: the tuple (*ℵ*, *θ(ℵ) ℵ*), the smallest *ℵ* on ties.
    """
    best = None
    for aleph in range(1, aleph_max + 1):
        cap = theta_of_aleph(aleph, constants.theta_bound, constants.eta, constants.v, alpha, mu) * aleph
        if best is None or cap < best[1]:
            best = (aleph, cap)
    return best


class BoundReport(object):
    """
    Theoretical guarantees of the saddle-point policy for a given instance and parameters.
    """

    def __init__(self, constants, alpha, mu, T, K, aleph, delta):
        self.constants = constants
        self.alpha = alpha
        self.mu = mu
        self.T = T
        self.K = K
        self.aleph = aleph
        self.delta = delta
        theta, v = constants.theta_bound, constants.v
        self.drift_B = drift_bound(theta, v, mu)
        self.varrho = varrho(theta, v, mu)
        self.theta = self.theta_of_aleph(aleph)
        self.lambda_cap = self.theta * aleph
        self.violation_cap = self.lambda_cap / mu
        self.regret_cap_K = regret_bound_K(theta, v, alpha, mu, T, K)
        self.hp_slack = hp_slack(theta, T, delta)

    def __repr__(self):
        cls = self.__class__.__name__
        return "<{cls}(aleph={aleph!r}, lambda_cap={lambda_cap!r}, regret_cap_K={regret_cap_K!r})>".format(
            cls=cls, aleph=self.aleph, lambda_cap=self.lambda_cap, regret_cap_K=self.regret_cap_K)

    def theta_of_aleph(self, aleph):
        """ *θ(ℵ)* for any positive integer *ℵ*. """
        c = self.constants
        return theta_of_aleph(aleph, c.theta_bound, c.eta, c.v, self.alpha, self.mu)

    def to_value(self):
        return {
            "alpha": self.alpha,
            "mu": self.mu,
            "T": self.T,
            "K": self.K,
            "aleph": self.aleph,
            "delta": self.delta,
            "drift_B": self.drift_B,
            "varrho": self.varrho,
            "theta": self.theta,
            "lambda_cap": self.lambda_cap,
            "violation_cap": self.violation_cap,
            "regret_cap_K": self.regret_cap_K,
            "hp_slack": self.hp_slack,
        }


def bound_report(constants, alpha, mu, T, K=1, aleph=None, delta=0.1, aleph_max=ALEPH_MAX):
    """
    Compute the guarantees of the saddle-point policy.

    :type  constants: netreserve.benchmarks.InstanceConstants
    :param constants: Instance constants.

    :param float alpha: Primal step size (positive).
    :param float mu: Dual step size (positive).
    :param int T: Horizon.
    :param int K: Window length of the benchmark, in *1..T*.
    :param int aleph: Cap multiplier (default: the best one up to *aleph_max*).
    :param float delta: Confidence parameter, in ]0, 1[.

    :rtype: BoundReport

    :raises ConfigError: if the instance has no Slater point (*η ≤ 0*).

    :raises ValueError: if a parameter is out of range.
    """
    if constants.eta <= 0:
        raise ConfigError("the bounds require a Slater point: eta={0!r}".format(constants.eta))
    if alpha <= 0 or mu <= 0:
        raise ValueError("step sizes must be positive: alpha={0!r}, mu={1!r}".format(alpha, mu))
    if aleph is None:
        aleph = best_aleph(constants, alpha, mu, aleph_max)[0]
    return BoundReport(constants, alpha, mu, T, K, aleph, delta)


EpsilonScheduleTuple = collections.namedtuple(
    "EpsilonScheduleTuple", ["alpha", "mu", "horizon", "regret_order", "violation_order"])


class EpsilonSchedule(EpsilonScheduleTuple):
    """
    Parameters reaching an *ε*-approximation: the step sizes *α* and *μ*, the
    horizon *T'* after which the time-average regret is of order *regret_order*
    and the time-average violation of order *violation_order*.
    """
    __slots__ = ()

    def __repr__(self):
        return super(EpsilonSchedule, self).__repr__().replace("EpsilonScheduleTuple", "EpsilonSchedule")


def epsilon_schedule(epsilon, iota=1, gamma=1, kappa=3):
    """
    Choose ``α = ε^ι``, ``μ = ε^γ`` and ``T' = ceil((1/ε)^κ)``.

    >>> epsilon_schedule(0.1).horizon
    1000

    :param float epsilon: Target accuracy, in ]0, 1[.

    :rtype: EpsilonSchedule
    """
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must be in ]0, 1[: {0!r}".format(epsilon))
    horizon = int(math.ceil(round((1.0 / epsilon) ** kappa, 9)))
    return EpsilonSchedule(
        epsilon ** iota,
        epsilon ** gamma,
        horizon,
        epsilon ** gamma + epsilon ** iota + epsilon ** (kappa - iota),
        epsilon ** (iota + kappa - gamma) + epsilon ** (kappa - iota - gamma),
    )


def _lambdas(ledger):
    lambdas = ledger.column("lambda_")
    return lambdas, np.append(lambdas[1:], ledger.final_lambda)


def drift_series(ledger):
    """
    One-slot drift series ``Δ(λ_t) = (λ_{t+1}² - λ_t²) / 2``.

    :rtype: numpy.ndarray
    """
    current, following = _lambdas(ledger)
    return 0.5 * (following ** 2 - current ** 2)


def drift_check(ledger, B, mu, v):
    """
    Per-slot slack of the drift inequality::

        Δ(λ_t) ≤ B + μ λ_t (E_{P^t}[C(·, b^{t-1})] - v)

    :return: the slack series (nonnegative when the inequality holds).

    :rtype: numpy.ndarray
    """
    lambdas = ledger.column("lambda_")
    expected = ledger.column("expected_cost_prev")
    return B + mu * lambdas * (expected - v) - drift_series(ledger)


def proximal_check(ledger, oracle, comparator, alpha, mu, B, theta):
    """
    Per-slot slack of the proximal step inequality, for a comparator distribution *P*::

        Δ(λ_t)/μ ≤ B/μ + E_P[C_R] - E_{P^{t-1}}[C_R] + λ_t (E_P[C(·, b^{t-1})] - v)
                   + (||P - P^{t-1}||² - ||P - P^t||²) / (2α) + αΘ²/4

    :type  ledger: netreserve.ledger.RunLedger
    :param ledger: Ledger of a saddle-point run.

    :type  oracle: netreserve.transfer.CostOracle
    :param oracle: Cost oracle of the network.

    :type  comparator: netreserve.simplex.Distribution
    :param comparator: Comparator distribution *P*.

    :return: the slack series (nonnegative when the inequality holds).

    :rtype: numpy.ndarray
    """
    config = ledger.config
    v = config.v
    costs = config.reservation_costs()
    comparator_cost = expectation(comparator, costs)
    drift = drift_series(ledger)
    previous = ledger.initial_distribution.p
    slack = []
    for row, distribution, delta in zip(ledger, ledger.distributions, drift):
        j_prev = index_of(config, row.b_prev)
        rhs = (
            B / mu
            + comparator_cost
            - expectation(previous, costs)
            + row.lambda_ * (expectation(comparator, oracle.column(j_prev)) - v)
            + (np.sum((comparator.p - previous) ** 2) - np.sum((comparator.p - distribution.p) ** 2)) / (2 * alpha)
            + alpha * theta ** 2 / 4
        )
        slack.append(rhs - delta / mu)
        previous = distribution.p
    return np.array(slack, dtype=float)
