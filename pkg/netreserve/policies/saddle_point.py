# coding: utf-8
"""
Randomized Saddle-Point Policy
==============================

Online primal-dual policy over the distributions of reservations.

At the slot *t*, the policy observes *b^{t-1}* and computes:

- the primal step: the proximal minimizer of the approximate Lagrangian
  *E_P[C_R] + λ_t (E_P[C(·, b^{t-1})] - v)*, that is the projection of the
  gradient step ``P^{t-1} - α (C_R + λ_t C(·, b^{t-1}))`` onto the simplex;
- the draw of the reservation *A^t* from *P^t*;
- the dual step: ``λ_{t+1} = max(0, λ_t + μ (E_{P^t}[C(·, b^{t-1})] - v))``.

.. doctest:: saddle_demo

    >>> from netreserve.policies.saddle_point import dual_step

    >>> round(dual_step(0.5, 4.0, v=2.0, mu=0.1), 12)
    0.7
    >>> dual_step(0.0, 1.0, v=2.0, mu=0.1)
    0.0
"""
import collections
import re

import numpy as np

from netreserve.errors import ConfigError
from netreserve.network import index_of
from netreserve.policies.base_policy import BasePolicy
from netreserve.policies.base_policy import PolicyDecision
from netreserve.reservation import Reservation
from netreserve.simplex import Distribution
from netreserve.simplex import expectation
from netreserve.simplex import project_simplex
from netreserve.simplex import sample

SaddleStateTuple = collections.namedtuple("SaddleStateTuple", ["P_prev", "lambda_", "b_prev", "alpha", "mu"])


class SaddleState(SaddleStateTuple):
    """
    State of the saddle-point policy: the previous distribution *P^{t-1}*,
    the multiplier *λ_t*, the previous request *b^{t-1}* and the step sizes *α* and *μ*.
    """
    __slots__ = ()

    def __new__(cls, P_prev, lambda_, b_prev, alpha, mu):
        if lambda_ < 0:
            raise ValueError("lambda must be nonnegative: {0!r}".format(lambda_))
        if alpha <= 0 or mu <= 0:
            raise ValueError("step sizes must be positive: alpha={0!r}, mu={1!r}".format(alpha, mu))
        b_prev = Reservation.from_value(b_prev)
        return super(SaddleState, cls).__new__(cls, P_prev, float(lambda_), b_prev, alpha, mu)

    def __repr__(self):
        return super(SaddleState, self).__repr__().replace("SaddleStateTuple", "SaddleState")


def saddle_primal_step(state, oracle):
    """
    Proximal primal step.

    :type  state: SaddleState
    :param state: Current state (*b_prev* is the request *b^{t-1}*).

    :type  oracle: netreserve.transfer.CostOracle
    :param oracle: Cost oracle of the network.

    :rtype: netreserve.simplex.Distribution
    :return: The distribution *P^t*.
    """
    j = index_of(oracle.config, state.b_prev)
    gradient = oracle.reservation_costs + state.lambda_ * oracle.column(j)
    return project_simplex(state.P_prev.p - state.alpha * gradient)


def dual_step(lambda_, expected_cost, v, mu):
    """
    Projected dual ascent step: ``max(0, λ + μ (expected_cost - v))``.

    :rtype: float
    """
    return max(0.0, lambda_ + mu * (expected_cost - v))


def saddle_step(state, b_observed, rng, oracle):
    """
    Play one slot of the saddle-point policy.

    :type  state: SaddleState
    :param state: State at the beginning of the slot.

    :param b_observed: The request observed at the beginning of the slot (*b^{t-1}*).

    :type  rng: numpy.random.Generator
    :param rng: Random generator of the run.

    :type  oracle: netreserve.transfer.CostOracle
    :param oracle: Cost oracle of the network.

    :return: the tuple (*decision*, *next_state*).
    """
    state = state._replace(b_prev=Reservation.from_value(b_observed))
    distribution = saddle_primal_step(state, oracle)
    index = sample(distribution, rng)
    j = index_of(oracle.config, state.b_prev)
    expected_cost = expectation(distribution, oracle.column(j))
    lambda_ = dual_step(state.lambda_, expected_cost, oracle.config.v, state.mu)
    decision = PolicyDecision(distribution, index, expected_cost)
    return decision, state._replace(P_prev=distribution, lambda_=lambda_)


def initial_distribution(config, mode="uniform"):
    """
    Build the initial distribution *P^0*.

    :param str mode: ``"uniform"``, ``"cheapest"`` (point mass at the
        cheapest reservation) or ``"point:<index>"``.

    :raises ConfigError: if the mode is unknown.
    """
    if mode == "uniform":
        return Distribution.uniform(config.size)
    if mode == "cheapest":
        return Distribution.point_mass(config.size, int(np.argmin(config.reservation_costs())))
    mo = re.match(r"^point:(\d+)$", mode or "")
    if mo:
        index = int(mo.group(1))
        if index >= config.size:
            raise ConfigError("initial point out of range: {0!r}".format(mode))
        return Distribution.point_mass(config.size, index)
    raise ConfigError("unknown initial distribution: {0!r}".format(mode))


class SaddlePointPolicy(BasePolicy):
    """
    Randomized saddle-point policy.
    """

    name = "saddle"
    randomized = True

    def __init__(self, config, oracle=None, **options):
        """
        Construct the policy.

        :param options: policy options.

            -   *alpha* (float, default 0.001): primal step size.
            -   *mu* (float, default 0.1): dual step size.
            -   *lambda_init* (float, default 0.0): initial multiplier *λ_1*.
            -   *initial* (str, default "uniform"): mode of *P^0*,
                see :func:`initial_distribution`.
            -   *initial_request* (tuple of int, default all ones): *b^0*.
        """
        super(SaddlePointPolicy, self).__init__(config, oracle, **options)
        self._initial = initial_distribution(config, options.get("initial", "uniform"))
        self.state = SaddleState(
            self._initial,
            options.get("lambda_init", 0.0),
            config.minimal_reservation(),
            options.get("alpha", 0.001),
            options.get("mu", 0.1),
        )

    @property
    def initial_distribution(self):
        return self._initial

    @property
    def lambda_(self):
        return self.state.lambda_

    def decide(self, b_prev, rng):
        decision, self.state = saddle_step(self.state, b_prev, rng, self.oracle)
        return decision
