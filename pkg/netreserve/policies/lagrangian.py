# coding: utf-8
"""
Lagrangian Combinatorial Policy
===============================

Deterministic primal-dual policy over the reservations themselves::

    A^t = argmin_A C_R(A) + λ_t (C(A, b^{t-1}) - v)
    λ_{t+1} = max(0, λ_t + step (C(A^t, b^{t-1}) - v))

The default dual step is 1.
"""
import collections

import numpy as np

from netreserve.network import index_of
from netreserve.network import reservation_at
from netreserve.policies.base_policy import BasePolicy
from netreserve.policies.base_policy import PolicyDecision
from netreserve.reservation import Reservation
from netreserve.simplex import Distribution

DualStateTuple = collections.namedtuple("DualStateTuple", ["lambda_", "b_prev"])


class DualState(DualStateTuple):
    """
    State of the Lagrangian policy: the multiplier *λ_t* and the previous request *b^{t-1}*.
    """
    __slots__ = ()

    def __new__(cls, lambda_, b_prev):
        if lambda_ < 0:
            raise ValueError("lambda must be nonnegative: {0!r}".format(lambda_))
        return super(DualState, cls).__new__(cls, float(lambda_), Reservation.from_value(b_prev))

    def __repr__(self):
        return super(DualState, self).__repr__().replace("DualStateTuple", "DualState")


def _lagrangian_index(state, config, oracle):
    column = oracle.column(index_of(config, state.b_prev))
    objective = config.reservation_costs() + state.lambda_ * (column - config.v)
    index = int(np.argmin(objective))
    return index, float(column[index])


def lagrangian_combinatorial_step(state, config, b_observed, oracle, step=1.0):
    """
    Play one slot of the Lagrangian policy.

    :type  state: DualState
    :param state: State at the beginning of the slot.

    :type  config: netreserve.network.NetworkConfig
    :param config: Network

    :param b_observed: The request observed at the beginning of the slot (*b^{t-1}*).

    :type  oracle: netreserve.transfer.CostOracle
    :param oracle: Cost oracle of the network.

    :param float step: Dual step size.

    :return: the tuple (*reservation*, *next_state*).
    """
    state = DualState(state.lambda_, b_observed)
    index, cost = _lagrangian_index(state, config, oracle)
    lambda_ = max(0.0, state.lambda_ + step * (cost - config.v))
    return reservation_at(config, index), DualState(lambda_, state.b_prev)


class LagrangianPolicy(BasePolicy):
    """
    Lagrangian combinatorial policy.
    """

    name = "lagrangian"

    def __init__(self, config, oracle=None, **options):
        """
        Construct the policy.

        :param options: policy options.

            -   *step* (float, default 1.0): dual step size.
            -   *lambda_init* (float, default 0.0): initial multiplier *λ_1*.
            -   *initial_request* (tuple of int, default all ones): *b^0*.
        """
        super(LagrangianPolicy, self).__init__(config, oracle, **options)
        self.step = options.get("step", 1.0)
        self.state = DualState(options.get("lambda_init", 0.0), config.minimal_reservation())

    @property
    def lambda_(self):
        return self.state.lambda_

    def decide(self, b_prev, rng):
        a, self.state = lagrangian_combinatorial_step(self.state, self.config, b_prev, self.oracle, self.step)
        index = index_of(self.config, a)
        cost = self.oracle.cost(index, index_of(self.config, b_prev))
        return PolicyDecision(Distribution.point_mass(self.config.size, index), index, cost)
