# coding: utf-8
"""
Naive Bang-Bang Policy
======================

Reserve the cheapest reservation which would have satisfied the budget
for the previous request::

    A^t = argmin C_R(A)  subject to  C(A, b^{t-1}) ≤ v

Ties are broken by flat index. When no reservation satisfies the budget,
the policy falls back to the reservation minimizing *C(A, b^{t-1})*,
then *C_R*, then the flat index.
"""
import logging

import numpy as np

from netreserve.network import index_of
from netreserve.network import reservation_at
from netreserve.policies.base_policy import BasePolicy

LOG = logging.getLogger(__name__)


def naive_index(config, b_prev, oracle):
    """ Flat index of the reservation chosen by :func:`naive_step`. """
    column = oracle.column(index_of(config, b_prev))
    costs = config.reservation_costs()
    feasible = column <= config.v
    if feasible.any():
        return int(np.argmin(np.where(feasible, costs, np.inf)))
    LOG.debug("no reservation satisfies the budget for %s", b_prev)
    order = np.lexsort((np.arange(config.size), costs, column))
    return int(order[0])


def naive_step(config, b_prev, oracle):
    """
    :type  config: netreserve.network.NetworkConfig
    :param config: Network

    :param b_prev: Previous job request *b^{t-1}*.

    :type  oracle: netreserve.transfer.CostOracle
    :param oracle: Cost oracle of the network.

    :rtype: netreserve.reservation.Reservation
    """
    return reservation_at(config, naive_index(config, b_prev, oracle))


class NaivePolicy(BasePolicy):
    """
    Naive bang-bang policy.
    """

    name = "naive"

    def decide(self, b_prev, rng):
        return self.point_decision(naive_index(self.config, b_prev, self.oracle), b_prev)
