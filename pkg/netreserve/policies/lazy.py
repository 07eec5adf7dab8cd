# coding: utf-8
"""
Lazy Bang-Bang Policy
=====================

Reserve exactly what was requested at the previous slot: *A^t = b^{t-1}*.
"""
from netreserve.network import index_of
from netreserve.policies.base_policy import BasePolicy
from netreserve.reservation import Reservation


def lazy_step(b_prev):
    """
    :param b_prev: Previous job request *b^{t-1}*.

    :rtype: netreserve.reservation.Reservation
    """
    return Reservation.from_value(b_prev)


class LazyPolicy(BasePolicy):
    """
    Lazy bang-bang policy.
    """

    name = "lazy"

    def decide(self, b_prev, rng):
        a = lazy_step(b_prev)
        return self.point_decision(index_of(self.config, a), b_prev)
