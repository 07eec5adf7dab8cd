# coding: utf-8
"""
Base Policy
===========

Base class of the online reservation policies.

At the beginning of each slot *t*, a policy observes the previous job
request *b^{t-1}*, chooses a distribution *P^t* over the reservations
and draws the reservation *A^t* from it. Deterministic policies use a
point mass.
"""
import collections

from netreserve.network import index_of
from netreserve.simplex import Distribution
from netreserve.transfer import get_oracle

PolicyDecisionTuple = collections.namedtuple(
    "PolicyDecisionTuple", ["distribution", "sampled_index", "expected_cost_vs_prev_request"])


class PolicyDecision(PolicyDecisionTuple):
    """
    Decision of a policy for one slot:

    - *distribution*: the distribution *P^t*,
    - *sampled_index*: flat index of the drawn reservation *A^t*,
    - *expected_cost_vs_prev_request*: *E_{P^t}[C(A, b^{t-1})]*.
    """
    __slots__ = ()

    def __repr__(self):
        return super(PolicyDecision, self).__repr__().replace("PolicyDecisionTuple", "PolicyDecision")


class BasePolicy(object):
    """
    Base class of the policies.

    A policy instance is a single-threaded state machine: use one instance per run.
    """

    #: Registry name of the policy.
    name = None

    #: ``True`` if the policy draws its reservations at random.
    randomized = False

    def __init__(self, config, oracle=None, **options):
        """
        Construct a policy.

        :type  config: netreserve.network.NetworkConfig
        :param config: Network

        :type  oracle: netreserve.transfer.CostOracle
        :param oracle: Cost oracle (default: the shared oracle of the network).

        :param options: policy options.

            -   *initial_request* (tuple of int, default all ones): *b^0*.
        """
        self.config = config
        self.oracle = oracle or get_oracle(config)
        self.options = options
        initial_request = options.get("initial_request")
        if initial_request is None:
            initial_request = config.minimal_reservation()
        self.initial_index = index_of(config, initial_request)

    def __repr__(self):
        cls = self.__class__.__name__
        return "<{cls}({config!r})>".format(cls=cls, config=self.config)

    @property
    def initial_distribution(self):
        """
        Distribution *P^0* used to measure the first step distance.

        Deterministic policies start from the point mass at *b^0*.
        """
        return Distribution.point_mass(self.config.size, self.initial_index)

    @property
    def lambda_(self):
        """ Current Lagrange multiplier *λ_t* (zero for the policies without multiplier). """
        return 0.0

    def decide(self, b_prev, rng):
        """
        Choose the reservation of the current slot.

        :type  b_prev: netreserve.reservation.Reservation
        :param b_prev: Previous job request *b^{t-1}*.

        :type  rng: numpy.random.Generator
        :param rng: Random generator of the run.

        :rtype: PolicyDecision
        """
        raise NotImplementedError

    def point_decision(self, index, b_prev):
        """
        Decision of a deterministic policy which reserves the reservation *index*.
        """
        j = index_of(self.config, b_prev)
        distribution = Distribution.point_mass(self.config.size, index)
        return PolicyDecision(distribution, index, self.oracle.cost(index, j))
