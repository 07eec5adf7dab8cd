# coding: utf-8
"""
Simulation
==========

Run a policy over a sequence of job requests.

At each slot *t = 1, …, T*, the policy observes the previous request
*b^{t-1}* (the initial request *b^0* at the first slot), decides its
reservation, then the request *b^t* is revealed and the costs are recorded.

.. doctest:: simulation_demo

    >>> from netreserve.network import NetworkConfig
    >>> from netreserve.policies import make_policy
    >>> from netreserve.simulation import simulate

    >>> config = NetworkConfig.uniform([2, 2], v=1.0)
    >>> ledger = simulate(make_policy("lazy", config), [(2, 1), (1, 2)])
    >>> [str(a) for a in ledger.reservations]
    ['(1, 1)', '(2, 1)']
"""
import logging

from netreserve.ledger import RunLedger
from netreserve.network import reservation_at
from netreserve.network import validate

LOG = logging.getLogger(__name__)


def simulate(policy, requests, rng=None, initial_request=None, label=None, seed=None):
    """
    Run a policy over a sequence of requests.

    :type  policy: netreserve.policies.base_policy.BasePolicy
    :param policy: A fresh policy instance.

    :param requests: Sequence of requests *b^1, …, b^T*.

    :type  rng: numpy.random.Generator
    :param rng: Random generator of the run (required by the randomized policies).

    :param initial_request: Request *b^0* (default: the one of the policy).

    :param str label: Label of the run (default: the policy name).

    :param int seed: Seed of the run, recorded in the ledger.

    :rtype: netreserve.ledger.RunLedger
    """
    config = policy.config
    if policy.randomized and rng is None:
        raise ValueError("a random generator is required by {0!r}".format(policy))
    if initial_request is None:
        b_prev = reservation_at(config, policy.initial_index)
    else:
        b_prev = validate(config, initial_request)
    ledger = RunLedger(config, policy.initial_distribution, label=label or policy.name, seed=seed)
    for b in requests:
        b = validate(config, b)
        lambda_ = policy.lambda_
        decision = policy.decide(b_prev, rng)
        ledger.record(decision, b, b_prev, lambda_, policy.oracle)
        b_prev = b
    ledger.final_lambda = policy.lambda_
    LOG.debug("simulated %r: %d slots, final lambda %r", ledger.label, len(ledger), ledger.final_lambda)
    return ledger
