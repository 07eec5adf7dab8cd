# coding: utf-8
"""
Hindsight Benchmarks
====================

Instance constants and hindsight comparators of the online policies.

Instance constants:

- *Θ*: the smallest constant bounding the absolute values of *C_R*, *C_V* and *C_T*,
- the Slater distribution *P̃* and its margin *η*: *E_{P̃}[C(A, b)] ≤ v - η* for every request *b*.

Hindsight comparators, for a window length *K* and a request sequence *b^1, …, b^T*:

- the *static K-benchmark* *A*_K*: the cheapest reservation (for *C_R*) satisfying the
  budget over every window of *K* consecutive slots,
  ``sum_{k=t}^{t+K-1} C(a, b^k) ≤ K v``;
- the *distribution K-benchmark* *P*_K*: the cheapest distribution satisfying
  the same window constraints in expectation (solved as a linear program).

When no reservation (or distribution) satisfies the windows, the solvers
return the :data:`INFEASIBLE` marker.

.. doctest:: benchmarks_demo

    >>> from netreserve.benchmarks import INFEASIBLE
    >>> from netreserve.benchmarks import solve_static_K
    >>> from netreserve.network import NetworkConfig

    >>> config = NetworkConfig.uniform([2, 2], v=10.0, f_R={"kind": "power", "params": {"c": 1, "p": 1}})
    >>> solve_static_K(config, [(1, 1), (1, 1)], K=1)
    Reservation(1, 1)
    >>> solve_static_K(config.with_threshold(-1.0), [(2, 2)], K=1)
    Infeasible
"""
import collections
import logging

import numpy as np

from netreserve.errors import CeilingError
from netreserve.lp import linprog
from netreserve.network import index_of
from netreserve.network import reservation_at
from netreserve.simplex import Distribution
from netreserve.transfer import get_oracle

LOG = logging.getLogger(__name__)

#: Largest reservation space of the pair sweeps (|R|² pairs).
MAX_SWEEP_SIZE = 4096

#: Tolerance of the window constraints.
WINDOW_TOLERANCE = 1e-9


class _Infeasible(object):
    """ Marker of a benchmark without feasible solution. """

    __slots__ = ()

    def __repr__(self):
        return "Infeasible"

    def __bool__(self):
        return False


#: Returned by the benchmark solvers when no solution satisfies the windows.
INFEASIBLE = _Infeasible()

InstanceConstantsTuple = collections.namedtuple("InstanceConstantsTuple", ["theta_bound", "eta", "slater", "v"])


class InstanceConstants(InstanceConstantsTuple):
    """
    Constants of a network instance: the bound *Θ* (*theta_bound*), the
    Slater margin *η* (*eta*), the Slater distribution *P̃* (*slater*) and the threshold *v*.
    """
    __slots__ = ()

    def __repr__(self):
        return "InstanceConstants(theta_bound={0!r}, eta={1!r}, slater={2!r}, v={3!r})".format(*self)

    @property
    def has_slater_point(self):
        """ ``True`` if the Slater margin is positive. """
        return self.eta > 0

    def to_value(self):
        slater = self.slater
        return {
            "theta_bound": self.theta_bound,
            "eta": self.eta,
            "v": self.v,
            "slater_support": {str(index): slater[index] for index in slater.support},
        }


def _check_sweep(config):
    if config.size > MAX_SWEEP_SIZE:
        raise CeilingError("pair sweep too large: {size}² pairs".format(size=config.size))


def compute_theta(config, oracle=None):
    """
    Compute *Θ*, the maximum of *|C_R(a)|*, *|C_V(a, b)|* and *|C_T(a, b)|* over all pairs.

    :type  config: netreserve.network.NetworkConfig
    :param config: Network

    :rtype: float

    :raises CeilingError: if the reservation space is too large for the pair sweep.
    """
    _check_sweep(config)
    oracle = oracle or get_oracle(config)
    parts = [
        np.abs(config.reservation_costs()),
        np.abs(oracle.matrix("violation")).ravel(),
        np.abs(oracle.matrix("transfer")).ravel(),
    ]
    return float(max(part.max() for part in parts))


def compute_slater(config, oracle=None):
    """
    Compute the distribution *P̃* maximizing the margin ``η = v - max_b E_P[C(A, b)]``.

    The min-max problem is solved as the linear program::

        minimize s  subject to  sum_a p_a C(a, b) ≤ s  for every b,  p in the simplex

    where *s* is a free variable (written as the difference of two nonnegative ones).

    :type  config: netreserve.network.NetworkConfig
    :param config: Network

    :return: the tuple (*P̃*, *η*). A nonpositive *η* means that there is no Slater point.

    :raises CeilingError: if the reservation space is too large for the pair sweep.
    """
    _check_sweep(config)
    oracle = oracle or get_oracle(config)
    size = config.size
    matrix = oracle.matrix()
    rows = np.unique(matrix.T, axis=0)
    A_ub = np.hstack([rows, -np.ones((rows.shape[0], 1)), np.ones((rows.shape[0], 1))])
    A_eq = np.hstack([np.ones((1, size)), np.zeros((1, 2))])
    c = np.zeros(size + 2)
    c[size] = 1.0
    c[size + 1] = -1.0
    result = linprog(c, A_ub=A_ub, b_ub=np.zeros(rows.shape[0]), A_eq=A_eq, b_eq=[1.0])
    slater = _as_distribution(result.x[:size])
    eta = config.v - float(np.max(np.dot(slater.p, matrix)))
    if eta <= 0:
        LOG.info("no Slater point: best margin %r", eta)
    return slater, eta


def instance_constants(config, oracle=None):
    """
    Compute the constants of a network instance.

    :rtype: InstanceConstants
    """
    oracle = oracle or get_oracle(config)
    theta = compute_theta(config, oracle)
    slater, eta = compute_slater(config, oracle)
    return InstanceConstants(theta, eta, slater, config.v)


def _as_distribution(x):
    p = np.maximum(np.asarray(x, dtype=float), 0.0)
    return Distribution(p / p.sum())


def _check_window(requests, K):
    T = len(requests)
    if not 1 <= K <= T:
        raise ValueError("window length out of range: K={0!r}, T={1!r}".format(K, T))


def window_sums(config, requests, K, oracle=None):
    """
    Window sums ``W[a, t] = sum_{k=t}^{t+K-1} C(a, b^k)`` computed with prefix sums.

    :type  config: netreserve.network.NetworkConfig
    :param config: Network

    :param requests: Sequence of requests *b^1, …, b^T*.

    :param int K: Window length, in *1..T*.

    :rtype: numpy.ndarray
    :return: Matrix of shape (|R|, T - K + 1).
    """
    _check_window(requests, K)
    oracle = oracle or get_oracle(config)
    costs = np.column_stack([oracle.column(index_of(config, b)) for b in requests])
    prefix = np.zeros((config.size, costs.shape[1] + 1))
    np.cumsum(costs, axis=1, out=prefix[:, 1:])
    return prefix[:, K:] - prefix[:, :-K]


def solve_static_K(config, requests, K, oracle=None):
    """
    Solve the static *K*-benchmark by exhaustive search.

    :type  config: netreserve.network.NetworkConfig
    :param config: Network

    :param requests: Sequence of requests *b^1, …, b^T*.

    :param int K: Window length, in *1..T*.

    :return: The cheapest feasible reservation (smallest flat index on ties),
        or :data:`INFEASIBLE`.
    """
    sums = window_sums(config, requests, K, oracle)
    budget = K * config.v
    feasible = np.all(sums <= budget + WINDOW_TOLERANCE * max(1.0, abs(budget)), axis=1)
    if not feasible.any():
        LOG.info("static benchmark infeasible for K=%d", K)
        return INFEASIBLE
    costs = config.reservation_costs()
    return reservation_at(config, int(np.argmin(np.where(feasible, costs, np.inf))))


def solve_distribution_K(config, requests, K, oracle=None):
    """
    Solve the distribution *K*-benchmark: the linear program::

        minimize    sum_a p_a C_R(a)
        subject to  sum_a p_a W[a, t] ≤ K v  for every window t
                    p in the simplex

    :type  config: netreserve.network.NetworkConfig
    :param config: Network

    :param requests: Sequence of requests *b^1, …, b^T*.

    :param int K: Window length, in *1..T*.

    :return: The optimal :class:`~netreserve.simplex.Distribution`, or :data:`INFEASIBLE`.
    """
    sums = window_sums(config, requests, K, oracle)
    rows = np.unique(sums.T, axis=0)
    size = config.size
    result = linprog(
        config.reservation_costs(),
        A_ub=rows,
        b_ub=np.full(rows.shape[0], K * config.v),
        A_eq=np.ones((1, size)),
        b_eq=[1.0],
    )
    if not result.success:
        LOG.info("distribution benchmark infeasible for K=%d", K)
        return INFEASIBLE
    return _as_distribution(result.x)
