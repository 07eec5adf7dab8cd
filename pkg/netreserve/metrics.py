# coding: utf-8
"""
Metrics
=======

Performance series of a run, computed from its ledger:

- the realized regret against the static *K*-benchmark *A*_K*:
  ``sum_t C_R(A^t) - C_R(A*_K)``,
- the deterministic regret against the distribution *K*-benchmark *P*_K*:
  ``sum_t E_{P^t}[C_R] - E_{P*_K}[C_R]``,
- the cumulative constraint violation:
  ``sum_t E_{P^t}[C(·, b^t)] - v``.

All the series are cumulative: the value at the position *t - 1* is the
sum over the slots *1..t*. Use :func:`time_average` to divide by *t*.
"""
import numpy as np

from netreserve.benchmarks import INFEASIBLE
from netreserve.benchmarks import solve_distribution_K
from netreserve.benchmarks import solve_static_K
from netreserve.errors import InfeasibleError
from netreserve.network import index_of
from netreserve.simplex import expectation


def _requests(ledger, requests):
    return ledger.requests if requests is None else requests


def realized_regret_K(ledger, config, requests=None, K=1, oracle=None, benchmark=None):
    """
    Cumulative realized regret against the static *K*-benchmark.

    :type  ledger: netreserve.ledger.RunLedger
    :param ledger: Ledger of the run.

    :type  config: netreserve.network.NetworkConfig
    :param config: Network

    :param requests: Requests of the run (default: the ones of the ledger).

    :param int K: Window length.

    :param benchmark: Precomputed static benchmark (default: solved here).

    :rtype: numpy.ndarray

    :raises InfeasibleError: if the benchmark has no feasible solution.
    """
    if benchmark is None:
        benchmark = solve_static_K(config, _requests(ledger, requests), K, oracle)
    if benchmark is INFEASIBLE:
        raise InfeasibleError("no static reservation satisfies the K={0} windows".format(K))
    best = config.reservation_costs()[index_of(config, benchmark)]
    return np.cumsum(ledger.column("cost_reservation") - best)


def deterministic_regret_K(ledger, config, requests=None, K=1, oracle=None, benchmark=None):
    """
    Cumulative deterministic regret against the distribution *K*-benchmark.

    For the deterministic policies, *P^t* is the point mass at *A^t*.

    :type  ledger: netreserve.ledger.RunLedger
    :param ledger: Ledger of the run.

    :type  config: netreserve.network.NetworkConfig
    :param config: Network

    :param requests: Requests of the run (default: the ones of the ledger).

    :param int K: Window length.

    :param benchmark: Precomputed distribution benchmark (default: solved here).

    :rtype: numpy.ndarray

    :raises InfeasibleError: if the benchmark has no feasible solution.
    """
    if benchmark is None:
        benchmark = solve_distribution_K(config, _requests(ledger, requests), K, oracle)
    if benchmark is INFEASIBLE:
        raise InfeasibleError("no distribution satisfies the K={0} windows".format(K))
    best = expectation(benchmark, config.reservation_costs())
    return np.cumsum(ledger.column("expected_reservation") - best)


def cumulative_violation(ledger, v, realized=False):
    """
    Cumulative constraint violation.

    :type  ledger: netreserve.ledger.RunLedger
    :param ledger: Ledger of the run.

    :param float v: Budget threshold.

    :param bool realized: Use the realized cost *C(A^t, b^t)* instead of the expected one.

    :rtype: numpy.ndarray
    """
    name = "realized_cost" if realized else "expected_cost"
    return np.cumsum(ledger.column(name) - v)


def time_average(series):
    """
    Divide a cumulative series by the number of slots.

    >>> time_average([2.0, 3.0, 3.0]).tolist()
    [2.0, 1.5, 1.0]
    """
    series = np.asarray(series, dtype=float)
    return series / np.arange(1, series.size + 1)
