# coding: utf-8
"""
Run Ledger
==========

A :class:`~netreserve.ledger.RunLedger` records, slot by slot, what a policy
did during a run: the distribution *P^t*, the multiplier *λ_t*, the drawn
reservation *A^t*, the request *b^t*, and the realized and expected costs.
All the metrics and the figure series are derived from it.

The ledger can be written as CSV (one row per slot). The reservations and
requests take one column per server: ``a_1, …, a_N`` and ``b_1, …, b_N``.
"""
import collections
import csv
import io

import numpy as np

from netreserve.network import index_of
from netreserve.network import reservation_at
from netreserve.reservation import Reservation
from netreserve.simplex import expectation
from netreserve.simplex import l2_distance

#: Names of the real-valued columns.
COST_COLUMNS = (
    "lambda_",
    "cost_reservation",
    "expected_reservation",
    "expected_cost",
    "expected_cost_prev",
    "realized_cost",
    "step_distance",
)

LedgerRowTuple = collections.namedtuple("LedgerRowTuple", ("t", "index", "a", "b", "b_prev") + COST_COLUMNS)


class LedgerRow(LedgerRowTuple):
    """
    Record of one slot:

    - *t*: 1-based slot number,
    - *index*: flat index of the drawn reservation *A^t*,
    - *a*: the drawn reservation *A^t*,
    - *b*: the request *b^t*,
    - *b_prev*: the request *b^{t-1}* observed by the policy,
    - *lambda_*: the multiplier *λ_t* used during the slot,
    - *cost_reservation*: *C_R(A^t)*,
    - *expected_reservation*: *E_{P^t}[C_R]*,
    - *expected_cost*: *E_{P^t}[C(·, b^t)]*,
    - *expected_cost_prev*: *E_{P^t}[C(·, b^{t-1})]*,
    - *realized_cost*: *C(A^t, b^t)*,
    - *step_distance*: *||P^t - P^{t-1}||*.
    """
    __slots__ = ()

    def __repr__(self):
        return super(LedgerRow, self).__repr__().replace("LedgerRowTuple", "LedgerRow")


class RunLedger(object):
    """
    Per-slot record of a run.
    """

    def __init__(self, config, initial_distribution, label=None, seed=None):
        """
        Construct an empty ledger.

        :type  config: netreserve.network.NetworkConfig
        :param config: Network

        :type  initial_distribution: netreserve.simplex.Distribution
        :param initial_distribution: The distribution *P^0*.

        :param str label: Label of the policy run.

        :param int seed: Seed of the run.
        """
        self.config = config
        self.initial_distribution = initial_distribution
        self.label = label
        self.seed = seed
        self.final_lambda = 0.0
        self._rows = []
        self._distributions = []

    def __repr__(self):
        cls = self.__class__.__name__
        return "<{cls}(label={label!r}, seed={seed!r}, T={T})>".format(cls=cls, label=self.label, seed=self.seed, T=len(self))

    def __len__(self):
        return len(self._rows)

    def __iter__(self):
        return iter(self._rows)

    @property
    def T(self):
        return len(self._rows)

    def record(self, decision, b, b_prev, lambda_, oracle):
        """
        Append the record of the next slot.

        :type  decision: netreserve.policies.base_policy.PolicyDecision
        :param decision: Decision of the policy.

        :param b: The request *b^t* received during the slot.

        :param b_prev: The request *b^{t-1}* observed by the policy.

        :param float lambda_: The multiplier *λ_t* used during the slot.

        :type  oracle: netreserve.transfer.CostOracle
        :param oracle: Cost oracle of the network.

        :rtype: LedgerRow
        """
        config = self.config
        distribution = decision.distribution
        previous = self._distributions[-1] if self._distributions else self.initial_distribution
        index = decision.sampled_index
        j = index_of(config, b)
        costs = config.reservation_costs()
        row = LedgerRow(
            len(self._rows) + 1,
            index,
            reservation_at(config, index),
            Reservation.from_value(b),
            Reservation.from_value(b_prev),
            float(lambda_),
            float(costs[index]),
            expectation(distribution, costs),
            expectation(distribution, oracle.column(j)),
            float(decision.expected_cost_vs_prev_request),
            oracle.cost(index, j),
            l2_distance(distribution, previous),
        )
        self._rows.append(row)
        self._distributions.append(distribution)
        return row

    def column(self, name):
        """
        Series of a real-valued column.

        :param str name: One of :data:`COST_COLUMNS`, ``"t"`` or ``"index"``.

        :rtype: numpy.ndarray
        """
        if name in ("t", "index"):
            return np.array([getattr(row, name) for row in self._rows], dtype=int)
        if name not in COST_COLUMNS:
            raise KeyError(name)
        return np.array([getattr(row, name) for row in self._rows], dtype=float)

    @property
    def reservations(self):
        """ The drawn reservations *A^1, …, A^T*. """
        return [row.a for row in self._rows]

    @property
    def requests(self):
        """ The requests *b^1, …, b^T*. """
        return [row.b for row in self._rows]

    @property
    def distributions(self):
        """ The distributions *P^1, …, P^T*. """
        return list(self._distributions)

    def distribution_matrix(self):
        """
        Matrix of the distributions: one row per slot, one column per reservation.

        :rtype: numpy.ndarray
        """
        if not self._distributions:
            return np.zeros((0, self.config.size))
        return np.vstack([distribution.p for distribution in self._distributions])

    def header(self):
        N = self.config.N
        return (
            ["t", "index"]
            + ["a_{0}".format(n) for n in range(1, N + 1)]
            + ["b_{0}".format(n) for n in range(1, N + 1)]
            + ["lambda"]
            + list(COST_COLUMNS[1:])
        )

    def write_csv(self, fd):
        """
        Write the ledger as CSV.

        :param fd: text file opened for writing (with ``newline=""``).
        """
        writer = csv.writer(fd, lineterminator="\n")
        writer.writerow(self.header())
        for row in self._rows:
            values = [row.t, row.index] + list(row.a) + list(row.b)
            values.extend(repr(getattr(row, name)) for name in COST_COLUMNS)
            writer.writerow(values)

    def to_csv(self, path):
        """ Write the ledger to a CSV file. """
        with io.open(path, mode="w", encoding="utf-8", newline="") as fd:
            self.write_csv(fd)
