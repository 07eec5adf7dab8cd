# coding: utf-8
"""
Job Transfers
=============

Once the job requests *b* are received, the jobs which cannot be served
by the reservation *a* of their server (the *deficit* servers) may be
transferred to servers having unused resources (the *surplus* servers).

The transfer plan is the integer matrix *delta*, where *delta[n][m]* is the
number of jobs moved from the server *n* to the server *m*. It minimizes::

    sum_n ( sum_{m != n} f_T[n](delta[n][m]) + f_V[n](b[n] - a[n] - sum_{m != n} delta[n][m]) )

subject to:

- the pairwise bound *delta[n][m] ≤ min{(b[n] - a[n])+, (a[m] - b[m])+}*,
- the receiver bound *sum_n delta[n][m] ≤ (a[m] - b[m])+*.

With two servers, the receiver bound is implied by the pairwise bound.

The resulting violation cost *C_V* and transfer cost *C_T* define the
constrained cost *C(a, b) = C_V(a, b) + C_T(a, b)*.

.. doctest:: transfer_demo

    >>> from netreserve.network import NetworkConfig
    >>> from netreserve.transfer import solve_transfer

    >>> config = NetworkConfig.uniform([3, 3], f_V={"kind": "power", "params": {"c": 1, "p": 1}})
    >>> plan = solve_transfer(config, (3, 1), (1, 3))
    >>> plan.delta
    ((0, 0), (2, 0))
    >>> plan.c_v, plan.c_t
    (0.0, 0.0)
"""
import collections
import csv
import io
import itertools
import logging
import weakref

import numpy as np

from netreserve.errors import CeilingError
from netreserve.network import enumerate_reservations
from netreserve.network import index_of
from netreserve.network import reservation_at
from netreserve.network import validate

LOG = logging.getLogger(__name__)

#: Default ceiling of the number of candidate matrices of :func:`brute_force_transfer`.
MAX_CANDIDATES = 10 ** 7

#: Largest reservation space for which the oracle uses dense tables.
DENSE_LIMIT = 4096

#: Largest number of cached columns of a sparse oracle (least recently used first out).
MAX_COLUMNS = 256

#: Largest number of cached pairs of a sparse oracle; the cache is emptied beyond.
MAX_PAIRS = 10 ** 6

#: Relative tolerance used to detect ties between optimal plans.
TIE_TOLERANCE = 1e-12

TransferPlanTuple = collections.namedtuple("TransferPlanTuple", ["delta", "c_v", "c_t"])


class TransferPlan(TransferPlanTuple):
    """
    Optimal transfer plan: the *delta* matrix (tuple of rows) and the resulting costs *c_v* and *c_t*.
    """
    __slots__ = ()

    def __repr__(self):
        return super(TransferPlan, self).__repr__().replace("TransferPlanTuple", "TransferPlan")

    @property
    def cost(self):
        """ Constrained cost: *c_v + c_t*. """
        return self.c_v + self.c_t


def transfer_costs(config, a, b, delta):
    """
    Compute the violation and transfer costs of a transfer matrix.

    The sums are always done in the same order (row by row) so that two
    identical matrices give bit-identical costs.

    :return: the tuple (*c_v*, *c_t*).
    """
    c_v = 0.0
    c_t = 0.0
    for n, server in enumerate(config.servers):
        row = delta[n]
        moved = 0
        for m, amount in enumerate(row):
            if m != n:
                moved += amount
                c_t += server.f_T(amount)
        c_v += server.f_V(b[n] - a[n] - moved)
    return c_v, c_t


def _build_delta(size, senders, receivers, rows):
    delta = [[0] * size for _ in range(size)]
    for n, row in zip(senders, rows):
        for m, amount in zip(receivers, row):
            delta[n][m] = amount
    return tuple(tuple(row) for row in delta)


def _row_cost(server, deficit, row):
    cost = 0.0
    for amount in row:
        cost += server.f_T(amount)
    return cost + server.f_V(deficit - sum(row))


def solve_transfer(config, a, b):
    """
    Solve the transfer subproblem exactly.

    The solver is a dynamic program over the deficit servers (in index
    order) whose state is the remaining free capacity of each surplus
    server. The transfers of a deficit server only impact the following
    servers through this state, so the search is exact for any cost
    functions. Among optimal plans, the lexicographically smallest
    flattened matrix is selected.

    :type  config: netreserve.network.NetworkConfig
    :param config: Network

    :param a: Reservation

    :param b: Job request

    :rtype: TransferPlan
    :return: Optimal plan.
    """
    a = validate(config, a)
    b = validate(config, b)
    deficit = a.deficit(b)
    surplus = a.surplus(b)
    senders = [n for n in range(config.N) if deficit[n]]
    receivers = [m for m in range(config.N) if surplus[m]]
    servers = config.servers

    memo = {}

    def candidate_rows(pos, remaining):
        limit = deficit[senders[pos]]
        ranges = [range(min(limit, free) + 1) for free in remaining]
        return itertools.product(*ranges)

    def best(pos, remaining):
        if pos == len(senders):
            return 0.0
        key = (pos, remaining)
        if key not in memo:
            n = senders[pos]
            value = None
            for row in candidate_rows(pos, remaining):
                after = tuple(free - amount for free, amount in zip(remaining, row))
                cost = _row_cost(servers[n], deficit[n], row) + best(pos + 1, after)
                if value is None or cost < value:
                    value = cost
            memo[key] = value
        return memo[key]

    rows = []
    remaining = tuple(surplus[m] for m in receivers)
    if receivers:
        for pos, n in enumerate(senders):
            target = best(pos, remaining)
            tolerance = TIE_TOLERANCE * max(1.0, abs(target))
            for row in candidate_rows(pos, remaining):
                after = tuple(free - amount for free, amount in zip(remaining, row))
                cost = _row_cost(servers[n], deficit[n], row) + best(pos + 1, after)
                if cost <= target + tolerance:
                    rows.append(row)
                    remaining = after
                    break
    else:
        rows = [(0,) * len(receivers) for _ in senders]

    delta = _build_delta(config.N, senders, receivers, rows)
    c_v, c_t = transfer_costs(config, a, b, delta)
    return TransferPlan(delta, c_v, c_t)


def brute_force_transfer(config, a, b, max_candidates=MAX_CANDIDATES):
    """
    Solve the transfer subproblem by exhaustive enumeration (verification oracle).

    All the integer matrices within the pairwise bounds are enumerated in
    lexicographic order, the ones violating a receiver bound are skipped.

    :param int max_candidates: ceiling of the number of candidate matrices.

    :rtype: TransferPlan
    :return: Optimal plan, with the same tie-break as :func:`solve_transfer`.

    :raises CeilingError: if the number of candidates exceeds the ceiling.
    """
    a = validate(config, a)
    b = validate(config, b)
    deficit = a.deficit(b)
    surplus = a.surplus(b)
    pairs = [(n, m) for n in range(config.N) for m in range(config.N) if n != m and deficit[n] and surplus[m]]
    count = 1
    for n, m in pairs:
        count *= min(deficit[n], surplus[m]) + 1
    if count > max_candidates:
        raise CeilingError("too many candidate matrices: {count} > {max_candidates}".format(
            count=count, max_candidates=max_candidates))

    best_plan = None
    ranges = [range(min(deficit[n], surplus[m]) + 1) for n, m in pairs]
    for amounts in itertools.product(*ranges):
        delta = [[0] * config.N for _ in range(config.N)]
        for (n, m), amount in zip(pairs, amounts):
            delta[n][m] = amount
        if any(sum(delta[n][m] for n in range(config.N)) > surplus[m] for m in range(config.N)):
            continue
        delta = tuple(tuple(row) for row in delta)
        c_v, c_t = transfer_costs(config, a, b, delta)
        cost = c_v + c_t
        if best_plan is None or cost < best_plan.cost - TIE_TOLERANCE * max(1.0, abs(best_plan.cost)):
            best_plan = TransferPlan(delta, c_v, c_t)
    return best_plan


class CostOracle(object):
    """
    Memoized oracle of the transfer costs *C_V(a, b)*, *C_T(a, b)* and *C(a, b)*,
    addressed by the flat indices of the reservation *a* and of the request *b*.

    Up to :data:`DENSE_LIMIT` reservations, the costs are stored in dense
    tables, above, in a dictionary. The tables are filled lazily, or once
    with :meth:`precompute`; after that the oracle is only read.

    The caches live as long as the oracle, and the shared oracle of
    :func:`get_oracle` as long as its network. The dense tables and
    columns hold at most *|R|²* values. A sparse oracle keeps at most
    *max_columns* columns and *max_pairs* pairs; :meth:`clear` empties
    every cache.
    """

    def __init__(self, config, dense_limit=DENSE_LIMIT, max_columns=MAX_COLUMNS, max_pairs=MAX_PAIRS):
        """
        Construct the oracle of a network.

        :type  config: netreserve.network.NetworkConfig
        :param config: Network

        :param int dense_limit: largest reservation space stored in dense tables.

        :param int max_columns: largest number of cached columns of a sparse oracle.

        :param int max_pairs: largest number of cached pairs of a sparse oracle.
        """
        self.config = config
        self.dense = config.size <= dense_limit
        self.max_columns = max_columns
        self.max_pairs = max_pairs
        self.clear()

    def clear(self):
        """ Empty the caches. """
        size = self.config.size
        if self.dense:
            self._c_v = np.full((size, size), np.nan)
            self._c_t = np.full((size, size), np.nan)
        else:
            self._cache = {}
        self._columns = collections.OrderedDict()

    @property
    def cache_size(self):
        """ Number of cached columns and, for a sparse oracle, of cached pairs. """
        pairs = None if self.dense else len(self._cache)
        return len(self._columns), pairs

    def __repr__(self):
        cls = self.__class__.__name__
        return "<{cls}({config!r})>".format(cls=cls, config=self.config)

    @property
    def reservation_costs(self):
        """ Vector of the reservation costs *C_R* indexed by flat index. """
        return self.config.reservation_costs()

    def _costs(self, i, j):
        if self.dense:
            c_v = self._c_v[i, j]
            if c_v != c_v:  # NaN: not yet computed
                plan = solve_transfer(self.config, reservation_at(self.config, i), reservation_at(self.config, j))
                self._c_v[i, j] = c_v = plan.c_v
                self._c_t[i, j] = plan.c_t
            return float(c_v), float(self._c_t[i, j])
        key = (i, j)
        costs = self._cache.get(key)
        if costs is None:
            if len(self._cache) >= self.max_pairs:
                LOG.debug("cost cache full (%d pairs): cleared", len(self._cache))
                self._cache.clear()
            plan = solve_transfer(self.config, reservation_at(self.config, i), reservation_at(self.config, j))
            costs = self._cache[key] = (plan.c_v, plan.c_t)
        return costs

    def violation_cost(self, i, j):
        """ Violation cost *C_V* of the reservation *i* for the request *j*. """
        return self._costs(i, j)[0]

    def transfer_cost(self, i, j):
        """ Transfer cost *C_T* of the reservation *i* for the request *j*. """
        return self._costs(i, j)[1]

    def cost(self, i, j):
        """ Constrained cost *C = C_V + C_T* of the reservation *i* for the request *j*. """
        c_v, c_t = self._costs(i, j)
        return c_v + c_t

    def column(self, j):
        """
        Vector of the constrained costs *C(a, b)* over all reservations *a*, for the request *j*.

        :rtype: numpy.ndarray
        """
        column = self._columns.get(j)
        if column is None:
            column = np.array([self.cost(i, j) for i in range(self.config.size)], dtype=float)
            column.flags.writeable = False
            self._columns[j] = column
            if not self.dense and len(self._columns) > self.max_columns:
                self._columns.popitem(last=False)
        elif not self.dense:
            self._columns.move_to_end(j)
        return column

    def precompute(self):
        """
        Fill the tables for all the (reservation, request) pairs.

        :return: the oracle itself.
        """
        LOG.debug("precomputing %d transfer plans", self.config.size ** 2)
        for j in range(self.config.size):
            self.column(j)
        return self

    def matrix(self, part="total"):
        """
        Full cost matrix: rows are reservations, columns are requests.

        :param str part: "total" for *C*, "violation" for *C_V*, "transfer" for *C_T*.

        :rtype: numpy.ndarray
        """
        self.precompute()
        size = self.config.size
        if part == "total":
            return np.column_stack([self.column(j) for j in range(size)]) if size else np.zeros((0, 0))
        getter = {"violation": self.violation_cost, "transfer": self.transfer_cost}[part]
        return np.array([[getter(i, j) for j in range(size)] for i in range(size)], dtype=float)

    def dump_csv(self, path):
        """
        Write the cost matrix *C(a, b)* as CSV: one row per reservation index,
        one column per request index.
        """
        size = self.config.size
        with io.open(path, mode="w", encoding="utf-8", newline="") as fd:
            writer = csv.writer(fd, lineterminator="\n")
            writer.writerow(["a"] + ["b{0}".format(j) for j in range(size)])
            for i in range(size):
                writer.writerow([i] + [repr(self.cost(i, j)) for j in range(size)])


_ORACLES = weakref.WeakKeyDictionary()


def get_oracle(config):
    """
    Shared oracle of a network (one per network instance).

    :rtype: CostOracle
    """
    oracle = _ORACLES.get(config)
    if oracle is None:
        oracle = _ORACLES[config] = CostOracle(config)
    return oracle


def total_cost(config, a, b):
    """
    Constrained cost *C(a, b) = C_V(a, b) + C_T(a, b)*, memoized by flat indices.

    :rtype: float
    """
    return get_oracle(config).cost(index_of(config, a), index_of(config, b))


def iter_pairs(config):
    """ Iterate all the (reservation, request) pairs of a network. """
    reservations = enumerate_reservations(config)
    return itertools.product(reservations, reservations)
