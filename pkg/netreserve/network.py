# coding: utf-8
"""
Network Model
=============

A network is made of *N* servers. The *n*-th server has a capacity *m_n*
and three cost functions: the reservation cost *f_R*, the violation cost
*f_V* and the transfer cost *f_T* (see :mod:`netreserve.cost`).
The network also defines the threshold *v*: the per-slot budget of
violation and transfer costs.

The set of possible reservations is the Cartesian product of the ranges
*{1, …, m_n}*. It is enumerated in mixed-radix order (the last coordinate
varies the fastest): the position of a reservation in this order is its
*flat index*.

.. doctest:: network_demo

    >>> from netreserve.network import NetworkConfig
    >>> from netreserve.network import enumerate_reservations
    >>> from netreserve.network import index_of
    >>> from netreserve.network import reservation_at

    >>> config = NetworkConfig.uniform([2, 3], v=1.0)
    >>> config.size
    6
    >>> [str(a) for a in enumerate_reservations(config)]
    ['(1, 1)', '(1, 2)', '(1, 3)', '(2, 1)', '(2, 2)', '(2, 3)']
    >>> index_of(config, (2, 1))
    3
    >>> reservation_at(config, 5)
    Reservation(2, 3)

The configuration can be read from a JSON document:

.. code-block:: json

    {
      "servers": [
        {
          "capacity": 7,
          "f_R": {"kind": "power", "params": {"c": 0.3, "p": 2}},
          "f_V": {"kind": "power", "params": {"c": 0.1, "p": 2}},
          "f_T": {"kind": "log-affine", "params": {"a": 1, "b": 1}}
        }
      ],
      "v": 2
    }
"""
import collections
import io
import itertools
import json

import numpy as np

from netreserve.cost import CostFn
from netreserve.cost import zero_cost
from netreserve.errors import CapacityError
from netreserve.errors import ConfigError
from netreserve.reservation import Reservation

#: Default ceiling of the reservation space size.
MAX_RESERVATIONS = 10 ** 6

ServerTuple = collections.namedtuple("ServerTuple", ["capacity", "f_R", "f_V", "f_T"])


class Server(ServerTuple):
    """
    A server: its *capacity* and its reservation, violation and transfer cost functions.
    """
    __slots__ = ()

    def __repr__(self):
        return super(Server, self).__repr__().replace("ServerTuple", "Server")

    @classmethod
    def from_value(cls, value):
        """
        Convert a mapping ``{"capacity": ..., "f_R": ..., "f_V": ..., "f_T": ...}`` to a server.

        Missing cost functions default to zero.

        :raises ConfigError: if the capacity is missing or the costs are invalid.
        """
        if isinstance(value, cls):
            return value
        if not isinstance(value, dict):
            raise ConfigError("server must be a mapping: {0!r}".format(value))
        try:
            capacity = value["capacity"]
        except KeyError:
            raise ConfigError("server capacity is missing: {0!r}".format(value))
        try:
            costs = [CostFn.from_value(value[name]) if name in value else zero_cost() for name in ("f_R", "f_V", "f_T")]
        except (TypeError, ValueError) as exc:
            raise ConfigError("invalid cost function: {0}".format(exc))
        return cls(capacity, *costs)

    def to_value(self):
        return {
            "capacity": self.capacity,
            "f_R": self.f_R.to_value(),
            "f_V": self.f_V.to_value(),
            "f_T": self.f_T.to_value(),
        }


class NetworkConfig(object):
    """
    Immutable description of a network instance.

    The instance can be shared between threads: the cached vectors are
    computed once and never modified afterwards.
    """
    __slots__ = ("_servers", "_v", "_strides", "_size", "_max_size", "_reservation_costs", "__weakref__")

    def __init__(self, servers, v, max_size=MAX_RESERVATIONS):
        """
        Construct a network.

        :type  servers: typing.Sequence[Server]
        :param servers: List of servers (at least one).

        :param float v: Nonnegative budget threshold of violation and transfer costs.

        :param int max_size:
            Ceiling of the reservation space size (product of the capacities).

        :raises ConfigError: if the servers or the threshold are invalid.

        :raises CapacityError: if the reservation space exceeds the ceiling.
        """
        servers = tuple(Server.from_value(server) for server in servers)
        if not servers:
            raise ConfigError("the network must have at least one server")
        for server in servers:
            capacity = server.capacity
            if not isinstance(capacity, int) or isinstance(capacity, bool) or capacity < 1:
                raise ConfigError("capacities must be positive integers: {0!r}".format(capacity))
            for cost in server[1:]:
                if getattr(cost, "size", capacity) < capacity:
                    raise ConfigError("cost table shorter than the capacity: {0!r}".format(cost))
        size = 1
        for server in servers:
            size *= server.capacity
        if size > max_size:
            raise CapacityError("reservation space too large: {size} > {max_size}".format(size=size, max_size=max_size))
        self._servers = servers
        self._v = float(v)
        self._size = size
        self._max_size = max_size
        strides = []
        stride = 1
        for server in reversed(servers):
            strides.insert(0, stride)
            stride *= server.capacity
        self._strides = tuple(strides)
        self._reservation_costs = None

    def __repr__(self):
        cls = self.__class__.__name__
        return "<{cls}(capacities={caps!r}, v={v!r})>".format(cls=cls, caps=self.capacities, v=self.v)

    @property
    def servers(self):
        return self._servers

    @property
    def N(self):
        """ Number of servers. """
        return len(self._servers)

    @property
    def capacities(self):
        return tuple(server.capacity for server in self._servers)

    @property
    def v(self):
        """ Budget threshold of violation and transfer costs. """
        return self._v

    @property
    def size(self):
        """ Number of possible reservations. """
        return self._size

    @property
    def strides(self):
        return self._strides

    def full_reservation(self):
        """ The reservation of all the available resources. """
        return Reservation(*self.capacities)

    def minimal_reservation(self):
        """ The reservation of one resource per server (also the default initial request). """
        return Reservation(*(1 for _ in self._servers))

    def reservation_costs(self):
        """
        Vector of the reservation costs indexed by flat index.

        :rtype: numpy.ndarray
        """
        if self._reservation_costs is None:
            costs = np.array([reservation_cost(self, a) for a in enumerate_reservations(self)], dtype=float)
            costs.flags.writeable = False
            self._reservation_costs = costs
        return self._reservation_costs

    def with_threshold(self, v):
        """ Copy of this network with another threshold (and the same size ceiling). """
        return NetworkConfig(self._servers, v, max_size=self._max_size)

    def to_value(self):
        return {"servers": [server.to_value() for server in self._servers], "v": self._v}

    @classmethod
    def from_value(cls, value, max_size=MAX_RESERVATIONS):
        """
        Convert a JSON-like mapping ``{"servers": [...], "v": ...}`` to a network.

        :raises ConfigError: if the mapping is invalid.
        """
        if isinstance(value, cls):
            return value
        if not isinstance(value, dict) or "servers" not in value:
            raise ConfigError("network must be a mapping with 'servers': {0!r}".format(value))
        v = value.get("v", 0.0)
        if not isinstance(v, (int, float)) or v < 0:
            raise ConfigError("threshold v must be a nonnegative number: {0!r}".format(v))
        return cls(value["servers"], v, max_size=max_size)

    @classmethod
    def from_json(cls, path):
        """ Read a network from a JSON file. """
        with io.open(path, mode="r", encoding="utf-8") as fd:
            try:
                value = json.load(fd)
            except ValueError as exc:
                raise ConfigError("{path}: {exc}".format(path=path, exc=exc))
        return cls.from_value(value.get("network", value))

    @classmethod
    def uniform(cls, capacities, v=0.0, f_R=None, f_V=None, f_T=None):
        """
        Construct a network whose servers share the same cost functions.

        Missing cost functions are zero everywhere.
        """
        costs = [CostFn.from_value(cost) if cost is not None else zero_cost() for cost in (f_R, f_V, f_T)]
        return cls([Server(capacity, *costs) for capacity in capacities], v)


def enumerate_reservations(config):
    """
    Enumerate the possible reservations in mixed-radix order (last coordinate fastest).

    :type  config: NetworkConfig
    :param config: Network

    :return: List of reservations; the position in the list is the flat index.
    """
    ranges = [range(1, capacity + 1) for capacity in config.capacities]
    return [Reservation(*values) for values in itertools.product(*ranges)]


def validate(config, a):
    """
    Check that a reservation (or a job request) fits the capacities of the network.

    :return: The reservation.

    :raises ValueError: if a value is out of range or the length is wrong.
    """
    a = Reservation.from_value(a)
    if len(a) != config.N:
        raise ValueError(a)
    for value, capacity in zip(a, config.capacities):
        if not 1 <= value <= capacity:
            raise ValueError(a)
    return a


def index_of(config, a):
    """
    Flat index of a reservation.

    :raises ValueError: if the reservation does not fit the network.
    """
    a = validate(config, a)
    return sum((value - 1) * stride for value, stride in zip(a, config.strides))


def reservation_at(config, index):
    """
    Reservation at a given flat index (inverse of :func:`index_of`).

    :raises IndexError: if the index is out of range.
    """
    if not 0 <= index < config.size:
        raise IndexError(index)
    values = []
    for stride in config.strides:
        q, index = divmod(index, stride)
        values.append(q + 1)
    return Reservation(*values)


def reservation_cost(config, a):
    """
    Reservation cost *C_R(a)*: sum of the server reservation costs.

    :rtype: float
    """
    return sum(server.f_R(value) for server, value in zip(config.servers, a))
