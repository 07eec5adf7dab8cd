# coding: utf-8
"""
Workloads
=========

Generators and readers of job request sequences *b^1, …, b^T*.

A :class:`~netreserve.workload.WorkloadSpec` selects a kind of workload,
its parameters and a seed:

- ``iid-uniform``: each value is drawn independently and uniformly in *{1, …, m_n}*;
- ``periodic``: the requests of a *pattern* are repeated in turn, each one
  during *period* slots (default 1);
- ``bursty``: a *base* request, raised by *height* during the first
  *duty* fraction of each *period*, plus a uniform integer *jitter*;
  the values are clipped to the capacities;
- ``trace``: the requests are read from a CSV file (*path*).

The generation is deterministic given the spec, the network and the horizon.

.. doctest:: workload_demo

    >>> from netreserve.network import NetworkConfig
    >>> from netreserve.workload import WorkloadSpec
    >>> from netreserve.workload import generate

    >>> config = NetworkConfig.uniform([7, 8])
    >>> spec = WorkloadSpec.from_value({"kind": "periodic", "params": {"pattern": [[1, 1], [7, 8]]}})
    >>> [str(b) for b in generate(spec, config, 3)]
    ['(1, 1)', '(7, 8)', '(1, 1)']

Trace files have a header ``t,b_1,…,b_N`` and one row per slot:

.. code-block:: text

    t,b_1,b_2
    1,3,5
    2,7,1
"""
import collections
import csv
import io
import logging

import numpy as np

from netreserve.errors import ConfigError
from netreserve.errors import WorkloadError
from netreserve.reservation import Reservation

LOG = logging.getLogger(__name__)

#: Available kinds of workloads.
KINDS = ("iid-uniform", "periodic", "bursty", "trace")

WorkloadSpecTuple = collections.namedtuple("WorkloadSpecTuple", ["kind", "params", "seed"])


class WorkloadSpec(WorkloadSpecTuple):
    """
    Description of a workload: the *kind*, the kind-specific *params* and the *seed*.
    """
    __slots__ = ()

    def __new__(cls, kind, params=None, seed=0):
        if kind not in KINDS:
            raise ConfigError("unknown workload kind: {0!r}".format(kind))
        return super(WorkloadSpec, cls).__new__(cls, kind, dict(params or {}), int(seed))

    def __repr__(self):
        return super(WorkloadSpec, self).__repr__().replace("WorkloadSpecTuple", "WorkloadSpec")

    def with_seed(self, seed):
        return WorkloadSpec(self.kind, self.params, seed)

    def to_value(self):
        return {"kind": self.kind, "params": self.params, "seed": self.seed}

    @classmethod
    def from_value(cls, value):
        """
        Convert a mapping ``{"kind": ..., "params": {...}, "seed": ...}`` to a workload spec.

        :raises ConfigError: if the mapping is invalid.
        """
        if isinstance(value, cls):
            return value
        if not isinstance(value, dict) or "kind" not in value:
            raise ConfigError("workload must be a mapping with 'kind': {0!r}".format(value))
        return cls(value["kind"], value.get("params"), value.get("seed", 0))


def _clip(values, capacities):
    return np.clip(values, 1, np.asarray(capacities))


def _iid_uniform(spec, capacities, T):
    rng = np.random.default_rng(spec.seed)
    return rng.integers(1, np.asarray(capacities) + 1, size=(T, len(capacities)))


def _periodic(spec, capacities, T):
    pattern = spec.params.get("pattern")
    if not pattern:
        raise ConfigError("periodic workload requires a non-empty 'pattern'")
    period = int(spec.params.get("period", 1))
    if period < 1:
        raise ConfigError("period must be positive: {0!r}".format(period))
    pattern = np.array(pattern, dtype=int)
    steps = (np.arange(T) // period) % len(pattern)
    return pattern[steps]


def _bursty(spec, capacities, T):
    params = spec.params
    N = len(capacities)
    base = np.broadcast_to(np.asarray(params.get("base", 1), dtype=int), (N,))
    height = np.broadcast_to(np.asarray(params.get("height", 1), dtype=int), (N,))
    period = int(params.get("period", 10))
    duty = float(params.get("duty", 0.5))
    jitter = int(params.get("jitter", 0))
    if period < 1 or not 0 <= duty <= 1 or jitter < 0:
        raise ConfigError("invalid bursty parameters: {0!r}".format(params))
    burst = (np.arange(T) % period) < duty * period
    values = base + np.outer(burst, height)
    if jitter:
        rng = np.random.default_rng(spec.seed)
        values = values + rng.integers(-jitter, jitter + 1, size=(T, N))
    return _clip(values, capacities)


def _check_capacities(requests, capacities, first_line=None):
    for t, b in enumerate(requests):
        line = None if first_line is None else first_line + t
        if len(b) != len(capacities):
            raise WorkloadError("expected {0} values, got {1}".format(len(capacities), len(b)), line=line)
        for value, capacity in zip(b, capacities):
            if not 1 <= value <= capacity:
                raise WorkloadError("value {0} out of range 1..{1}".format(value, capacity), line=line)


def generate(spec, config, T):
    """
    Generate the requests of a workload.

    :type  spec: WorkloadSpec
    :param spec: Workload description.

    :type  config: netreserve.network.NetworkConfig
    :param config: Network

    :param int T: Horizon (positive).

    :return: List of *T* requests.

    :raises WorkloadError: if a trace is malformed, too short or out of capacity.
    """
    if T < 1:
        raise ValueError("the horizon must be positive: {0!r}".format(T))
    spec = WorkloadSpec.from_value(spec)
    capacities = config.capacities
    if spec.kind == "trace":
        path = spec.params.get("path")
        if not path:
            raise ConfigError("trace workload requires a 'path'")
        requests = read_trace(path, config)
        if len(requests) < T:
            raise WorkloadError("trace too short: {0} < {1} slots".format(len(requests), T))
        return requests[:T]
    generator = {"iid-uniform": _iid_uniform, "periodic": _periodic, "bursty": _bursty}[spec.kind]
    values = generator(spec, capacities, T)
    _check_capacities(values, capacities)
    LOG.debug("generated %d requests of kind %r (seed %d)", T, spec.kind, spec.seed)
    return [Reservation.from_value(row) for row in values]


def read_trace(path, config=None):
    """
    Read a trace CSV file.

    :param path: Path of the file.

    :type  config: netreserve.network.NetworkConfig
    :param config: Network used to check the capacities (optional).

    :return: List of requests.

    :raises WorkloadError: if the file is malformed; the error carries the line number.
    """
    with io.open(str(path), mode="r", encoding="utf-8", newline="") as fd:
        reader = csv.reader(fd)
        header = next(reader, None)
        if not header or header[0].strip() != "t" or len(header) < 2:
            raise WorkloadError("expected a header 't,b_1,...,b_N'", line=1)
        N = len(header) - 1
        requests = []
        for line, row in enumerate(reader, 2):
            if not row:
                continue
            if len(row) != N + 1:
                raise WorkloadError("expected {0} columns, got {1}".format(N + 1, len(row)), line=line)
            try:
                values = [int(value) for value in row]
            except ValueError:
                raise WorkloadError("invalid integer in {0!r}".format(",".join(row)), line=line)
            if values[0] != len(requests) + 1:
                raise WorkloadError("expected slot {0}, got {1}".format(len(requests) + 1, values[0]), line=line)
            if config is not None:
                _check_capacities([values[1:]], config.capacities, first_line=line)
            requests.append(Reservation(*values[1:]))
    return requests


def write_trace(path, requests):
    """
    Write requests as a trace CSV file.

    :param path: Path of the file.

    :param requests: Non-empty sequence of requests.
    """
    requests = [Reservation.from_value(b) for b in requests]
    N = len(requests[0])
    with io.open(str(path), mode="w", encoding="utf-8", newline="") as fd:
        writer = csv.writer(fd, lineterminator="\n")
        writer.writerow(["t"] + ["b_{0}".format(n) for n in range(1, N + 1)])
        for t, b in enumerate(requests, 1):
            writer.writerow([t] + list(b))
