# coding: utf-8
"""
Experiment Configuration
========================

An experiment is described by a JSON document:

.. code-block:: json

    {
      "network": {"servers": [...], "v": 2},
      "workload": {"kind": "iid-uniform", "params": {}, "seed": 0},
      "horizon": 500,
      "initial_request": [1, 1],
      "policies": [
        {"label": "saddle", "kind": "saddle", "alpha": 0.001, "mu": 0.1},
        {"label": "lazy", "kind": "lazy"}
      ],
      "benchmarks": [1, "T"],
      "seeds": [0],
      "output": "out"
    }

The window lengths of the benchmarks are integers in *1..T* or the string
``"T"`` (the horizon). The windows *K = 1* and *K = T* are always computed.

The options of a policy (besides *label* and *kind*) are passed to its
constructor, see :ref:`Available Policies <available-policies>`.

.. doctest:: config_demo

    >>> from netreserve.harness.config import PolicySpec

    >>> PolicySpec.from_value({"kind": "saddle", "alpha": 0.01})
    PolicySpec(label='saddle', kind='saddle', options={'alpha': 0.01})
"""
import collections
import io
import json
import math
import numbers
import os

from netreserve.errors import ConfigError
from netreserve.network import NetworkConfig
from netreserve.network import validate
from netreserve.policies import POLICIES
from netreserve.policies.saddle_point import initial_distribution
from netreserve.workload import WorkloadSpec


def _is_real(value):
    return isinstance(value, numbers.Real) and not isinstance(value, bool) and math.isfinite(value)


def _is_positive(value):
    return _is_real(value) and value > 0


def _is_nonnegative(value):
    return _is_real(value) and value >= 0


def _is_text(value):
    return isinstance(value, str)


def _is_request(value):
    return isinstance(value, (list, tuple))


def _is_count(value):
    return isinstance(value, int) and not isinstance(value, bool) and value >= 1


def _is_flag(value):
    return isinstance(value, bool)


def _is_probability(value):
    return _is_real(value) and 0 < value < 1


#: Options of each kind of policy: ``name -> check``.
POLICY_OPTIONS = {
    "saddle": {
        "alpha": _is_positive,
        "mu": _is_positive,
        "lambda_init": _is_nonnegative,
        "initial": _is_text,
        "initial_request": _is_request,
    },
    "lagrangian": {"step": _is_positive, "lambda_init": _is_nonnegative, "initial_request": _is_request},
    "lazy": {"initial_request": _is_request},
    "naive": {"initial_request": _is_request},
}

#: Options of the harness: ``name -> check``.
HARNESS_OPTIONS = {
    "aleph_max": _is_count,
    "delta": _is_probability,
    "jobs": _is_count,
    "svg": _is_flag,
    "timings": _is_flag,
}


def _check_options(options, checks, what):
    for name, value in sorted(options.items()):
        check = checks.get(name)
        if check is None:
            raise ConfigError("unknown option of {0}: {1!r}".format(what, name))
        if not check(value):
            raise ConfigError("invalid option of {0}: {1}={2!r}".format(what, name, value))


PolicySpecTuple = collections.namedtuple("PolicySpecTuple", ["label", "kind", "options"])


class PolicySpec(PolicySpecTuple):
    """
    Policy of an experiment: a unique *label*, the *kind* of policy (registry name) and its *options*.
    """
    __slots__ = ()

    def __repr__(self):
        return super(PolicySpec, self).__repr__().replace("PolicySpecTuple", "PolicySpec")

    def to_value(self):
        value = {"label": self.label, "kind": self.kind}
        value.update(self.options)
        return value

    @classmethod
    def from_value(cls, value):
        """
        Convert a mapping ``{"label": ..., "kind": ..., <options>}`` or a
        policy name to a policy spec.

        :raises ConfigError: if the kind is unknown or an option is invalid.
        """
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            value = {"kind": value}
        if not isinstance(value, dict):
            raise ConfigError("policy must be a mapping or a name: {0!r}".format(value))
        options = dict(value)
        kind = options.pop("kind", None)
        if kind not in POLICIES:
            raise ConfigError("unknown policy kind: {0!r}".format(kind))
        label = options.pop("label", kind)
        if not isinstance(label, str) or not label:
            raise ConfigError("policy label must be a non-empty string: {0!r}".format(label))
        _check_options(options, POLICY_OPTIONS[kind], "policy {0!r}".format(label))
        return cls(label, kind, options)


class ExperimentConfig(object):
    """
    Configuration of an experiment.
    """

    def __init__(self, network, workload, horizon, policies, benchmarks=(1, "T"), seeds=(0,), output="out",
                 initial_request=None, **options):
        """
        Construct the configuration.

        :param network: Network (or its JSON-like mapping).
        :param workload: Workload spec (or its JSON-like mapping).
        :param int horizon: Horizon *T* (positive).
        :param policies: Non-empty list of policy specs (or mappings).
        :param benchmarks: Window lengths of the benchmarks (integers or ``"T"``).
        :param seeds: Seeds of the runs.
        :param output: Output directory.
        :param initial_request: Initial request *b^0* (default all ones).

        :param options: extra options.

            -   *aleph_max* (int, default 200): largest cap multiplier of the bound report.
            -   *delta* (float, default 0.1): confidence parameter of the bound report.
            -   *svg* (bool, default False): also write the SVG charts.
            -   *jobs* (int, default 1): number of worker processes.
            -   *timings* (bool, default False): also write the wall-clock durations (``timings.json``).

        :raises ConfigError: if the configuration, a policy option or a seed is invalid.
        """
        self.network = NetworkConfig.from_value(network)
        self.workload = WorkloadSpec.from_value(workload)
        if not isinstance(horizon, int) or isinstance(horizon, bool) or horizon < 1:
            raise ConfigError("horizon must be a positive integer: {0!r}".format(horizon))
        self.horizon = horizon
        self.policies = [PolicySpec.from_value(policy) for policy in policies]
        if not self.policies:
            raise ConfigError("at least one policy is required")
        labels = [policy.label for policy in self.policies]
        if len(set(labels)) != len(labels):
            raise ConfigError("policy labels must be unique: {0!r}".format(labels))
        for policy in self.policies:
            self._check_policy(policy)
        self.benchmarks = list(benchmarks)
        self.ks = self._resolve_ks(self.benchmarks)
        if not isinstance(seeds, (list, tuple)) or not seeds:
            raise ConfigError("seeds must be a non-empty list: {0!r}".format(seeds))
        for seed in seeds:
            if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
                raise ConfigError("seeds must be nonnegative integers: {0!r}".format(seed))
        self.seeds = list(seeds)
        self.output = output
        if initial_request is None:
            self.initial_request = self.network.minimal_reservation()
        else:
            try:
                self.initial_request = validate(self.network, initial_request)
            except (TypeError, ValueError):
                raise ConfigError("invalid initial request: {0!r}".format(initial_request))
        _check_options(options, HARNESS_OPTIONS, "the experiment")
        self.options = options

    def __repr__(self):
        cls = self.__class__.__name__
        labels = [policy.label for policy in self.policies]
        return "<{cls}(T={T}, policies={labels!r}, seeds={seeds!r})>".format(
            cls=cls, T=self.horizon, labels=labels, seeds=self.seeds)

    def _check_policy(self, policy):
        # checks which need the network
        options = policy.options
        if "initial_request" in options:
            try:
                validate(self.network, options["initial_request"])
            except (TypeError, ValueError):
                raise ConfigError("invalid initial request of policy {0!r}: {1!r}".format(
                    policy.label, options["initial_request"]))
        if policy.kind == "saddle":
            initial_distribution(self.network, options.get("initial", "uniform"))

    def _resolve_ks(self, benchmarks):
        ks = {1, self.horizon}
        for K in benchmarks:
            if K == "T":
                K = self.horizon
            if not isinstance(K, int) or isinstance(K, bool) or not 1 <= K <= self.horizon:
                raise ConfigError("benchmark window out of range 1..T: {0!r}".format(K))
            ks.add(K)
        return sorted(ks)

    def get_policy(self, label):
        for policy in self.policies:
            if policy.label == label:
                return policy
        raise KeyError(label)

    def replace(self, **changes):
        """
        Copy of the configuration with some fields replaced.

        :param changes: fields to replace: *policies* (list of labels to keep, or specs),
            *seeds*, *benchmarks*, *output*, or any option.
        """
        value = self.to_value()
        policies = changes.pop("policies", None)
        if policies is not None:
            specs = []
            for policy in policies:
                if isinstance(policy, str) and policy in [spec.label for spec in self.policies]:
                    specs.append(self.get_policy(policy).to_value())
                else:
                    specs.append(PolicySpec.from_value(policy).to_value())
            value["policies"] = specs
        value.update(changes)
        return ExperimentConfig.from_value(value)

    def to_value(self):
        value = {
            "network": self.network.to_value(),
            "workload": self.workload.to_value(),
            "horizon": self.horizon,
            "initial_request": list(self.initial_request),
            "policies": [policy.to_value() for policy in self.policies],
            "benchmarks": list(self.benchmarks),
            "seeds": list(self.seeds),
            "output": self.output,
        }
        value.update(self.options)
        return value

    @classmethod
    def from_value(cls, value):
        """
        Convert a JSON-like mapping to a configuration.

        :raises ConfigError: if a mandatory key is missing or a value is invalid.
        """
        if not isinstance(value, dict):
            raise ConfigError("experiment configuration must be a mapping")
        value = dict(value)
        for key in ("network", "workload", "horizon", "policies"):
            if key not in value:
                raise ConfigError("missing key in experiment configuration: {0!r}".format(key))
        return cls(**value)

    @classmethod
    def from_json(cls, path):
        """
        Read a configuration from a JSON file.

        A relative *path* of a trace workload is relative to the directory of the file.

        :raises ConfigError: if the file is not valid JSON or the configuration is invalid.
        """
        with io.open(str(path), mode="r", encoding="utf-8") as fd:
            try:
                value = json.load(fd)
            except ValueError as exc:
                raise ConfigError("{path}: {exc}".format(path=path, exc=exc))
        workload = value.get("workload") if isinstance(value, dict) else None
        if isinstance(workload, dict) and isinstance(workload.get("params"), dict):
            trace_path = workload["params"].get("path")
            if isinstance(trace_path, str) and trace_path and not os.path.isabs(trace_path):
                base_dir = os.path.dirname(os.path.abspath(str(path)))
                workload["params"]["path"] = os.path.join(base_dir, trace_path)
        return cls.from_value(value)
