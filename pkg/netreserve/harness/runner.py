# coding: utf-8
"""
Experiment Runner
=================

Run the policies of an experiment over the workload of each seed, and
write the results in the output directory:

- ``ledger_<label>_<seed>.csv``: the ledger of each run;
- ``series_<label>_<seed>.csv``: the time-average series of each run
  (violations, realized and deterministic regrets for each window *K*);
- ``fig_violations.csv``: time-average expected violations;
- ``fig_regret_k1.csv`` and ``fig_regret_kT.csv``: time-average deterministic
  regrets against the 1-benchmark and the *T*-benchmark;
- ``fig_step_distance.csv``: distances between successive distributions;
- ``summary.json``: instance constants, benchmarks, bound reports and final metrics;
- ``timings.json``, only with the *timings* option: wall-clock duration of each run;
- optionally, one SVG chart per figure.

The figure files have one column ``t`` and one column ``<label>@<seed>`` per run.

Every run uses its own random generator, seeded from the seed and the label
of the policy, so the outputs are byte-identical from one invocation to the
other, whatever the number of worker processes. The timings are not: they
are only written on demand.
"""
import collections
import concurrent.futures
import csv
import io
import json
import logging
import os
import time
import zlib

import numpy as np

from netreserve.benchmarks import INFEASIBLE
from netreserve.benchmarks import instance_constants
from netreserve.benchmarks import solve_distribution_K
from netreserve.benchmarks import solve_static_K
from netreserve.bounds import bound_report
from netreserve.errors import InfeasibleError
from netreserve.harness.charts import ChartBuilder
from netreserve.metrics import cumulative_violation
from netreserve.metrics import deterministic_regret_K
from netreserve.metrics import realized_regret_K
from netreserve.metrics import time_average
from netreserve.network import index_of
from netreserve.policies import make_policy
from netreserve.simplex import expectation
from netreserve.simulation import simulate
from netreserve.transfer import get_oracle
from netreserve.workload import generate

LOG = logging.getLogger(__name__)

#: Figure files: ``name -> series name``.
FIGURES = collections.OrderedDict([
    ("fig_violations", "violation"),
    ("fig_regret_k1", "regret_det_k1"),
    ("fig_regret_kT", "regret_det_kT"),
    ("fig_step_distance", "step_distance"),
])

RunResult = collections.namedtuple("RunResult", ["label", "seed", "series", "final", "wall_clock"])


def make_rng(seed, label):
    """
    Random generator of the run of a policy for a seed.

    :rtype: numpy.random.Generator
    """
    return np.random.default_rng(np.random.SeedSequence([seed, zlib.crc32(label.encode("utf-8"))]))


def write_atomic(path, text):
    """ Write a text file atomically: to a temporary file, then renamed. """
    tmp_path = path + ".tmp"
    with io.open(tmp_path, mode="w", encoding="utf-8", newline="") as fd:
        fd.write(text)
    os.replace(tmp_path, path)


def dump_json(value):
    return json.dumps(value, sort_keys=True, indent=2) + "\n"


def dump_csv(header, rows):
    fd = io.StringIO()
    writer = csv.writer(fd, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return fd.getvalue()


def _format(value):
    return repr(float(value))


def _suffixes(K, T):
    # the windows 1 and T keep their own names, even when T = 1
    if K in (1, T):
        return [name for name, value in (("k1", 1), ("kT", T)) if value == K]
    return ["k{0}".format(K)]


def run_policy(cfg, spec, seed, requests, benchmarks, out_dir):
    """
    Run a policy for a seed, write its ledger and series, and compute its metrics.

    :type  cfg: netreserve.harness.config.ExperimentConfig
    :param cfg: Configuration

    :type  spec: netreserve.harness.config.PolicySpec
    :param spec: Policy to run.

    :param int seed: Seed of the run.

    :param requests: Requests of the seed.

    :param benchmarks: Mapping ``K -> (static benchmark, distribution benchmark)``.

    :param str out_dir: Output directory.

    :rtype: RunResult
    """
    started = time.perf_counter()
    config = cfg.network
    oracle = get_oracle(config)
    options = dict(spec.options)
    options.setdefault("initial_request", cfg.initial_request)
    policy = make_policy(spec.kind, config, oracle, **options)
    ledger = simulate(policy, requests, make_rng(seed, spec.label), label=spec.label, seed=seed)
    T = cfg.horizon

    series = collections.OrderedDict()
    series["violation"] = time_average(cumulative_violation(ledger, config.v))
    series["realized_violation"] = time_average(cumulative_violation(ledger, config.v, realized=True))
    series["step_distance"] = ledger.column("step_distance")
    series["lambda"] = ledger.column("lambda_")
    final = {
        "violation": float(series["violation"][-1] * T),
        "realized_violation": float(series["realized_violation"][-1] * T),
        "max_lambda": float(max(series["lambda"].max(), ledger.final_lambda)),
        "final_lambda": float(ledger.final_lambda),
        "median_step_distance": float(np.median(series["step_distance"])),
    }
    for K, (static, distribution) in sorted(benchmarks.items()):
        realized = realized_regret_K(ledger, config, requests, K, oracle, benchmark=static)
        deterministic = deterministic_regret_K(ledger, config, requests, K, oracle, benchmark=distribution)
        for suffix in _suffixes(K, T):
            series["regret_real_" + suffix] = time_average(realized)
            series["regret_det_" + suffix] = time_average(deterministic)
            final["regret_real_" + suffix] = float(realized[-1])
            final["regret_det_" + suffix] = float(deterministic[-1])

    fd = io.StringIO()
    ledger.write_csv(fd)
    write_atomic(os.path.join(out_dir, "ledger_{0}_{1}.csv".format(spec.label, seed)), fd.getvalue())
    rows = [[t] + [_format(values[t - 1]) for values in series.values()] for t in range(1, T + 1)]
    write_atomic(
        os.path.join(out_dir, "series_{0}_{1}.csv".format(spec.label, seed)),
        dump_csv(["t"] + list(series), rows),
    )
    wall_clock = time.perf_counter() - started
    LOG.info("run %s@%d done in %.3fs", spec.label, seed, wall_clock)
    return RunResult(spec.label, seed, series, final, wall_clock)


def solve_benchmarks(cfg, requests, oracle):
    """
    Solve the static and distribution benchmarks of every window length.

    :return: Mapping ``K -> (static benchmark, distribution benchmark)``.

    :raises InfeasibleError: if a benchmark has no feasible solution.
    """
    benchmarks = {}
    for K in cfg.ks:
        static = solve_static_K(cfg.network, requests, K, oracle)
        distribution = solve_distribution_K(cfg.network, requests, K, oracle)
        if static is INFEASIBLE or distribution is INFEASIBLE:
            raise InfeasibleError("the K={0} benchmark is infeasible for the workload".format(K))
        benchmarks[K] = (static, distribution)
    return benchmarks


def _benchmark_value(cfg, benchmarks):
    costs = cfg.network.reservation_costs()
    value = {}
    for K, (static, distribution) in sorted(benchmarks.items()):
        value[str(K)] = {
            "static": list(static),
            "static_cost": float(costs[index_of(cfg.network, static)]),
            "distribution_cost": expectation(distribution, costs),
            "distribution_support": {str(i): distribution[i] for i in distribution.support},
        }
    return value


def _bounds_value(cfg, constants):
    if not constants.has_slater_point:
        return None
    aleph_max = cfg.options.get("aleph_max", 200)
    delta = cfg.options.get("delta", 0.1)
    value = {}
    for spec in cfg.policies:
        if spec.kind != "saddle":
            continue
        alpha = spec.options.get("alpha", 0.001)
        mu = spec.options.get("mu", 0.1)
        value[spec.label] = {
            str(K): bound_report(constants, alpha, mu, cfg.horizon, K, delta=delta, aleph_max=aleph_max).to_value()
            for K in cfg.ks
        }
    return value


def _write_figures(cfg, results, out_dir, svg):
    t = list(range(1, cfg.horizon + 1))
    for name, series_name in FIGURES.items():
        columns = collections.OrderedDict(
            ("{0}@{1}".format(result.label, result.seed), result.series[series_name]) for result in results)
        rows = [[t[k]] + [_format(values[k]) for values in columns.values()] for k in range(cfg.horizon)]
        write_atomic(os.path.join(out_dir, name + ".csv"), dump_csv(["t"] + list(columns), rows))
        if svg:
            builder = ChartBuilder(title=name)
            text = builder.to_string(t, columns)
            write_atomic(os.path.join(out_dir, name + ".svg"), text)


def run_experiment(cfg, out_dir=None, jobs=None, svg=None, timings=None):
    """
    Run an experiment and write its outputs.

    :type  cfg: netreserve.harness.config.ExperimentConfig
    :param cfg: Configuration

    :param str out_dir: Output directory (default: the one of the configuration).

    :param int jobs: Number of worker processes (default: the *jobs* option, 1).

    :param bool svg: Write the SVG charts (default: the *svg* option).

    :param bool timings: Write the wall-clock durations in ``timings.json``
        (default: the *timings* option).

    :return: Sorted list of the written file names.

    :raises InfeasibleError: if a benchmark has no feasible solution.
    """
    out_dir = str(out_dir or cfg.output)
    jobs = jobs or cfg.options.get("jobs", 1)
    svg = cfg.options.get("svg", False) if svg is None else svg
    timings = cfg.options.get("timings", False) if timings is None else timings
    if not os.path.isdir(out_dir):
        os.makedirs(out_dir)
    config = cfg.network
    oracle = get_oracle(config).precompute()
    constants = instance_constants(config, oracle)
    LOG.info("instance constants: theta=%r, eta=%r", constants.theta_bound, constants.eta)

    tasks = []
    benchmark_values = {}
    for seed in cfg.seeds:
        requests = generate(cfg.workload.with_seed(cfg.workload.seed + seed), config, cfg.horizon)
        benchmarks = solve_benchmarks(cfg, requests, oracle)
        benchmark_values[str(seed)] = _benchmark_value(cfg, benchmarks)
        for spec in cfg.policies:
            tasks.append((cfg, spec, seed, requests, benchmarks, out_dir))

    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
            futures = [executor.submit(run_policy, *task) for task in tasks]
            results = [future.result() for future in futures]
    else:
        results = [run_policy(*task) for task in tasks]

    _write_figures(cfg, results, out_dir, svg)
    summary = {
        "horizon": cfg.horizon,
        "network": config.to_value(),
        "workload": cfg.workload.to_value(),
        "ks": cfg.ks,
        "constants": constants.to_value(),
        "benchmarks": benchmark_values,
        "bounds": _bounds_value(cfg, constants),
        "runs": [
            {"label": result.label, "kind": cfg.get_policy(result.label).kind, "seed": result.seed, "final": result.final}
            for result in results
        ],
    }
    write_atomic(os.path.join(out_dir, "summary.json"), dump_json(summary))
    if timings:
        durations = {"{0}@{1}".format(result.label, result.seed): result.wall_clock for result in results}
        write_atomic(os.path.join(out_dir, "timings.json"), dump_json(durations))
    return sorted(name for name in os.listdir(out_dir) if not name.endswith(".tmp"))
