# coding: utf-8
"""
Command Line Interface
======================

Usage:

.. code-block:: bash

    netreserve run --config two_server.json --out out [--policies saddle,lazy] [--seeds 0..4] [--k 1,T] [--jobs 4] [--svg] [--timings]
    netreserve compare --out out
    netreserve bounds --config two_server.json [--aleph-max 200] [--delta 0.1] [--epsilon 0.1]

Without ``--config``, the shipped two-server configuration is used.

On error, the command exits with the status 1 and writes an error document
``{"error": <class name>, "message": <message>}`` on the standard error
(and in ``error.json`` when the output directory is known).
"""
import argparse
import json
import logging
import os
import sys

from netreserve import __version__
from netreserve.benchmarks import instance_constants
from netreserve.bounds import best_aleph
from netreserve.bounds import bound_report
from netreserve.bounds import epsilon_schedule
from netreserve.configs import TWO_SERVER_CONFIG
from netreserve.errors import ConfigError
from netreserve.errors import NetReserveError
from netreserve.harness.compare import compare_policies
from netreserve.harness.compare import format_table
from netreserve.harness.config import ExperimentConfig
from netreserve.harness.runner import dump_json
from netreserve.harness.runner import run_experiment
from netreserve.harness.runner import write_atomic

LOG = logging.getLogger(__name__)


def parse_seeds(text):
    """
    Parse a list of seeds: ``"0..4"`` (inclusive range) or ``"0,3,7"``.

    >>> parse_seeds("0..3")
    [0, 1, 2, 3]
    >>> parse_seeds("5,2")
    [5, 2]
    """
    try:
        if ".." in text:
            first, last = text.split("..", 1)
            return list(range(int(first), int(last) + 1))
        return [int(item) for item in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("invalid seeds: {0!r}".format(text))


def parse_ks(text):
    """
    Parse a list of window lengths: integers or ``"T"``.

    >>> parse_ks("1,T,5")
    [1, 'T', 5]
    """
    try:
        return [item if item == "T" else int(item) for item in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("invalid window lengths: {0!r}".format(text))


def get_parser():
    parser = argparse.ArgumentParser(prog="netreserve", description="Online randomized resource reservation simulator.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("-v", "--verbose", action="count", default=0, help="increase the verbosity (repeatable)")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="logging level")
    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True

    run_parser = subparsers.add_parser("run", help="run an experiment")
    run_parser.add_argument("--config", default=TWO_SERVER_CONFIG, help="experiment configuration (JSON)")
    run_parser.add_argument("--out", help="output directory (default: the one of the configuration)")
    run_parser.add_argument("--policies", type=lambda text: text.split(","), help="labels of the policies to run")
    run_parser.add_argument("--seeds", type=parse_seeds, help="seeds: '0..n' or '0,1,2'")
    run_parser.add_argument("--k", dest="benchmarks", type=parse_ks, help="window lengths of the benchmarks: '1,T'")
    run_parser.add_argument("--jobs", type=int, default=1, help="number of worker processes")
    run_parser.add_argument("--svg", action="store_true", help="also write the SVG charts")
    run_parser.add_argument("--timings", action="store_true", help="also write the wall-clock durations")

    compare_parser = subparsers.add_parser("compare", help="compare the policies of an experiment")
    compare_parser.add_argument("--out", required=True, help="output directory of the experiment")

    bounds_parser = subparsers.add_parser("bounds", help="compute the theoretical bounds")
    bounds_parser.add_argument("--config", default=TWO_SERVER_CONFIG, help="experiment configuration (JSON)")
    bounds_parser.add_argument("--aleph-max", type=int, default=200, help="largest cap multiplier searched")
    bounds_parser.add_argument("--delta", type=float, default=0.1, help="confidence parameter")
    bounds_parser.add_argument("--epsilon", type=float, help="target accuracy of the epsilon-approximation schedule")
    return parser


def setup_logging(verbose, log_level=None):
    level = log_level or max(logging.DEBUG, logging.WARNING - 10 * verbose)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def run_command(args):
    cfg = ExperimentConfig.from_json(args.config)
    changes = {}
    for name in ("policies", "seeds", "benchmarks"):
        value = getattr(args, name)
        if value is not None:
            changes[name] = value
    if args.out:
        changes["output"] = args.out
    if changes:
        cfg = cfg.replace(**changes)
    args.out = cfg.output
    names = run_experiment(cfg, jobs=args.jobs, svg=args.svg, timings=args.timings)
    for name in names:
        print(os.path.join(cfg.output, name))
    return 0


def compare_command(args):
    rows = compare_policies(args.out)
    sys.stdout.write(format_table(rows))
    return 0


def check_bounds_args(args):
    """
    Check the parameters of the ``bounds`` command.

    :raises ConfigError: if a parameter is out of range.
    """
    if args.aleph_max < 1:
        raise ConfigError("--aleph-max must be a positive integer: {0!r}".format(args.aleph_max))
    if not 0 < args.delta < 1:
        raise ConfigError("--delta must be in ]0, 1[: {0!r}".format(args.delta))
    if args.epsilon is not None and not 0 < args.epsilon < 1:
        raise ConfigError("--epsilon must be in ]0, 1[: {0!r}".format(args.epsilon))


def bounds_command(args):
    check_bounds_args(args)
    cfg = ExperimentConfig.from_json(args.config)
    constants = instance_constants(cfg.network)
    value = {"constants": constants.to_value(), "reports": {}}
    if not constants.has_slater_point:
        raise ConfigError("no Slater point: eta={0!r}".format(constants.eta))
    for spec in cfg.policies:
        if spec.kind != "saddle":
            continue
        alpha = spec.options.get("alpha", 0.001)
        mu = spec.options.get("mu", 0.1)
        aleph, cap = best_aleph(constants, alpha, mu, args.aleph_max)
        reports = {
            str(K): bound_report(constants, alpha, mu, cfg.horizon, K, aleph=aleph, delta=args.delta).to_value()
            for K in cfg.ks
        }
        value["reports"][spec.label] = {"aleph": aleph, "lambda_cap": cap, "by_window": reports}
    if args.epsilon is not None:
        value["epsilon_schedule"] = epsilon_schedule(args.epsilon)._asdict()
    sys.stdout.write(dump_json(value))
    return 0


COMMANDS = {"run": run_command, "compare": compare_command, "bounds": bounds_command}


def main(argv=None):
    """
    Entry point of the ``netreserve`` command.

    :return: the exit status.
    """
    parser = get_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose, args.log_level)
    try:
        return COMMANDS[args.command](args)
    except (NetReserveError, OSError) as exc:
        LOG.debug("command failed", exc_info=True)
        error = {"error": exc.__class__.__name__, "message": str(exc)}
        text = dump_json(error)
        sys.stderr.write(text)
        out_dir = getattr(args, "out", None)
        if out_dir and os.path.isdir(out_dir):
            write_atomic(os.path.join(out_dir, "error.json"), text)
        return 1


if __name__ == "__main__":
    sys.exit(main())
