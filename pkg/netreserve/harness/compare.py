# coding: utf-8
"""
Policy Comparison
=================

Aggregate the outputs of :func:`~netreserve.harness.runner.run_experiment`
into a table with one row per (policy, seed):

- the time-average violation *Υ_T / T*,
- the time-average deterministic regret against the 1-benchmark *R^1_T / T*,
- the time-average realized regret against the 1-benchmark *R̃^1_T / T*,
- the time-average deterministic regret against the *T*-benchmark *R^T_T / T*,
- the wall-clock duration of the run.

The table is written as ``comparison.csv`` and ``comparison.txt`` in the
output directory.
"""
import io
import json
import os

from netreserve.errors import HarnessError
from netreserve.harness.runner import dump_csv
from netreserve.harness.runner import write_atomic

#: Columns of the comparison table.
COLUMNS = ("label", "seed", "violation", "regret_det_k1", "regret_real_k1", "regret_det_kT", "wall_clock")


def _read_json(path):
    with io.open(path, mode="r", encoding="utf-8") as fd:
        try:
            return json.load(fd)
        except ValueError as exc:
            raise HarnessError("{path}: {exc}".format(path=path, exc=exc))


def _format_cell(value):
    return "{0:.6g}".format(value) if isinstance(value, float) else str(value)


def _format_value(value):
    return repr(value) if isinstance(value, float) else value


def format_table(rows):
    """
    Format the rows as an aligned text table.

    >>> print(format_table([{"label": "lazy", "seed": 0, "violation": 0.25}]), end="")
    label  seed  violation
    lazy      0       0.25
    """
    columns = [name for name in COLUMNS if any(name in row for row in rows)]
    cells = [columns]
    for row in rows:
        cells.append([_format_cell(row.get(name, "")) for name in columns])
    widths = [max(len(line[k]) for line in cells) for k in range(len(columns))]
    lines = []
    for line in cells:
        parts = [line[0].ljust(widths[0])] + [cell.rjust(width) for cell, width in zip(line[1:], widths[1:])]
        lines.append("  ".join(parts).rstrip() + "\n")
    return "".join(lines)


def compare_policies(out_dir):
    """
    Build the comparison table of an experiment.

    :param str out_dir: Output directory of the experiment.

    :return: List of rows (mappings).

    :raises HarnessError: if the outputs are missing or inconsistent.
    """
    out_dir = str(out_dir)
    summary_path = os.path.join(out_dir, "summary.json")
    if not os.path.isfile(summary_path):
        raise HarnessError("missing experiment outputs: {0}".format(summary_path))
    summary = _read_json(summary_path)
    timings_path = os.path.join(out_dir, "timings.json")
    timings = _read_json(timings_path) if os.path.isfile(timings_path) else {}
    T = summary.get("horizon")
    runs = summary.get("runs")
    if not T or not runs:
        raise HarnessError("no run in {0}".format(summary_path))

    rows = []
    for run in runs:
        final = run["final"]
        try:
            row = {
                "label": run["label"],
                "seed": run["seed"],
                "violation": final["violation"] / T,
                "regret_det_k1": final["regret_det_k1"] / T,
                "regret_real_k1": final["regret_real_k1"] / T,
                "regret_det_kT": final["regret_det_kT"] / T,
            }
        except KeyError as exc:
            raise HarnessError("incomplete run in {0}: missing {1}".format(summary_path, exc))
        key = "{0}@{1}".format(run["label"], run["seed"])
        if key in timings:
            row["wall_clock"] = timings[key]
        rows.append(row)

    csv_rows = [[_format_value(row.get(name, "")) for name in COLUMNS] for row in rows]
    write_atomic(os.path.join(out_dir, "comparison.csv"), dump_csv(COLUMNS, csv_rows))
    write_atomic(os.path.join(out_dir, "comparison.txt"), format_table(rows))
    return rows
