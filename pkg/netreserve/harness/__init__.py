# coding: utf-8
"""
Experiment Harness
==================

This package runs the experiments: it loads a configuration
(:mod:`netreserve.harness.config`), runs the policies and writes the ledgers,
the figure series and the summary (:mod:`netreserve.harness.runner`),
compares the policies (:mod:`netreserve.harness.compare`) and draws the
figures as SVG charts (:mod:`netreserve.harness.charts`).

The command line interface is in :mod:`netreserve.harness.cli`.
"""
