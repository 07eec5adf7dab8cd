# coding: utf-8
"""
Test resources: job request traces (``traces/``).
"""
import py.path

RESOURCES_DIR = py.path.local(__file__).dirpath()

#: Trace files, valid or malformed, read by the workload tests.
TRACES_DIR = RESOURCES_DIR.join("traces")
