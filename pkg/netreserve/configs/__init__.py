# coding: utf-8
"""
Experiment Configurations
=========================

Configurations shipped with the package:

- ``two_server.json``: two servers with capacities 7 and 8, threshold *v = 2*,
  the four policies (and the saddle-point policy with the step *α = 0.01*)
  over 500 slots of i.i.d. uniform requests.
"""
import os

#: Directory of the shipped configurations.
CONFIGS_DIR = os.path.dirname(os.path.abspath(__file__))

#: Path of the default experiment configuration.
TWO_SERVER_CONFIG = os.path.join(CONFIGS_DIR, "two_server.json")
