# coding: utf-8
"""
.. _available-policies:

Available Policies
==================

This package contains the online reservation policies:

- ``saddle``: the randomized saddle-point policy (:mod:`netreserve.policies.saddle_point`),
- ``lazy``: the lazy bang-bang policy (:mod:`netreserve.policies.lazy`),
- ``naive``: the naive bang-bang policy (:mod:`netreserve.policies.naive`),
- ``lagrangian``: the Lagrangian combinatorial policy (:mod:`netreserve.policies.lagrangian`).

Use :func:`make_policy` to create a policy by name:

.. doctest:: policies_demo

    >>> from netreserve.network import NetworkConfig
    >>> from netreserve.policies import make_policy

    >>> config = NetworkConfig.uniform([2, 2], v=1.0)
    >>> make_policy("lazy", config)
    <LazyPolicy(<NetworkConfig(capacities=(2, 2), v=1.0)>)>
"""
from netreserve.policies.lagrangian import LagrangianPolicy
from netreserve.policies.lazy import LazyPolicy
from netreserve.policies.naive import NaivePolicy
from netreserve.policies.saddle_point import SaddlePointPolicy

#: Registry of the policies: ``name -> class``.
POLICIES = {cls.name: cls for cls in (SaddlePointPolicy, LazyPolicy, NaivePolicy, LagrangianPolicy)}


def make_policy(name, config, oracle=None, **options):
    """
    Create a policy by name.

    :param str name: name of the policy, see :data:`POLICIES`.

    :type  config: netreserve.network.NetworkConfig
    :param config: Network

    :param oracle: Cost oracle (default: the shared oracle of the network).

    :param options: policy options.

    :raises KeyError: if the name is unknown.
    """
    return POLICIES[name](config, oracle, **options)
