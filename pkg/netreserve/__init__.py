"""Simulate and benchmark online randomized resource reservations in a network of coupled servers."""

__version__ = "0.1.0"
__author__ = "NetReserve developers"
__date__ = "unreleased"
__credit__ = "(c) 2026 NetReserve developers"
