# coding: utf-8
"""
Errors
======

Exceptions raised by the library.

Invalid arguments raise the usual :class:`ValueError`, :class:`TypeError`
or :class:`KeyError`. The exceptions defined here are reserved to the
domain errors which the command line harness reports as machine-readable
error documents.
"""


class NetReserveError(Exception):
    """
    Base class of the library exceptions.
    """


class ConfigError(NetReserveError, ValueError):
    """
    Raised when a network or experiment configuration is invalid.
    """


class CapacityError(ConfigError):
    """
    Raised when the reservation space is larger than the supported ceiling.
    """


class CeilingError(NetReserveError):
    """
    Raised when an exhaustive enumeration would exceed its ceiling.
    """


class WorkloadError(NetReserveError):
    """
    Raised when a job request trace is malformed.

    :ivar line: 1-based line number of the faulty row (``None`` if unknown).
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = "line {line}: {message}".format(line=line, message=message)
        super(WorkloadError, self).__init__(message)
        self.line = line


class InfeasibleError(NetReserveError):
    """
    Raised when a hindsight benchmark has no feasible solution.
    """


class LPError(NetReserveError):
    """
    Raised when a linear program is unbounded or does not converge.
    """


class HarnessError(NetReserveError):
    """
    Raised when the experiment outputs are missing or inconsistent.
    """
