# coding: utf-8
"""
Probability Simplex
===================

A :class:`~netreserve.simplex.Distribution` is a probability vector over
the enumerated reservation space (indexed by flat index).

This module implements the geometry used by the randomized policies:
the Euclidean projection onto the simplex, expectations, sampling and
distances.

.. doctest:: simplex_demo

    >>> from netreserve.simplex import Distribution
    >>> from netreserve.simplex import expectation
    >>> from netreserve.simplex import project_simplex

    >>> P = project_simplex([0.5, 0.7])
    >>> [round(p, 12) for p in P]
    [0.4, 0.6]
    >>> round(expectation(P, [1.0, 3.0]), 12)
    2.2

    >>> Distribution([0.5, 0.6])
    Traceback (most recent call last):
        ...
    ValueError: probabilities must sum to 1, got 1.1
"""
import math

import numpy as np

#: Tolerance on the sum of the probabilities.
SUM_TOLERANCE = 1e-9


class Distribution(object):
    """
    Immutable probability vector.

    The probabilities are nonnegative and sum to 1: a vector whose sum is
    within :data:`SUM_TOLERANCE` of 1 is renormalized, others are rejected.
    """
    __slots__ = ("_p",)

    def __init__(self, p):
        """
        Construct a distribution.

        :param p: sequence of nonnegative reals summing to 1.

        :raises ValueError: if the vector is empty, not finite, has negative
            values or does not sum to 1.
        """
        p = np.array(p, dtype=float)
        if p.ndim != 1 or p.size == 0:
            raise ValueError("a distribution must be a non-empty vector")
        if not np.all(np.isfinite(p)):
            raise ValueError("probabilities must be finite")
        if np.any(p < 0):
            raise ValueError("probabilities must be nonnegative")
        total = math.fsum(p)
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise ValueError("probabilities must sum to 1, got {0!r}".format(round(total, 12)))
        if total != 1.0:
            p /= total
        p.flags.writeable = False
        self._p = p

    @classmethod
    def uniform(cls, size):
        """ Uniform distribution over *size* atoms. """
        return cls(np.full(size, 1.0 / size))

    @classmethod
    def point_mass(cls, size, index):
        """ Distribution with a single unit atom at *index*. """
        if not 0 <= index < size:
            raise IndexError(index)
        p = np.zeros(size)
        p[index] = 1.0
        return cls(p)

    def __repr__(self):
        cls = self.__class__.__name__
        return "<{cls}(size={size}, support={support})>".format(cls=cls, size=len(self), support=len(self.support))

    def __len__(self):
        return self._p.size

    def __iter__(self):
        return iter(self._p.tolist())

    def __getitem__(self, index):
        return float(self._p[index])

    def __eq__(self, other):
        if isinstance(other, Distribution):
            return np.array_equal(self._p, other._p)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    @property
    def p(self):
        """ Read-only array of the probabilities. """
        return self._p

    @property
    def support(self):
        """ Indices of the atoms with a positive probability. """
        return tuple(int(index) for index in np.flatnonzero(self._p))

    @property
    def is_point_mass(self):
        return len(self.support) == 1


def _as_array(value):
    if isinstance(value, Distribution):
        return value.p
    return np.asarray(value, dtype=float)


def simplex_threshold(y):
    """
    Threshold *tau* of the Euclidean projection of *y* onto the simplex:
    the projection is *max(y - tau, 0)*.

    The threshold is found by sorting the values in decreasing order
    (O(n log n)).

    :param y: finite real vector.

    :rtype: float
    """
    y = np.asarray(y, dtype=float)
    u = np.sort(y)[::-1]
    cumulative = np.cumsum(u) - 1.0
    ranks = np.arange(1, u.size + 1)
    active = u - cumulative / ranks > 0
    rho = ranks[active][-1]
    return float(cumulative[active][-1] / rho)


def project_simplex(y):
    """
    Euclidean projection of a vector onto the probability simplex:
    *argmin_{P in simplex} ||P - y||²*.

    :param y: finite real vector.

    :rtype: Distribution

    :raises ValueError: if the vector is empty or has non-finite values.
    """
    y = np.asarray(y, dtype=float)
    if y.ndim != 1 or y.size == 0:
        raise ValueError("cannot project an empty vector")
    if not np.all(np.isfinite(y)):
        raise ValueError("cannot project a non-finite vector")
    tau = simplex_threshold(y)
    return Distribution(np.maximum(y - tau, 0.0))


def expectation(P, f):
    """
    Expected value *sum_a p_a f_a* of a vector *f* under the distribution *P*.

    :raises ValueError: if the lengths differ.
    """
    p = _as_array(P)
    f = np.asarray(f, dtype=float)
    if p.shape != f.shape:
        raise ValueError("length mismatch: {0} != {1}".format(p.size, f.size))
    return float(np.dot(p, f))


def sample(P, rng):
    """
    Draw an atom index of *P* by inversion of the cumulative distribution
    (in canonical index order).

    :type  P: Distribution
    :param P: Distribution

    :type  rng: numpy.random.Generator
    :param rng: Seeded random generator, owned by the caller.

    :rtype: int
    """
    p = _as_array(P)
    cdf = np.cumsum(p)
    u = rng.random()
    index = int(np.searchsorted(cdf, u, side="right"))
    if index >= p.size:
        # rounding: the cumulative sum stopped below u
        index = int(np.flatnonzero(p)[-1])
    return index


def l2_distance(P, Q):
    """
    Euclidean distance between two distributions (or vectors).

    :raises ValueError: if the lengths differ.
    """
    p = _as_array(P)
    q = _as_array(Q)
    if p.shape != q.shape:
        raise ValueError("length mismatch: {0} != {1}".format(p.size, q.size))
    return float(np.linalg.norm(p - q))
