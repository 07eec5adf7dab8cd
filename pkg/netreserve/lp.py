# coding: utf-8
"""
Linear Programming
==================

Small dense linear program solver: the two-phase primal simplex method with
Bland's rule (which never cycles).

The solved problem is::

    minimize    c·x
    subject to  A_ub·x ≤ b_ub
                A_eq·x = b_eq
                x ≥ 0

The problems solved by the hindsight benchmarks have a few hundred
variables and constraints at most: a dense tableau is enough.

.. doctest:: lp_demo

    >>> from netreserve.lp import linprog

    >>> result = linprog([-1, -1], A_ub=[[1, 2], [3, 1]], b_ub=[4, 6])
    >>> result.status
    'optimal'
    >>> [round(x, 9) for x in result.x], round(result.fun, 9)
    ([1.6, 1.2], -2.8)

    >>> linprog([1], A_eq=[[1]], b_eq=[-1]).status
    'infeasible'
"""
import collections
import logging

import numpy as np

from netreserve.errors import LPError

LOG = logging.getLogger(__name__)

#: Status of a solved program.
OPTIMAL = "optimal"

#: Status of a program without feasible point.
INFEASIBLE = "infeasible"

LPResultTuple = collections.namedtuple("LPResultTuple", ["x", "fun", "status", "nit"])


class LPResult(LPResultTuple):
    """
    Result of :func:`linprog`: the solution *x* (``None`` if infeasible),
    the objective value *fun*, the *status* and the number of pivots *nit*.
    """
    __slots__ = ()

    def __repr__(self):
        return super(LPResult, self).__repr__().replace("LPResultTuple", "LPResult")

    @property
    def success(self):
        return self.status == OPTIMAL


def _as_matrix(matrix, columns):
    if matrix is None:
        return np.zeros((0, columns))
    matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
    if matrix.size == 0:
        return np.zeros((0, columns))
    if matrix.shape[1] != columns:
        raise ValueError("constraint matrix has {0} columns, expected {1}".format(matrix.shape[1], columns))
    return matrix


def _as_vector(vector, rows):
    if vector is None:
        vector = []
    vector = np.asarray(vector, dtype=float).reshape(-1)
    if vector.size != rows:
        raise ValueError("right-hand side has {0} values, expected {1}".format(vector.size, rows))
    return vector


def _pivot(tableau, row, col):
    tableau[row] /= tableau[row, col]
    factors = tableau[:, col].copy()
    factors[row] = 0.0
    tableau -= np.outer(factors, tableau[row])


def _iterate(tableau, basis, columns, tol, max_iter, nit):
    """
    Run simplex pivots until the reduced costs of the allowed *columns* are nonnegative.

    The entering column is the first one with a negative reduced cost, the
    leaving row is the one with the smallest ratio, ties broken by the
    smallest basic variable (Bland's rule).

    :return: the updated number of pivots.
    """
    while True:
        costs = tableau[-1, :-1]
        entering = next((col for col in columns if costs[col] < -tol), None)
        if entering is None:
            return nit
        column = tableau[:-1, entering]
        rows = np.flatnonzero(column > tol)
        if rows.size == 0:
            raise LPError("the linear program is unbounded")
        ratios = tableau[rows, -1] / column[rows]
        best = ratios.min()
        ties = rows[ratios <= best + tol * max(1.0, abs(best))]
        leaving = min(ties, key=lambda row: basis[row])
        _pivot(tableau, leaving, entering)
        basis[leaving] = entering
        nit += 1
        if nit > max_iter:
            raise LPError("iteration limit reached: {0}".format(max_iter))


def linprog(c, A_ub=None, b_ub=None, A_eq=None, b_eq=None, tol=1e-9, max_iter=None):
    """
    Solve a linear program with nonnegative variables.

    :param c: Objective coefficients (length *n*).
    :param A_ub: Inequality matrix (*m_ub × n*), or ``None``.
    :param b_ub: Inequality right-hand side (length *m_ub*).
    :param A_eq: Equality matrix (*m_eq × n*), or ``None``.
    :param b_eq: Equality right-hand side (length *m_eq*).
    :param float tol: Pivoting and feasibility tolerance.
    :param int max_iter: Maximum number of pivots (default: 100 times the tableau size).

    :rtype: LPResult
    :return: The solution, or a result with the status ``"infeasible"``
        if the feasible region is empty.

    :raises LPError: if the program is unbounded or the iteration limit is reached.
    """
    c = np.asarray(c, dtype=float).reshape(-1)
    n = c.size
    A_ub = _as_matrix(A_ub, n)
    A_eq = _as_matrix(A_eq, n)
    b_ub = _as_vector(b_ub, A_ub.shape[0])
    b_eq = _as_vector(b_eq, A_eq.shape[0])
    m_ub = A_ub.shape[0]
    m = m_ub + A_eq.shape[0]

    # standard form: one slack per inequality, nonnegative right-hand side
    A = np.zeros((m, n + m_ub))
    A[:m_ub, :n] = A_ub
    A[:m_ub, n:] = np.eye(m_ub)
    A[m_ub:, :n] = A_eq
    b = np.concatenate([b_ub, b_eq])
    negative = b < 0
    A[negative] *= -1
    b[negative] *= -1

    # one artificial variable per row without a usable slack
    basis = []
    artificial_rows = []
    for row in range(m):
        if row < m_ub and not negative[row]:
            basis.append(n + row)
        else:
            artificial_rows.append(row)
    width = n + m_ub + len(artificial_rows)
    first_artificial = n + m_ub
    tableau = np.zeros((m + 1, width + 1))
    tableau[:m, :n + m_ub] = A
    tableau[:m, -1] = b
    for k, row in enumerate(artificial_rows):
        tableau[row, first_artificial + k] = 1.0
        basis.insert(row, first_artificial + k)
    if max_iter is None:
        max_iter = 100 * (m + width + 1)

    # phase 1: minimize the sum of the artificial variables
    nit = 0
    for row in artificial_rows:
        tableau[-1] -= tableau[row]
    tableau[-1, first_artificial:width] = 0.0
    nit = _iterate(tableau, basis, range(width), tol, max_iter, nit)
    infeasibility = -tableau[-1, -1]
    if infeasibility > tol * max(1.0, float(np.abs(b).sum())):
        LOG.debug("infeasible linear program: residual %g after %d pivots", infeasibility, nit)
        return LPResult(None, None, INFEASIBLE, nit)

    # drive the remaining artificial variables out of the basis
    row = 0
    while row < len(basis):
        if basis[row] >= first_artificial:
            candidates = np.flatnonzero(np.abs(tableau[row, :first_artificial]) > tol)
            if candidates.size:
                _pivot(tableau, row, candidates[0])
                basis[row] = int(candidates[0])
            else:
                # redundant equality
                tableau = np.delete(tableau, row, axis=0)
                del basis[row]
                continue
        row += 1

    # phase 2: original objective on the structural and slack variables
    tableau = np.delete(tableau, np.s_[first_artificial:width], axis=1)
    costs = np.zeros(first_artificial)
    costs[:n] = c
    tableau[-1, :-1] = costs
    tableau[-1, -1] = 0.0
    for row, var in enumerate(basis):
        if costs[var] != 0.0:
            tableau[-1] -= costs[var] * tableau[row]
    nit = _iterate(tableau, basis, range(first_artificial), tol, max_iter, nit)

    x = np.zeros(first_artificial)
    for row, var in enumerate(basis):
        x[var] = tableau[row, -1]
    x = np.maximum(x[:n], 0.0)
    LOG.debug("optimal linear program after %d pivots", nit)
    return LPResult(x, float(np.dot(c, x)), OPTIMAL, nit)
