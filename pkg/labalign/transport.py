#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# labalign transport
# couplings from the cross-domain cost
#

from dataclasses import dataclass, field
import warnings

import numpy as np
import ot
from scipy.optimize import linear_sum_assignment

from .errors import NumericalError, ValidationError
from .utils.utils import as_array, stable_order

MASS_TOL = 1e-10
# largest row/column minimum of D/epsilon handled without the log-domain solver
LOG_DOMAIN_THRESHOLD = 30.0


@dataclass
class MassVectors:
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        self.a = np.asarray(self.a, dtype=float).ravel()
        self.b = np.asarray(self.b, dtype=float).ravel()
        if np.any(self.a <= 0) or np.any(self.b <= 0):
            raise ValidationError("masses must be strictly positive")
        gap = abs(self.a.sum() - self.b.sum())
        if gap > MASS_TOL:
            raise ValidationError("total masses differ by %.3e (%s vs %s)" % (gap, self.a.sum(), self.b.sum()))


@dataclass
class Coupling:
    values: np.ndarray
    epsilon: float = 0.0
    converged: bool = True
    iterations: int = 0
    method: str = "assignment"
    marginal_violation: float = 0.0
    error_history: list = field(default_factory=list)

    @property
    def shape(self):
        return self.values.shape

    def summary(self):
        return {
            "method": self.method,
            "epsilon": self.epsilon,
            "converged": bool(self.converged),
            "iterations": int(self.iterations),
            "marginal_violation": float(self.marginal_violation),
        }


def uniform_masses(n, m):
    """unit mass on the source, n/m on the target so both sides carry n"""
    if n < 1 or m < 1:
        raise ValidationError("need n, m >= 1, got %d and %d" % (n, m))
    return MassVectors(np.ones(n), np.full(m, n / m))


def _marginal_violation(T, masses):
    rows = np.max(np.abs(T.sum(axis=1) - masses.a))
    cols = np.max(np.abs(T.sum(axis=0) - masses.b))
    return float(max(rows, cols))


def exact_assignment(D):
    """permutation coupling of minimum total cost (linear assignment)"""
    cost = as_array(D)
    if cost.ndim != 2 or cost.shape[0] != cost.shape[1]:
        raise ValidationError("exact assignment needs a square cost, got shape %s; "
                              "use epsilon > 0 for unequal sample counts" % (cost.shape,))
    rows, cols = linear_sum_assignment(cost)
    values = np.zeros_like(cost)
    values[rows, cols] = 1.0
    return Coupling(values, epsilon=0.0, converged=True, iterations=0, method="assignment")


def sinkhorn(D, masses=None, epsilon=1e-3, tol=1e-9, max_iter=10000):
    """Entropic optimal transport with the cross cost

    Solves min <T, D> + epsilon * sum T log T over couplings with marginals
    (a, b). Switches to the log-domain solver when some row or column of
    exp(-D/epsilon) would be too small to represent.

    Args:
        D (CrossCost or array): n x m cost
        masses (MassVectors): defaults to uniform_masses(n, m)
        epsilon (float): regularization, > 0
        tol (float): stop when the marginal violation drops below tol
        max_iter (int): iteration cap; hitting it is flagged, not fatal

    Returns:
        Coupling
    """
    cost = as_array(D)
    n, m = cost.shape
    if epsilon <= 0:
        raise ValidationError("sinkhorn needs epsilon > 0, got %s" % epsilon)
    if tol <= 0 or max_iter < 1:
        raise ValidationError("need tol > 0 and max_iter >= 1")
    if masses is None:
        masses = uniform_masses(n, m)
    if masses.a.shape != (n,) or masses.b.shape != (m,):
        raise ValidationError("masses of length (%d, %d) do not fit a %d x %d cost" % (masses.a.size, masses.b.size, n, m))

    scaled = cost / epsilon
    worst = max(scaled.min(axis=1).max(), scaled.min(axis=0).max())
    method = "sinkhorn_log" if worst > LOG_DOMAIN_THRESHOLD else "sinkhorn"

    values, log = ot.sinkhorn(masses.a, masses.b, cost, epsilon, method=method,
                              numItermax=max_iter, stopThr=tol, log=True, warn=False)
    values = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(values)):
        raise NumericalError("sinkhorn produced non-finite entries at epsilon=%s; raise epsilon" % epsilon)
    if np.any(values.sum(axis=1) == 0) or np.any(values.sum(axis=0) == 0):
        raise NumericalError("coupling underflows to 0 on a full row or column at epsilon=%s; raise epsilon" % epsilon)

    violation = _marginal_violation(values, masses)
    converged = violation <= tol
    history = [float(e) for e in log.get("err", [])]
    iterations = int(log.get("niter", 10 * len(history)))
    if not converged:
        msg = "sinkhorn did not converge in %d iterations (marginal violation %.3e > tol %.1e); " % (iterations, violation, tol)
        msg += "raise max_iter or epsilon"
        warnings.warn(msg, RuntimeWarning)
    return Coupling(values, epsilon=epsilon, converged=converged, iterations=iterations,
                    method=method, marginal_violation=violation, error_history=history)


def knn_coupling(D, k=1, masses=None):
    """Each source row spreads its mass evenly over its k cheapest target columns

    Only the row marginals are enforced. Ties go to the lower column index.
    """
    cost = as_array(D)
    n, m = cost.shape
    if not 1 <= k <= m:
        raise ValidationError("k must be in [1, %d], got %d" % (m, k))
    a = np.ones(n) if masses is None else masses.a
    nearest = stable_order(cost)[:, :k]
    values = np.zeros_like(cost)
    rows = np.repeat(np.arange(n), k)
    values[rows, nearest.ravel()] = np.repeat(a / k, k)
    return Coupling(values, epsilon=0.0, converged=True, iterations=0, method="knn")


def solve_coupling(D, epsilon=0.0, masses=None, tol=1e-9, max_iter=10000):
    """epsilon = 0 selects exact assignment, epsilon > 0 selects sinkhorn"""
    if epsilon < 0:
        raise ValidationError("epsilon must be >= 0, got %s" % epsilon)
    if epsilon > 0:
        return sinkhorn(D, masses, epsilon, tol, max_iter)
    n, m = as_array(D).shape
    if n != m:
        raise ValidationError("epsilon = 0 needs equal sample counts (got %d and %d); use epsilon > 0 "
                              "with rebalanced masses for unequal counts" % (n, m))
    if masses is not None and not (np.all(masses.a == 1.0) and np.all(masses.b == 1.0)):
        raise ValidationError("epsilon = 0 supports unit masses only; use epsilon > 0 for other masses")
    return exact_assignment(D)
