#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# labalign diffusion
# stationary law and time-aggregated diffusion similarity
#

from dataclasses import dataclass
import warnings

import numpy as np
from scipy import linalg
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import NumericalError, ValidationError

RESIDUAL_TOL = 1e-10
ROW_SUM_TOL = 1e-8


@dataclass
class StationaryDistribution:
    phi0: np.ndarray

    def residual(self, P):
        """max |phi0^T P - phi0^T|"""
        return float(np.max(np.abs(self.phi0 @ P.values - self.phi0)))


@dataclass
class DPTSimilarity:
    values: np.ndarray

    def validate(self):
        row_error = float(np.max(np.abs(self.values.sum(axis=1)))) if self.values.size else 0.0
        if row_error > ROW_SUM_TOL:
            raise NumericalError("diffusion similarity rows do not sum to 0 (max |row sum| = %.3e)" % row_error)
        return self


def stationary_distribution(P):
    """Stationary law of the reversible chain built from a symmetric kernel

    phi0 is proportional to the degrees of the kernel; the left-eigenvector
    residual is checked before returning.
    """
    degrees = np.asarray(P.degrees, dtype=float)
    if degrees.shape != (P.n,) or np.any(degrees <= 0):
        raise ValidationError("diffusion operator needs %d positive degrees" % P.n)
    phi0 = StationaryDistribution(degrees / degrees.sum())
    residual = phi0.residual(P)
    if residual > RESIDUAL_TOL:
        raise NumericalError("degree vector is not stationary for P (residual %.3e): "
                             "P is not reversible or was modified after normalization" % residual)
    return phi0


def dpt_similarity(P, phi0):
    """Sum over all walk lengths t >= 1 of (P - 1 phi0^T)^t

    Computed as (I - P + 1 phi0^T)^-1 - I with a dense solve. Graphs with
    more than one connected component are rejected before solving; an
    ill-conditioned system means the components are joined by vanishing weights.
    """
    n = P.n
    if phi0.phi0.shape != (n,):
        raise ValidationError("stationary distribution has %d entries, operator has %d states" % (phi0.phi0.size, n))
    residual = phi0.residual(P)
    if residual > RESIDUAL_TOL:
        raise ValidationError("stationary distribution does not match the operator (residual %.3e)" % residual)
    n_components, _ = connected_components(csr_matrix((P.values > 0).astype(float)), directed=False)
    if n_components > 1:
        raise NumericalError("the neighbor graph is disconnected (%d components); try a larger k or a smaller alpha" % n_components)
    identity = np.eye(n)
    system = identity - P.values + np.outer(np.ones(n), phi0.phi0)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("error", linalg.LinAlgWarning)
            inverse = linalg.solve(system, identity)
    except (linalg.LinAlgError, linalg.LinAlgWarning) as e:
        msg = "diffusion similarity system is numerically singular (%s); " % e
        msg += "the neighbor graph is probably disconnected, try a larger k or a smaller alpha"
        raise NumericalError(msg)
    return DPTSimilarity(inverse - identity).validate()
