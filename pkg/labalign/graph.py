#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# labalign graph
# alpha-decay affinities and their diffusion operators
#

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import pdist, squareform

from .errors import NumericalError, ValidationError
from .utils.utils import as_array, as_features, max_asymmetry

SYMMETRY_TOL = 1e-12
STOCHASTIC_TOL = 1e-12


@dataclass
class AffinityMatrix:
    values: np.ndarray
    alpha: float = None
    k: int = None

    def validate(self):
        w = self.values
        if max_asymmetry(w) > SYMMETRY_TOL:
            raise NumericalError("affinity matrix is not symmetric (max |W - W.T| = %.3e)" % max_asymmetry(w))
        if np.any(w < 0) or np.any(w > 1):
            raise NumericalError("affinity entries must lie in [0, 1]")
        if not np.all(np.diag(w) == 1.0):
            raise NumericalError("affinity diagonal must be exactly 1")
        return self

    @property
    def n(self):
        return self.values.shape[0]


@dataclass
class DiffusionOperator:
    values: np.ndarray
    degrees: np.ndarray

    def validate(self):
        p = self.values
        if np.any(p < 0):
            raise NumericalError("diffusion operator has negative entries")
        row_error = np.max(np.abs(p.sum(axis=1) - 1.0))
        if row_error > STOCHASTIC_TOL:
            raise NumericalError("diffusion operator rows do not sum to 1 (max error %.3e)" % row_error)
        return self

    @property
    def n(self):
        return self.values.shape[0]


def pairwise_distances(X):
    return squareform(pdist(as_features(X), metric="euclidean"))


def _bandwidths_from_distances(distances, k):
    n = distances.shape[0]
    if not 1 <= k <= n - 1:
        raise ValidationError("k must be in [1, %d] for %d samples, got %d" % (n - 1, n, k))
    others = distances.copy()
    np.fill_diagonal(others, np.inf)
    # duplicates count separately, so this is the k-th order statistic
    sigma = np.partition(others, k - 1, axis=1)[:, k - 1]
    zero = np.flatnonzero(sigma <= 0.0)
    if zero.size:
        raise NumericalError("zero bandwidth at row %d: %d or more duplicate points within its %d nearest neighbors"
                             % (zero[0], k, k))
    return sigma


def knn_bandwidths(X, k):
    """Distance from each sample to its k-th nearest other sample

    Args:
        X (DomainDataset or array): samples in rows
        k (int): neighbor rank, 1 <= k <= n - 1

    Returns:
        np.ndarray: one bandwidth per sample
    """
    return _bandwidths_from_distances(pairwise_distances(X), k)


def alpha_decay_kernel(X, alpha=10.0, k=10):
    """Symmetric alpha-decay affinity with k-NN adaptive bandwidths

        W(i,j) = 1/2 exp(-(d_ij / s_i)^alpha) + 1/2 exp(-(d_ij / s_j)^alpha)

    where s_i is the distance from x_i to its k-th nearest neighbor.
    """
    if alpha <= 0:
        raise ValidationError("alpha must be > 0, got %s" % alpha)
    distances = pairwise_distances(X)
    sigma = _bandwidths_from_distances(distances, k)
    decay = np.exp(-np.power(distances / sigma[:, None], alpha))
    values = 0.5 * (decay + decay.T)
    return AffinityMatrix(values, alpha, k).validate()


def diffusion_operator(W):
    """row-normalize an affinity into a random-walk transition matrix"""
    values = as_array(W)
    degrees = values.sum(axis=1)
    if np.any(degrees <= 0):
        raise ValidationError("affinity row %d has zero degree" % np.flatnonzero(degrees <= 0)[0])
    return DiffusionOperator(values / degrees[:, None], degrees).validate()
