#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# labalign embedding
# joint cross-domain affinity, spectral embedding and barycentric projection
#

from dataclasses import dataclass

import numpy as np
from scipy import linalg
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import NumericalError, ValidationError
from .utils.utils import as_array, as_features, check_square, max_asymmetry

OFFDIAG_MODES = ("wxy", "t")
TRIVIAL_EIGENVALUE_TOL = 1e-10


@dataclass
class JointAffinity:
    values: np.ndarray
    mu: float
    offdiag_mode: str
    n_source: int

    def validate(self):
        if max_asymmetry(self.values) > 1e-10:
            raise NumericalError("joint affinity is not symmetric")
        if np.any(self.values < 0):
            raise NumericalError("joint affinity has negative entries")
        return self


@dataclass
class SharedEmbedding:
    coordinates: np.ndarray
    eigenvalues: np.ndarray
    domain_split: int

    @property
    def dim(self):
        return self.coordinates.shape[1]

    @property
    def source(self):
        return self.coordinates[:self.domain_split]

    @property
    def target(self):
        return self.coordinates[self.domain_split:]


def joint_affinity(Wx, Wy, T, mu=0.5, mode="wxy"):
    """Block affinity over source and target samples

        [[ mu Wx,             (1 - mu) Wxy ],
         [ (1 - mu) Wxy^T,    mu Wy        ]]

    with Wxy = Wx T + T Wy (mode "wxy") or Wxy = T (mode "t").
    """
    wx = as_array(Wx)
    wy = as_array(Wy)
    t = as_array(T)
    if not 0.0 <= mu <= 1.0:
        raise ValidationError("mu must be in [0, 1], got %s" % mu)
    if mode not in OFFDIAG_MODES:
        raise ValidationError("off-diagonal mode must be one of %s, got '%s'" % (OFFDIAG_MODES, mode))
    check_square(wx, "source affinity")
    check_square(wy, "target affinity")
    if t.shape != (wx.shape[0], wy.shape[0]):
        raise ValidationError("coupling of shape %s does not fit affinities of size %d and %d"
                              % (t.shape, wx.shape[0], wy.shape[0]))
    if mode == "wxy":
        offdiag = wx @ t + t @ wy
    else:
        offdiag = t
    values = np.block([[mu * wx, (1.0 - mu) * offdiag],
                       [(1.0 - mu) * offdiag.T, mu * wy]])
    return JointAffinity(values, mu, mode, wx.shape[0]).validate()


def spectral_embedding(W, dim=10):
    """Laplacian eigenmaps of the joint affinity

    Eigenvectors of the symmetric normalized Laplacian for the `dim`
    smallest nonzero eigenvalues, mapped back with Deg^-1/2. Each vector
    is signed so that its largest-magnitude entry is positive.
    """
    values = as_array(W)
    check_square(values, "joint affinity")
    size = values.shape[0]
    if not 1 <= dim <= size - 1:
        raise ValidationError("embedding dimension must be in [1, %d], got %d" % (size - 1, dim))
    degrees = values.sum(axis=1)
    if np.any(degrees <= 0):
        raise ValidationError("joint affinity row %d is all zeros" % np.flatnonzero(degrees <= 0)[0])
    n_components, _ = connected_components(csr_matrix((values > 0).astype(float)), directed=False)
    if n_components > 1:
        raise NumericalError("joint graph is disconnected (%d components); lower mu so the coupling links the domains"
                             % n_components)

    inv_sqrt = 1.0 / np.sqrt(degrees)
    laplacian = np.eye(size) - inv_sqrt[:, None] * values * inv_sqrt[None, :]
    laplacian = 0.5 * (laplacian + laplacian.T)
    eigenvalues, eigenvectors = linalg.eigh(laplacian, subset_by_index=[0, dim])
    if abs(eigenvalues[0]) > TRIVIAL_EIGENVALUE_TOL:
        raise NumericalError("smallest Laplacian eigenvalue is %.3e, expected 0" % eigenvalues[0])

    coordinates = inv_sqrt[:, None] * eigenvectors[:, 1:]
    pivots = np.argmax(np.abs(coordinates), axis=0)
    signs = np.sign(coordinates[pivots, np.arange(dim)])
    signs[signs == 0] = 1.0
    coordinates = coordinates * signs
    n_source = getattr(W, "n_source", size)
    return SharedEmbedding(coordinates, eigenvalues[1:], n_source)


def barycentric_projection(T, Y):
    """map each source row to the coupling-weighted mean of the target rows"""
    t = as_array(T)
    y = as_features(Y)
    if t.shape[1] != y.shape[0]:
        raise ValidationError("coupling has %d columns but the target has %d rows" % (t.shape[1], y.shape[0]))
    mass = t.sum(axis=1)
    empty = np.flatnonzero(mass <= 0)
    if empty.size:
        raise ValidationError("coupling row %d carries no mass" % empty[0])
    return (t @ y) / mass[:, None]
