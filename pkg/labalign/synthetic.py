#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# labalign synthetic benchmarks
#

import math

import numpy as np

from .dataio import DomainDataset, PairSet
from .errors import ValidationError

# latent parameter range and vertical pitch of the helix/line pair
HELIX_T_MAX = 4 * math.pi
HELIX_PITCH = 0.15


def _check_sizes(n, classes):
    if classes < 2:
        raise ValidationError("need at least 2 classes, got %d (labels cannot bridge domains with one class)" % classes)
    if n < classes:
        raise ValidationError("need at least one sample per class: n=%d < classes=%d" % (n, classes))


def generate_helix_pair(n=300, classes=5, noise=0.05, seed=0):
    """Helix in the source domain, straight line in the target domain

    Both curves are sampled at the same latent positions t_i in [0, 4 pi],
    so row i of the source matches row i of the target. Class labels are
    equal-width bins of t, shared by both domains.

    Returns:
        DomainDataset: source (helix)
        DomainDataset: target (line)
        PairSet: identity pairing
    """
    _check_sizes(n, classes)
    if noise < 0:
        raise ValidationError("noise must be >= 0, got %s" % noise)
    rng = np.random.default_rng(seed)
    t = rng.uniform(0.0, HELIX_T_MAX, size=n)
    helix = np.column_stack([np.cos(t), np.sin(t), HELIX_PITCH * t])
    line = np.column_stack([np.zeros(n), np.zeros(n), HELIX_PITCH * t])
    helix += rng.normal(0.0, noise, size=helix.shape)
    line += rng.normal(0.0, noise, size=line.shape)
    bins = np.minimum((t / HELIX_T_MAX * classes).astype(int), classes - 1)
    source = DomainDataset(helix, bins, "source")
    target = DomainDataset(line, bins, "target")
    return source, target, PairSet.identity(n)


def generate_blobs_pair(n=40, classes=3, dims_source=3, dims_target=5, separation=1.5, seed=0):
    """One isotropic Gaussian blob per class in each domain

    The two domains share the class of every row but nothing else: class
    centers and noise are drawn independently in each ambient space. Centers
    sit at distance `separation` from the origin along random directions.
    Separations much larger than the unit noise split each domain into one
    neighbor-graph component per class, which the diffusion stage rejects.
    Rows are assigned to classes round-robin, so class sizes differ by at most one.
    """
    _check_sizes(n, classes)
    if dims_source < 1 or dims_target < 1:
        raise ValidationError("dimensions must be >= 1, got %d and %d" % (dims_source, dims_target))
    if separation < 0:
        raise ValidationError("separation must be >= 0, got %s" % separation)
    rng = np.random.default_rng(seed)
    labels = np.arange(n) % classes
    datasets = []
    for dims, name in ((dims_source, "source"), (dims_target, "target")):
        directions = rng.normal(size=(classes, dims))
        directions /= np.linalg.norm(directions, axis=1, keepdims=True)
        centers = separation * directions
        features = centers[labels] + rng.normal(size=(n, dims))
        datasets.append(DomainDataset(features, labels, name))
    return datasets[0], datasets[1], PairSet.identity(n)
