#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# labalign
# small helpers shared by the numerical modules and the scripts
#

import hashlib

import numpy as np

from ..errors import ValidationError


def as_array(obj):
    """return the dense matrix held by a typed container, or the array itself"""
    return np.asarray(getattr(obj, "values", obj), dtype=float)


def as_features(obj):
    """accept a DomainDataset or anything array-like with samples in rows"""
    return np.asarray(getattr(obj, "features", obj), dtype=float)


def check_square(matrix, name):
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValidationError("%s must be a square matrix, got shape %s" % (name, matrix.shape))


def max_asymmetry(matrix):
    if matrix.size == 0:
        return 0.0
    return float(np.max(np.abs(matrix - matrix.T)))


def stable_order(values):
    """argsort along the last axis, equal values keep the lower index first"""
    return np.argsort(values, axis=-1, kind="stable")


def file_digest(path, block_size=1 << 20):
    sha = hashlib.sha256()
    with open(path, "rb") as f:
        while True:
            block = f.read(block_size)
            if not block:
                break
            sha.update(block)
    return sha.hexdigest()
