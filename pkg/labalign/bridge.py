#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# labalign bridge
# label profiles shared by both domains and the cross-domain cosine cost
#

from dataclasses import dataclass
import warnings

import numpy as np

from .errors import NumericalError, ValidationError
from .utils.utils import as_array

MIN_PROFILE_NORM = 1e-12


@dataclass
class LabelProfile:
    values: np.ndarray
    class_order: list
    priors: np.ndarray


@dataclass
class CrossCost:
    values: np.ndarray

    @property
    def shape(self):
        return self.values.shape


def _label_tokens(labels):
    tokens = []
    for label in labels:
        if label is None:
            tokens.append(None)
            continue
        token = str(label).strip()
        tokens.append(token if token else None)
    return np.array(tokens, dtype=object)


def _fully_labeled(labels, classes):
    return all(t is not None and t in classes for t in _label_tokens(labels))


def shared_classes(labels_x, labels_y):
    """sorted list of the class tokens labeled in both domains"""
    set_x = set(t for t in _label_tokens(labels_x) if t is not None)
    set_y = set(t for t in _label_tokens(labels_y) if t is not None)
    if len(set_x) == 0 or len(set_y) == 0:
        raise ValidationError("each domain needs at least one labeled sample")
    classes = sorted(set_x & set_y)
    if len(classes) == 0:
        raise ValidationError("the two domains share no class label")
    if len(classes) == 1:
        raise ValidationError("the two domains share a single class (%s); at least 2 are needed "
                              "because every one-class profile is a zero row sum" % classes[0])
    if len(classes) == 2 and _fully_labeled(labels_x, classes) and _fully_labeled(labels_y, classes):
        warnings.warn("two classes with every sample labeled give collinear label profiles; "
                      "the cosine cost then only separates the two classes", RuntimeWarning)
    return classes


def class_priors(labels, classes):
    """class frequencies among the labeled rows whose class is in `classes`"""
    tokens = _label_tokens(labels)
    counts = np.array([np.sum(tokens == c) for c in classes], dtype=float)
    if np.any(counts == 0):
        missing = [c for c, count in zip(classes, counts) if count == 0]
        raise ValidationError("no labeled sample of class(es) %s in this domain" % ", ".join(missing))
    return counts / counts.sum()


def label_profile(M, labels, classes, priors):
    """Aggregate the diffusion similarity over the labeled samples of each class

        M^l(i, c) = 1/p_c * sum_{j labeled c} M(i, j)

    Every row gets a profile, labeled or not.
    """
    values = as_array(M)
    tokens = _label_tokens(labels)
    priors = np.asarray(priors, dtype=float)
    if tokens.size != values.shape[1]:
        raise ValidationError("got %d labels for a %d x %d similarity" % (tokens.size, values.shape[0], values.shape[1]))
    if priors.shape != (len(classes),):
        raise ValidationError("got %d priors for %d classes" % (priors.size, len(classes)))
    outside = set(t for t in tokens if t is not None) - set(classes)
    if len(outside):
        msg = "labels %s are not shared by both domains; those samples are treated as unlabeled" % ", ".join(sorted(outside))
        warnings.warn(msg, RuntimeWarning)
    profile = np.empty((values.shape[0], len(classes)))
    for c, (token, prior) in enumerate(zip(classes, priors)):
        profile[:, c] = values[:, tokens == token].sum(axis=1) / prior
    norms = np.linalg.norm(profile, axis=1)
    degenerate = np.flatnonzero(norms < MIN_PROFILE_NORM)
    if degenerate.size:
        raise NumericalError("label profile of row %d has zero norm (%d degenerate rows)" % (degenerate[0], degenerate.size))
    return LabelProfile(profile, list(classes), priors)


def cosine_cost(profile_x, profile_y):
    """cosine distance between every source profile and every target profile"""
    if list(profile_x.class_order) != list(profile_y.class_order):
        raise ValidationError("profiles use different class orders: %s vs %s" % (profile_x.class_order, profile_y.class_order))
    unit_x = profile_x.values / np.linalg.norm(profile_x.values, axis=1, keepdims=True)
    unit_y = profile_y.values / np.linalg.norm(profile_y.values, axis=1, keepdims=True)
    return CrossCost(np.clip(1.0 - unit_x @ unit_y.T, 0.0, 2.0))
