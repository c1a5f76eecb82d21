#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# labalign - alignment scores
#

from dataclasses import dataclass, field

import numpy as np
from scipy.spatial.distance import cdist

from ..errors import ValidationError
from ..utils.utils import stable_order

SPACES = ("spectral", "ambient")


@dataclass
class MetricReport:
    """Scores of one alignment in one space

    Args:
        foscttm (float): fraction of samples closer than the true match, None if not computed
        label_transfer (dict): k -> accuracy of k-NN label transfer
        space (str): "spectral" or "ambient"
        n_evaluated (dict): number of samples behind each score
    """

    foscttm: float = None
    label_transfer: dict = field(default_factory=dict)
    space: str = "spectral"
    n_evaluated: dict = field(default_factory=dict)

    def to_dict(self, prefix=""):
        output = {}
        if self.foscttm is not None:
            output[prefix + "foscttm"] = float(self.foscttm)
        for k in sorted(self.label_transfer):
            output[prefix + "acc_%d" % k] = float(self.label_transfer[k])
        for key in sorted(self.n_evaluated):
            output[prefix + "n_" + key] = int(self.n_evaluated[key])
        return output


def _check_coordinates(source_coords, target_coords):
    source_coords = np.atleast_2d(np.asarray(source_coords, dtype=float))
    target_coords = np.atleast_2d(np.asarray(target_coords, dtype=float))
    if source_coords.shape[1] != target_coords.shape[1]:
        raise ValidationError("source and target coordinates have %d and %d columns"
                              % (source_coords.shape[1], target_coords.shape[1]))
    return source_coords, target_coords


def foscttm(source_coords, target_coords, pairs):
    """Fraction of samples closer than the true match, averaged in both directions

    For each pair (i, j), count the target samples strictly closer to source
    i than target j is (divided by the target count), and the source samples
    strictly closer to target j than source i is (divided by the source
    count). 0 is a perfect alignment.
    """
    source_coords, target_coords = _check_coordinates(source_coords, target_coords)
    if len(pairs) == 0:
        raise ValidationError("FOSCTTM needs at least one pair")
    pairs.validate(source_coords.shape[0], target_coords.shape[0])
    distances = cdist(source_coords, target_coords)
    true_distance = distances[pairs.source, pairs.target]
    closer_targets = np.sum(distances[pairs.source, :] < true_distance[:, None], axis=1)
    closer_sources = np.sum(distances[:, pairs.target] < true_distance[None, :], axis=0)
    fractions = np.concatenate([closer_targets / target_coords.shape[0],
                                closer_sources / source_coords.shape[0]])
    return float(fractions.mean())


def _vote(neighbor_labels):
    # majority, ties go to the label of the nearest neighbor among the tied
    tokens, first, counts = np.unique(neighbor_labels, return_index=True, return_counts=True)
    tied = counts == counts.max()
    return tokens[tied][np.argmin(first[tied])]


def label_transfer(source_coords, source_labels, target_coords, target_true_labels, k=1):
    """Accuracy of a k-NN classifier fit on the source and applied to the target

    Neighbors at equal distance are taken in index order. Only target rows
    with a known label are scored.
    """
    source_coords, target_coords = _check_coordinates(source_coords, target_coords)
    source_labels = np.asarray(source_labels, dtype=object)
    target_true_labels = np.asarray(target_true_labels, dtype=object)
    if source_labels.size != source_coords.shape[0] or target_true_labels.size != target_coords.shape[0]:
        raise ValidationError("label counts do not match coordinate rows")
    if any(label is None for label in source_labels):
        raise ValidationError("label transfer needs every source row labeled")
    if not 1 <= k <= source_coords.shape[0]:
        raise ValidationError("k must be in [1, %d], got %d" % (source_coords.shape[0], k))
    known = np.array([label is not None for label in target_true_labels], dtype=bool)
    if not np.any(known):
        raise ValidationError("no target row has a true label to score against")
    source_tokens = np.array([str(label) for label in source_labels])
    distances = cdist(target_coords[known], source_coords)
    neighbors = stable_order(distances)[:, :k]
    predicted = np.array([_vote(source_tokens[row]) for row in neighbors])
    truth = np.array([str(label) for label in target_true_labels[known]])
    return float(np.mean(predicted == truth))


def evaluate(source_coords, target_coords, pairs=None, source_labels=None, target_labels=None,
             ks=(1, 10), space="spectral"):
    """Score one alignment with FOSCTTM and k-NN label transfer

    Args:
        source_coords, target_coords (np.ndarray): aligned coordinates, either the
            spectral embedding or the barycentric projection with the target features
        pairs (PairSet): ground truth, FOSCTTM is skipped when None
        source_labels, target_labels (array-like): label transfer is skipped when
            either is None; unlabeled source rows are left out of the training set
        ks (tuple): neighbor counts for label transfer
        space (str): "spectral" or "ambient"

    Returns:
        MetricReport
    """
    if space not in SPACES:
        raise ValidationError("space must be one of %s, got '%s'" % (SPACES, space))
    source_coords, target_coords = _check_coordinates(source_coords, target_coords)
    report = MetricReport(space=space)
    if pairs is not None:
        report.foscttm = foscttm(source_coords, target_coords, pairs)
        report.n_evaluated["pairs"] = len(pairs)
    if source_labels is not None and target_labels is not None:
        source_labels = np.asarray(source_labels, dtype=object)
        target_labels = np.asarray(target_labels, dtype=object)
        train = np.array([label is not None for label in source_labels], dtype=bool)
        for k in ks:
            report.label_transfer[int(k)] = label_transfer(
                source_coords[train], source_labels[train], target_coords, target_labels, k)
        report.n_evaluated["label_transfer"] = int(sum(label is not None for label in target_labels))
    return report
