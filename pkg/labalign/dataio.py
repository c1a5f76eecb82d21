#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# labalign dataio
#

from dataclasses import dataclass
import json
import pathlib
import warnings

import numpy as np
import pandas as pd

from .errors import ValidationError
from .utils.utils import as_array

# enough digits for an exact float64 round-trip
FLOAT_FORMAT = "%.17g"
DEFAULT_LABEL_COLUMN = "label"


def _normalize_label(label):
    """labels are compared as trimmed strings, empty means unlabeled"""
    if label is None:
        return None
    if isinstance(label, float) and np.isnan(label):
        return None
    token = str(label).strip()
    if token == "":
        return None
    return token


@dataclass
class DomainDataset:
    """Feature matrix of one domain with optional per-row class labels

    Args:
        features (array-like): samples in rows, features in columns
        labels (array-like): one token per row, None or "" for unlabeled rows
        name (str): tag used in messages and output files
    """

    features: np.ndarray
    labels: np.ndarray = None
    name: str = "domain"

    def __post_init__(self):
        features = np.asarray(self.features, dtype=float)
        if features.ndim != 2:
            raise ValidationError("%s: features must be a 2D matrix, got %d dimension(s)" % (self.name, features.ndim))
        if features.shape[0] < 1 or features.shape[1] < 1:
            raise ValidationError("%s: need at least one row and one feature column, got shape %s" % (self.name, features.shape))
        finite = np.isfinite(features)
        if not finite.all():
            row, col = np.argwhere(~finite)[0]
            raise ValidationError("%s: non-finite feature value at row %d, column %d" % (self.name, row, col))
        n = features.shape[0]
        if self.labels is None:
            labels = np.full(n, None, dtype=object)
        else:
            labels = np.array([_normalize_label(label) for label in self.labels], dtype=object)
            if labels.shape != (n,):
                raise ValidationError("%s: got %d labels for %d rows" % (self.name, labels.size, n))
        self.features = features
        self.labels = labels

    @property
    def n_samples(self):
        return self.features.shape[0]

    @property
    def n_features(self):
        return self.features.shape[1]

    @property
    def labeled_mask(self):
        return np.array([label is not None for label in self.labels], dtype=bool)

    @property
    def n_labeled(self):
        return int(self.labeled_mask.sum())

    @property
    def classes(self):
        return sorted(set(label for label in self.labels if label is not None))

    def check_labeled(self):
        if self.n_labeled == 0:
            raise ValidationError("%s: at least one labeled row is needed for alignment" % self.name)

    def mask_labels(self, fraction, seed=None):
        """Keep the labels of a random subset of the labeled rows

        Args:
            fraction (float): share of the labeled rows that keep their label
            seed (int): seed of the row selection

        Returns:
            DomainDataset: same features, masked labels
        """
        if not 0.0 <= fraction <= 1.0:
            raise ValidationError("label fraction must be in [0, 1], got %s" % fraction)
        labeled = np.flatnonzero(self.labeled_mask)
        n_keep = int(round(fraction * labeled.size))
        rng = np.random.default_rng(seed)
        keep = np.sort(rng.choice(labeled, size=n_keep, replace=False))
        labels = np.full(self.n_samples, None, dtype=object)
        labels[keep] = self.labels[keep]
        masked = DomainDataset(self.features, labels, self.name)
        lost = set(self.classes) - set(masked.classes)
        if len(lost):
            msg = "%s: masking labels to fraction %s removed every label of class(es) %s" % (
                self.name, fraction, ", ".join(sorted(lost)))
            warnings.warn(msg, RuntimeWarning)
        return masked


@dataclass
class PairSet:
    """Ground-truth correspondences (source row, target row), used for scoring only"""

    pairs: np.ndarray

    def __post_init__(self):
        pairs = np.asarray(self.pairs, dtype=int).reshape(-1, 2)
        for column, side in ((0, "source"), (1, "target")):
            values, counts = np.unique(pairs[:, column], return_counts=True)
            if np.any(counts > 1):
                raise ValidationError("duplicate %s index %d in pairs" % (side, values[counts > 1][0]))
        self.pairs = pairs

    def __len__(self):
        return self.pairs.shape[0]

    @property
    def source(self):
        return self.pairs[:, 0]

    @property
    def target(self):
        return self.pairs[:, 1]

    @classmethod
    def identity(cls, n):
        idx = np.arange(n)
        return cls(np.column_stack([idx, idx]))

    def validate(self, n_source, n_target):
        for values, n, side in ((self.source, n_source, "source"), (self.target, n_target, "target")):
            bad = (values < 0) | (values >= n)
            if np.any(bad):
                raise ValidationError("%s index %d out of range [0, %d)" % (side, values[bad][0], n))


def _read_table(path):
    path = pathlib.Path(path)
    if not path.exists():
        raise FileNotFoundError("file not found: %s" % path)
    table = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True)
    table.columns = [str(c).strip() for c in table.columns]
    return table


def _is_float(cell):
    try:
        float(cell)
    except ValueError:
        return False
    return True


def _parse_numeric(table, columns, path):
    values = np.empty((len(table), len(columns)), dtype=float)
    for j, column in enumerate(columns):
        cells = table[column].str.strip().to_numpy()
        try:
            values[:, j] = cells.astype(float)
        except ValueError:
            row = next(i for i, cell in enumerate(cells) if not _is_float(cell))
            raise ValidationError("%s: non-numeric value '%s' at row %d, column '%s'" % (path, cells[row], row, column))
    return values


def load_domain_csv(path, label_column=None, name=None):
    """Read one domain from a CSV file with a header row

    Args:
        path (str): CSV file, numeric feature columns plus an optional label column
        label_column (str): name of the label column; by default a column
                            named "label" is used when present
        name (str): dataset tag, defaults to the file stem

    Returns:
        DomainDataset
    """
    table = _read_table(path)
    if name is None:
        name = pathlib.Path(path).stem
    if label_column is None:
        if DEFAULT_LABEL_COLUMN in table.columns:
            label_column = DEFAULT_LABEL_COLUMN
    elif label_column not in table.columns:
        raise ValidationError("%s: label column '%s' not found in header %s" % (path, label_column, list(table.columns)))
    feature_columns = [c for c in table.columns if c != label_column]
    if len(feature_columns) == 0:
        raise ValidationError("%s: no feature columns" % path)
    if len(table) == 0:
        raise ValidationError("%s: no data rows" % path)
    features = _parse_numeric(table, feature_columns, path)
    labels = None
    if label_column is not None:
        labels = table[label_column].to_numpy(dtype=object)
    return DomainDataset(features, labels, name)


def load_labels_csv(path, label_column=None):
    """Read the label column of a CSV file, a domain file or a label-only file

    Returns:
        np.ndarray: one label per row, None for unlabeled rows
    """
    table = _read_table(path)
    if label_column is None:
        label_column = DEFAULT_LABEL_COLUMN
        if label_column not in table.columns and len(table.columns) == 1:
            label_column = table.columns[0]
    if label_column not in table.columns:
        raise ValidationError("%s: label column '%s' not found in header %s" % (path, label_column, list(table.columns)))
    return np.array([_normalize_label(label) for label in table[label_column]], dtype=object)


def write_domain_csv(dataset, path):
    columns = {"f%d" % j: dataset.features[:, j] for j in range(dataset.n_features)}
    table = pd.DataFrame(columns)
    if dataset.n_labeled > 0:
        table[DEFAULT_LABEL_COLUMN] = ["" if label is None else label for label in dataset.labels]
    table.to_csv(path, index=False, float_format=FLOAT_FORMAT)


def load_pairs_csv(path):
    table = _read_table(path)
    for column in ("source", "target"):
        if column not in table.columns:
            raise ValidationError("%s: pair file needs columns 'source,target', got %s" % (path, list(table.columns)))
    values = _parse_numeric(table, ["source", "target"], path)
    if not np.all(values == np.round(values)):
        raise ValidationError("%s: pair indices must be integers" % path)
    return PairSet(values.astype(int))


def write_pairs_csv(pairs, path):
    table = pd.DataFrame({"source": pairs.source, "target": pairs.target})
    table.to_csv(path, index=False)


def write_coupling(coupling, path, threshold=0.0):
    """write the coupling as (i, j, value) triplets for entries above threshold"""
    values = as_array(coupling)
    rows, cols = np.nonzero(values > threshold)
    table = pd.DataFrame({"i": rows, "j": cols, "value": values[rows, cols]})
    table.to_csv(path, index=False, float_format=FLOAT_FORMAT)


def _write_coordinates(source_coords, target_coords, path):
    blocks = []
    for domain, coords in (("source", source_coords), ("target", target_coords)):
        coords = np.asarray(coords, dtype=float)
        block = pd.DataFrame(coords, columns=["e%d" % j for j in range(coords.shape[1])])
        block.insert(0, "row", np.arange(coords.shape[0]))
        block.insert(0, "domain", domain)
        blocks.append(block)
    table = pd.concat(blocks, ignore_index=True)
    table.to_csv(path, index=False, float_format=FLOAT_FORMAT)


def write_embedding(embedding, path):
    _write_coordinates(embedding.source, embedding.target, path)


def write_projection(projected_source, target_features, path):
    """source rows mapped into the target space, followed by the target rows"""
    _write_coordinates(projected_source, target_features, path)


def read_coordinates_csv(path):
    """Read a file written by write_embedding or write_projection

    Returns:
        np.ndarray: source coordinates
        np.ndarray: target coordinates
    """
    table = _read_table(path)
    coord_columns = [c for c in table.columns if c.startswith("e")]
    for column in ("domain", "row"):
        if column not in table.columns:
            raise ValidationError("%s: coordinate file needs a '%s' column" % (path, column))
    if len(coord_columns) == 0:
        raise ValidationError("%s: no coordinate columns e0, e1, ..." % path)
    coords = _parse_numeric(table, coord_columns, path)
    rows = _parse_numeric(table, ["row"], path)[:, 0].astype(int)
    domains = table["domain"].str.strip().to_numpy()
    output = []
    for domain in ("source", "target"):
        mask = domains == domain
        order = np.argsort(rows[mask], kind="stable")
        if not np.array_equal(rows[mask][order], np.arange(mask.sum())):
            raise ValidationError("%s: %s rows are not numbered 0..%d" % (path, domain, mask.sum() - 1))
        output.append(coords[mask][order])
    return output[0], output[1]


def write_metrics(report, path):
    if hasattr(report, "to_dict"):
        report = report.to_dict()
    with open(path, "w") as f:
        json.dump(report, f, indent=2, sort_keys=True)
        f.write("\n")


def export_joint_distance(joint, path):
    """write 1 - W as a dense CSV, clamped to [0, 1] with zero self-distance"""
    distance = np.clip(1.0 - as_array(joint), 0.0, 1.0)
    np.fill_diagonal(distance, 0.0)
    np.savetxt(path, distance, delimiter=",", fmt=FLOAT_FORMAT)
