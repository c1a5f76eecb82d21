#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# labalign sweep
# Cartesian hyperparameter grids over the alignment pipeline
#

from concurrent.futures import ProcessPoolExecutor
import itertools
import warnings

import numpy as np
import pandas as pd

from .errors import StageError, ValidationError
from .pipeline import LabelAlignment, PROJECTIONS

# order of the configuration columns in the output table
SWEEP_AXES = ("alpha", "knn", "epsilon", "mu", "offdiag_mode", "target_label_fraction", "seed", "dim")
STATUS_OK = "ok"
STATUS_FAILED = "failed"


def sweep_grid(alpha=(10.0,), knn=(10,), epsilon=(0.0,), mu=(0.5,), offdiag_mode=("wxy",),
               target_label_fraction=(1.0,), seed=(0,), dim=(10,)):
    """list of cells (dicts) of the Cartesian product, in SWEEP_AXES order"""
    axes = {
        "alpha": alpha,
        "knn": knn,
        "epsilon": epsilon,
        "mu": mu,
        "offdiag_mode": offdiag_mode,
        "target_label_fraction": target_label_fraction,
        "seed": seed,
        "dim": dim,
    }
    for name in SWEEP_AXES:
        values = list(axes[name])
        if len(values) == 0:
            raise ValidationError("sweep axis '%s' is empty" % name)
        axes[name] = values
    return [dict(zip(SWEEP_AXES, combo)) for combo in itertools.product(*[axes[name] for name in SWEEP_AXES])]


def _failure(error):
    if isinstance(error, StageError):
        return "%s: %s" % (error.stage, error.error)
    return str(error)


def _run_group(task):
    """Align once for a group of cells that differ only in dim, then embed per dim

    Runs in a worker process when the sweep is parallel, so it only takes
    and returns picklable objects.
    """
    source, target, pairs, group, base_config, projection, ks = task
    head = group[0]
    rows = []
    config = dict(base_config)
    config.update({key: head[key] for key in ("alpha", "knn", "epsilon", "mu", "offdiag_mode")})
    config["dim"] = head["dim"]
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            aligner = LabelAlignment.from_config(config)
            if head["target_label_fraction"] < 1.0:
                aligned_target = target.mask_labels(head["target_label_fraction"], head["seed"])
            else:
                aligned_target = target
            result = aligner.align(source, aligned_target, embed=False)
            ambient = {}
            if projection == "barycentric":
                ambient = aligner.score(result, source, aligned_target, pairs, target.labels, "barycentric", ks)
            elif projection == "both":
                ambient = {"ambient_" + key: value for key, value in
                           aligner.score(result, source, aligned_target, pairs, target.labels, "barycentric", ks).items()}
    except (ValueError, RuntimeError) as error:
        return [dict(cell, status=STATUS_FAILED, error=_failure(error)) for cell in group]

    coupling = result.coupling.summary()
    for cell in group:
        row = dict(cell)
        row["converged"] = coupling["converged"]
        if projection == "barycentric":
            row.update(ambient)
            row.update(status=STATUS_OK, error="")
            rows.append(row)
            continue
        try:
            aligner.embed(result, cell["dim"])
            spectral = aligner.score(result, source, aligned_target, pairs, target.labels, "spectral", ks)
        except (ValueError, RuntimeError) as error:
            row.update(status=STATUS_FAILED, error=_failure(error))
            rows.append(row)
            continue
        if projection == "both":
            spectral = {"spectral_" + key: value for key, value in spectral.items()}
        row.update(spectral)
        row.update(ambient)
        row.update(status=STATUS_OK, error="")
        rows.append(row)
    return rows


def run_sweep(source, target, pairs=None, cells=None, base_config=None, projection="spectral",
              ks=(1, 10), jobs=1):
    """Run the alignment over every cell of a grid and tabulate the scores

    Cells that differ only in `dim` share one coupling. A cell that fails
    keeps its configuration columns, gets status "failed" with the stage and
    message in the "error" column, and missing (NaN) metrics; the other cells
    still run.

    Args:
        source, target (DomainDataset): the domains; target labels are the
            ground truth for scoring, masked per cell by target_label_fraction
        pairs (PairSet): ground truth for FOSCTTM, optional
        cells (list): output of sweep_grid, defaults to the single default cell
        base_config (dict): LabelAlignment settings shared by all cells
        projection (str): "spectral", "barycentric" or "both"
        ks (tuple): label-transfer neighbor counts
        jobs (int): worker processes, 1 runs in this process

    Returns:
        pandas.DataFrame: one row per cell, in grid order
    """
    if projection not in PROJECTIONS:
        raise ValidationError("projection must be one of %s, got '%s'" % (PROJECTIONS, projection))
    if jobs < 1:
        raise ValidationError("jobs must be >= 1, got %d" % jobs)
    if cells is None:
        cells = sweep_grid()
    base_config = dict(base_config or {})
    for key in SWEEP_AXES:
        base_config.pop(key, None)
    # fail early on bad shared settings rather than once per cell
    LabelAlignment.from_config(base_config)

    groups = {}
    for index, cell in enumerate(cells):
        key = tuple(cell[name] for name in SWEEP_AXES if name != "dim")
        groups.setdefault(key, []).append(dict(cell, cell=index))
    tasks = [(source, target, pairs, group, base_config, projection, tuple(ks)) for group in groups.values()]

    if jobs == 1:
        results = [_run_group(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(_run_group, tasks))

    rows = [row for group_rows in results for row in group_rows]
    table = pd.DataFrame(rows).sort_values("cell", kind="stable").drop(columns="cell")
    table = table.reset_index(drop=True)
    leading = [c for c in SWEEP_AXES if c in table.columns]
    trailing = ["converged", "status", "error"]
    metrics = [c for c in table.columns if c not in leading and c not in trailing]
    table = table[leading + metrics + [c for c in trailing if c in table.columns]]
    n_failed = int((table["status"] == STATUS_FAILED).sum())
    if n_failed:
        warnings.warn("%d of %d sweep cells failed" % (n_failed, len(table)), RuntimeWarning)
    return table


def summarize_sweep(table):
    """Average the metrics over seeds for every other configuration

    Failed cells are left out of the means; "n_runs" counts the cells that
    succeeded and "n_failed" those that did not.
    """
    if "seed" not in table.columns:
        raise ValidationError("sweep table has no 'seed' column")
    keys = [c for c in SWEEP_AXES if c in table.columns and c != "seed"]
    metrics = [c for c in table.columns
               if c not in SWEEP_AXES and c not in ("status", "error", "converged")
               and pd.api.types.is_numeric_dtype(table[c])]
    ok = table["status"] == STATUS_OK
    summary = table[ok].groupby(keys, sort=False)[metrics].mean()
    counts = table.assign(ok=ok.astype(int), failed=(~ok).astype(int)).groupby(keys, sort=False)[["ok", "failed"]].sum()
    summary = counts.join(summary, how="left").rename(columns={"ok": "n_runs", "failed": "n_failed"})
    summary = summary.reset_index()
    return summary[keys + metrics + ["n_runs", "n_failed"]]


def foscttm_spread(table, column="foscttm"):
    """max - min of a metric over the successful cells"""
    values = table.loc[table["status"] == STATUS_OK, column].to_numpy(dtype=float)
    if values.size == 0:
        return np.nan
    return float(values.max() - values.min())
