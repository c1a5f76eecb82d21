#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# labalign pipeline
#

from dataclasses import dataclass, field
from inspect import signature
import sys
import time

import numpy as np

from .graph import alpha_decay_kernel, diffusion_operator
from .diffusion import stationary_distribution, dpt_similarity
from .bridge import shared_classes, class_priors, label_profile, cosine_cost
from .transport import solve_coupling, knn_coupling, uniform_masses
from .embedding import joint_affinity, spectral_embedding, barycentric_projection, OFFDIAG_MODES
from .errors import StageError, ValidationError
from .analysis.evaluation import evaluate

COUPLING_METHODS = ("ot", "knn")
PROJECTION_DIRECTIONS = ("source_to_target", "target_to_source")
PROJECTIONS = ("spectral", "barycentric", "both")


@dataclass
class AlignmentResult:
    """Every intermediate of one alignment, kept for inspection and export"""

    source_affinity: object = None
    target_affinity: object = None
    source_similarity: object = None
    target_similarity: object = None
    classes: list = None
    source_profile: object = None
    target_profile: object = None
    cost: object = None
    coupling: object = None
    joint: object = None
    embedding: object = None
    timings: dict = field(default_factory=dict)


class _Stage:
    """context manager that times a stage and tags its errors with the stage name"""

    def __init__(self, name, timings):
        self.name = name
        self.timings = timings

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        self.timings[self.name] = self.timings.get(self.name, 0.0) + time.perf_counter() - self.start
        if exc is not None and isinstance(exc, (ValueError, RuntimeError)) and not isinstance(exc, StageError):
            raise StageError(self.name, exc) from exc
        return False


class LabelAlignment:
    def __init__(self,
            alpha=10.0,
            knn=10,
            epsilon=0.0,
            mu=0.5,
            dim=10,
            offdiag_mode="wxy",
            coupling_method="ot",
            knn_coupling_k=1,
            tol=1e-9,
            max_iter=10000,
        ):

        self.alpha = alpha
        self.knn = knn
        self.epsilon = epsilon
        self.mu = mu
        self.dim = dim
        self.offdiag_mode = offdiag_mode
        self.coupling_method = coupling_method
        self.knn_coupling_k = knn_coupling_k
        self.tol = tol
        self.max_iter = max_iter
        self._validate()

    def _validate(self):
        errors = []
        if not self.alpha > 0:
            errors.append("alpha must be > 0, got %s" % self.alpha)
        if int(self.knn) != self.knn or self.knn < 1:
            errors.append("knn must be an integer >= 1, got %s" % self.knn)
        if not self.epsilon >= 0:
            errors.append("epsilon must be >= 0, got %s" % self.epsilon)
        if not 0.0 <= self.mu <= 1.0:
            errors.append("mu must be in [0, 1], got %s" % self.mu)
        if int(self.dim) != self.dim or self.dim < 1:
            errors.append("dim must be an integer >= 1, got %s" % self.dim)
        if self.offdiag_mode not in OFFDIAG_MODES:
            errors.append("offdiag_mode must be one of %s, got '%s'" % (OFFDIAG_MODES, self.offdiag_mode))
        if self.coupling_method not in COUPLING_METHODS:
            errors.append("coupling_method must be one of %s, got '%s'" % (COUPLING_METHODS, self.coupling_method))
        if int(self.knn_coupling_k) != self.knn_coupling_k or self.knn_coupling_k < 1:
            errors.append("knn_coupling_k must be an integer >= 1, got %s" % self.knn_coupling_k)
        if not self.tol > 0 or self.max_iter < 1:
            errors.append("tol must be > 0 and max_iter >= 1")
        if len(errors):
            raise ValidationError("; ".join(errors))
        self.knn = int(self.knn)
        self.dim = int(self.dim)
        self.knn_coupling_k = int(self.knn_coupling_k)

    @classmethod
    def get_defaults_dict(cls):
        defaults = {}
        sig = signature(cls)
        for key in sig.parameters:
            defaults[key] = sig.parameters[key].default
        return defaults

    @classmethod
    def from_config(cls, config):
        expected_keys = cls.get_defaults_dict().keys()
        bad_keys = [k for k in config if k not in expected_keys]
        for key in bad_keys:
            print("ERROR: unexpected key \"%s\" in LabelAlignment.from_config()" % key, file=sys.stderr)
        if len(bad_keys) > 0:
            raise ValidationError("unexpected configuration key(s): %s" % ", ".join(bad_keys))
        return cls(**config)

    def to_dict(self):
        return {key: getattr(self, key) for key in self.get_defaults_dict()}

    def align(self, source, target, masses=None, embed=True):
        """Run the alignment from the two domains to the coupling and embedding

        Args:
            source (DomainDataset): labeled source domain
            target (DomainDataset): fully or partially labeled target domain
            masses (MassVectors): transport masses, defaults to a = 1, b = n/m
            embed (bool): compute the spectral embedding of the joint graph

        Returns:
            AlignmentResult
        """
        result = AlignmentResult()
        timings = result.timings
        for dataset in (source, target):
            dataset.check_labeled()

        # 1. within-domain graphs
        with _Stage("kernel", timings):
            result.source_affinity = alpha_decay_kernel(source, self.alpha, self.knn)
            result.target_affinity = alpha_decay_kernel(target, self.alpha, self.knn)

        # 2. time-aggregated diffusion similarities
        with _Stage("diffusion", timings):
            for affinity, attr in ((result.source_affinity, "source_similarity"),
                                   (result.target_affinity, "target_similarity")):
                P = diffusion_operator(affinity)
                phi0 = stationary_distribution(P)
                setattr(result, attr, dpt_similarity(P, phi0))

        # 3. label profiles and cross-domain cost
        with _Stage("bridge", timings):
            result.classes = shared_classes(source.labels, target.labels)
            result.source_profile = label_profile(result.source_similarity, source.labels, result.classes,
                                                  class_priors(source.labels, result.classes))
            result.target_profile = label_profile(result.target_similarity, target.labels, result.classes,
                                                  class_priors(target.labels, result.classes))
            result.cost = cosine_cost(result.source_profile, result.target_profile)

        # 4. coupling
        with _Stage("transport", timings):
            n, m = result.cost.shape
            if self.coupling_method == "knn":
                result.coupling = knn_coupling(result.cost, self.knn_coupling_k, masses)
            else:
                if masses is None and self.epsilon > 0:
                    masses = uniform_masses(n, m)
                result.coupling = solve_coupling(result.cost, self.epsilon, masses, self.tol, self.max_iter)

        # 5. joint graph, embedding on request
        with _Stage("joint", timings):
            result.joint = joint_affinity(result.source_affinity, result.target_affinity,
                                          result.coupling, self.mu, self.offdiag_mode)
        if embed:
            self.embed(result)
        return result

    def embed(self, result, dim=None):
        """(re)compute the spectral embedding of an aligned result"""
        if dim is None:
            dim = self.dim
        with _Stage("embedding", result.timings):
            result.embedding = spectral_embedding(result.joint, dim)
        return result.embedding

    def score(self, result, source, target, pairs=None, target_labels=None,
              projection="spectral", ks=(1, 10), projected=None):
        """Evaluate an alignment in the spectral space, the target ambient space, or both

        Args:
            target_labels (array-like): true target labels, defaults to target.labels
            projection (str): "spectral", "barycentric" or "both"
            projected (np.ndarray): precomputed source-to-target projection

        Returns:
            dict: metric name -> value, prefixed with the space name for "both"
        """
        if projection not in PROJECTIONS:
            raise ValidationError("projection must be one of %s, got '%s'" % (PROJECTIONS, projection))
        if target_labels is None:
            target_labels = target.labels
        reports = []
        if projection in ("spectral", "both"):
            if result.embedding is None:
                self.embed(result)
            with _Stage("evaluation", result.timings):
                reports.append(evaluate(result.embedding.source, result.embedding.target, pairs,
                                        source.labels, target_labels, ks, "spectral"))
        if projection in ("barycentric", "both"):
            if projected is None:
                projected = self.project(result, source, target)
            with _Stage("evaluation", result.timings):
                reports.append(evaluate(projected, target.features, pairs,
                                        source.labels, target_labels, ks, "ambient"))
        metrics = {}
        for report in reports:
            prefix = report.space + "_" if len(reports) > 1 else ""
            metrics.update(report.to_dict(prefix))
        return metrics

    @staticmethod
    def project(result, source, target, direction="source_to_target"):
        """barycentric projection of one domain into the ambient space of the other"""
        if direction not in PROJECTION_DIRECTIONS:
            raise ValidationError("direction must be one of %s, got '%s'" % (PROJECTION_DIRECTIONS, direction))
        with _Stage("projection", result.timings):
            if direction == "source_to_target":
                return barycentric_projection(result.coupling, target)
            return barycentric_projection(np.asarray(result.coupling.values).T, source)
