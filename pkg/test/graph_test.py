from labalign import DomainDataset
from labalign.graph import knn_bandwidths, alpha_decay_kernel, diffusion_operator, AffinityMatrix
from labalign.errors import NumericalError, ValidationError
import numpy as np
import pytest

colinear = np.array([[0.0], [1.0], [3.0]])


def random_points(n, dims, seed):
    return np.random.default_rng(seed).normal(size=(n, dims))


def test_bandwidths_colinear():
    sigma = knn_bandwidths(colinear, 1)
    assert(np.allclose(sigma, [1.0, 1.0, 2.0], atol=0))


def test_bandwidths_largest_k_is_max_distance():
    sigma = knn_bandwidths(colinear, 2)
    assert(np.allclose(sigma, [3.0, 2.0, 3.0], atol=0))


def test_bandwidths_sort_oracle():
    X = random_points(50, 4, 0)
    for k in (1, 5, 49):
        sigma = knn_bandwidths(X, k)
        for i in range(50):
            others = sorted(np.linalg.norm(X[i] - X[j]) for j in range(50) if j != i)
            assert(abs(sigma[i] - others[k - 1]) < 1e-12)


def test_bandwidths_accept_dataset():
    dataset = DomainDataset(colinear, ["a", "b", "a"])
    assert(np.allclose(knn_bandwidths(dataset, 1), knn_bandwidths(colinear, 1)))


def test_bandwidth_errors():
    with pytest.raises(ValidationError):
        knn_bandwidths(colinear, 0)
    with pytest.raises(ValidationError):
        knn_bandwidths(colinear, 3)
    duplicates = np.array([[0.0], [0.0], [0.0], [5.0]])
    with pytest.raises(NumericalError, match="row 0"):
        knn_bandwidths(duplicates, 2)


def test_kernel_hand_values():
    W = alpha_decay_kernel(colinear, alpha=2, k=1)
    assert(abs(W.values[0, 1] - np.exp(-1.0)) < 1e-12)
    expected = 0.5 * np.exp(-9.0) + 0.5 * np.exp(-2.25)
    assert(abs(W.values[0, 2] - expected) < 1e-12)
    assert(abs(W.values[0, 2] - 0.0527) < 1e-3)
    assert(np.all(np.diag(W.values) == 1.0))
    assert(W.alpha == 2 and W.k == 1)


def test_kernel_defaults_and_invariants():
    X = random_points(40, 3, 1)
    W = alpha_decay_kernel(X)
    assert(W.alpha == 10.0 and W.k == 10)
    assert(np.max(np.abs(W.values - W.values.T)) <= 1e-12)
    assert(np.all(W.values >= 0) and np.all(W.values <= 1))


def test_kernel_scale_invariance():
    X = random_points(60, 5, 2)
    W = alpha_decay_kernel(X, 10, 10).values
    W_scaled = alpha_decay_kernel(1000.0 * X, 10, 10).values
    assert(np.max(np.abs(W - W_scaled)) <= 1e-12)


def test_kernel_permutation_equivariance():
    X = random_points(30, 3, 3)
    perm = np.random.default_rng(4).permutation(30)
    W = alpha_decay_kernel(X, 10, 5).values
    W_perm = alpha_decay_kernel(X[perm], 10, 5).values
    assert(np.allclose(W[np.ix_(perm, perm)], W_perm, atol=1e-14))
    P = diffusion_operator(AffinityMatrix(W)).values
    P_perm = diffusion_operator(AffinityMatrix(W_perm)).values
    assert(np.allclose(P[np.ix_(perm, perm)], P_perm, atol=1e-14))


def test_kernel_bad_alpha():
    with pytest.raises(ValidationError):
        alpha_decay_kernel(colinear, alpha=0, k=1)


def test_diffusion_operator_closed_form():
    c = 0.3
    W = AffinityMatrix(np.array([[1.0, c], [c, 1.0]]))
    P = diffusion_operator(W)
    expected = np.array([[1, c], [c, 1]]) / (1 + c)
    assert(np.allclose(P.values, expected, atol=1e-15))
    assert(np.allclose(P.degrees, [1 + c, 1 + c]))


def test_diffusion_operator_isolated_points():
    P = diffusion_operator(AffinityMatrix(np.eye(4)))
    assert(np.array_equal(P.values, np.eye(4)))


def test_diffusion_operator_stochastic_and_reversible():
    W = alpha_decay_kernel(random_points(20, 3, 5), 10, 5)
    P = diffusion_operator(W)
    assert(np.max(np.abs(P.values.sum(axis=1) - 1.0)) <= 1e-12)
    assert(np.all(P.values >= 0))
    d = np.sqrt(P.degrees)
    S = d[:, None] * P.values / d[None, :]
    assert(np.max(np.abs(S - S.T)) <= 1e-10)
