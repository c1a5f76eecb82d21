from labalign import generate_helix_pair, generate_blobs_pair
from labalign.errors import ValidationError
import numpy as np
import pytest


def test_helix_contract():
    source, target, pairs = generate_helix_pair(n=300, classes=5, noise=0.05, seed=42)
    assert(source.features.shape == (300, 3) and target.features.shape == (300, 3))
    assert(len(pairs) == 300)
    assert(np.array_equal(pairs.source, np.arange(300)) and np.array_equal(pairs.target, np.arange(300)))
    assert(source.classes == ["0", "1", "2", "3", "4"])
    assert(list(source.labels) == list(target.labels))
    assert(source.name == "source" and target.name == "target")


def test_helix_without_noise_is_a_line():
    source, target, pairs = generate_helix_pair(n=10, classes=2, noise=0.0, seed=0)
    assert(np.all(target.features[:, :2] == 0.0))
    centered = target.features - target.features.mean(axis=0)
    assert(np.linalg.matrix_rank(centered) == 1)
    # helix rows lie on the unit cylinder
    assert(np.allclose(np.linalg.norm(source.features[:, :2], axis=1), 1.0))
    # both curves share the height coordinate
    assert(np.array_equal(source.features[:, 2], target.features[:, 2]))


def test_helix_class_histogram():
    counts = np.zeros(5)
    for seed in range(30):
        source, _, _ = generate_helix_pair(n=300, classes=5, noise=0.05, seed=seed)
        counts += [np.sum(source.labels == str(c)) for c in range(5)]
    expected = 30 * 300 / 5
    chi2 = np.sum((counts - expected) ** 2 / expected)
    # 4 degrees of freedom, 0.999 quantile
    assert(chi2 < 18.47)


def test_generators_are_deterministic():
    first = generate_helix_pair(n=50, seed=7)
    second = generate_helix_pair(n=50, seed=7)
    for a, b in zip(first[:2], second[:2]):
        assert(np.array_equal(a.features, b.features))
        assert(list(a.labels) == list(b.labels))
    other = generate_helix_pair(n=50, seed=8)
    assert(not np.array_equal(first[0].features, other[0].features))
    first = generate_blobs_pair(seed=1)
    second = generate_blobs_pair(seed=1)
    assert(np.array_equal(first[1].features, second[1].features))


def test_blobs_contract():
    source, target, pairs = generate_blobs_pair(n=40, classes=2, dims_source=3, dims_target=5, separation=10, seed=1)
    assert(source.features.shape == (40, 3) and target.features.shape == (40, 5))
    assert(len(pairs) == 40)
    assert(source.classes == ["0", "1"])
    assert(np.sum(source.labels == "0") == 20)
    # class centers sit at the separation distance from the origin
    for c in ("0", "1"):
        center = source.features[source.labels == c].mean(axis=0)
        assert(abs(np.linalg.norm(center) - 10) < 1.5)


def test_generator_errors():
    with pytest.raises(ValidationError, match="at least 2 classes"):
        generate_helix_pair(n=10, classes=1)
    with pytest.raises(ValidationError):
        generate_helix_pair(n=3, classes=5)
    with pytest.raises(ValidationError):
        generate_helix_pair(n=10, noise=-1)
    with pytest.raises(ValidationError):
        generate_blobs_pair(dims_source=0)
    with pytest.raises(ValidationError):
        generate_blobs_pair(separation=-1.0)
