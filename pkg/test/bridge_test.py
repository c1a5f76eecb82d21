from labalign.bridge import shared_classes, class_priors, label_profile, cosine_cost, LabelProfile
from labalign.diffusion import DPTSimilarity
from labalign.graph import alpha_decay_kernel, diffusion_operator
from labalign.diffusion import stationary_distribution, dpt_similarity
from labalign import generate_blobs_pair
from labalign.errors import NumericalError, ValidationError
import warnings
import numpy as np
import pytest

two_state_M = DPTSimilarity(np.array([[1 / 9, -1 / 9], [-5 / 9, 5 / 9]]))


def test_shared_classes():
    assert(shared_classes(["A", "B", "C"], ["B", "C", "D"]) == ["B", "C"])
    assert(shared_classes(["b", "a", None, ""], [" a", "b "]) == ["a", "b"])
    assert(shared_classes([1, 2, 2], ["2", "1"]) == ["1", "2"])


def test_shared_classes_errors():
    with pytest.raises(ValidationError, match="single class"):
        shared_classes(["A", "A"], ["A"])
    with pytest.raises(ValidationError, match="share no class"):
        shared_classes(["A", "B"], ["C", "D"])
    with pytest.raises(ValidationError):
        shared_classes([None, None], ["A", "B"])


def test_two_fully_labeled_classes_warn():
    with pytest.warns(RuntimeWarning, match="collinear"):
        shared_classes(["A", "B", "A"], ["B", "A"])
    with warnings.catch_warnings():
        warnings.simplefilter("error", RuntimeWarning)
        assert(shared_classes(["A", "B", None], ["B", "A"]) == ["A", "B"])
        assert(shared_classes(["A", "B", "C"], ["A", "B", "C"]) == ["A", "B", "C"])


def test_class_priors():
    assert(np.allclose(class_priors(["A"] * 5 + ["B"] * 5, ["A", "B"]), [0.5, 0.5]))
    assert(np.allclose(class_priors(["A"] * 9 + ["B"], ["A", "B"]), [0.9, 0.1]))
    partial = ["A"] * 30 + ["B"] * 20 + [None] * 50
    assert(np.allclose(class_priors(partial, ["A", "B"]), [0.6, 0.4]))
    # labels outside the shared set do not count
    assert(np.allclose(class_priors(["A", "B", "B", "Z", "Z"], ["A", "B"]), [1 / 3, 2 / 3]))
    with pytest.raises(ValidationError):
        class_priors(["A", "A"], ["A", "B"])


def test_label_profile_substitution():
    profile = label_profile(two_state_M, ["A", "B"], ["A", "B"], [0.5, 0.5])
    expected = np.array([[2 / 9, -2 / 9], [-10 / 9, 10 / 9]])
    assert(np.max(np.abs(profile.values - expected)) <= 1e-12)
    assert(profile.class_order == ["A", "B"])


def test_label_profile_unlabeled_rows():
    rng = np.random.default_rng(0)
    M = rng.normal(size=(5, 5))
    labels = ["A", None, "B", None, "A"]
    profile = label_profile(M, labels, ["A", "B"], [2 / 3, 1 / 3])
    assert(profile.values.shape == (5, 2))
    assert(np.allclose(profile.values[:, 0], (M[:, 0] + M[:, 4]) / (2 / 3)))
    assert(np.allclose(profile.values[:, 1], M[:, 2] / (1 / 3)))


def test_label_profile_outside_classes_warns():
    M = np.array([[1.0, 0.2, 0.1], [0.2, 1.0, 0.3], [0.1, 0.3, 1.0]])
    with pytest.warns(RuntimeWarning, match="not shared"):
        profile = label_profile(M, ["A", "B", "Z"], ["A", "B"], [0.5, 0.5])
    assert(np.allclose(profile.values[:, 0], 2 * M[:, 0]))


def test_label_profile_degenerate_row():
    M = np.array([[0.0, 0.0], [-0.5, 0.5]])
    with pytest.raises(NumericalError, match="row 0"):
        label_profile(M, ["A", "B"], ["A", "B"], [0.5, 0.5])


def test_cosine_cost_examples():
    px = LabelProfile(np.array([[1.0, 0.0], [3.0, 4.0], [1.0, 2.0]]), ["A", "B"], np.array([0.5, 0.5]))
    py = LabelProfile(np.array([[0.0, 1.0], [6.0, 8.0], [-1.0, -2.0]]), ["A", "B"], np.array([0.5, 0.5]))
    D = cosine_cost(px, py)
    assert(D.shape == (3, 3))
    assert(abs(D.values[0, 0] - 1.0) < 1e-12)
    assert(abs(D.values[1, 1]) < 1e-12)
    assert(abs(D.values[2, 2] - 2.0) < 1e-12)
    assert(np.all(D.values >= 0) and np.all(D.values <= 2))


def test_cosine_cost_row_scaling():
    rng = np.random.default_rng(1)
    values = rng.normal(size=(6, 3))
    py = LabelProfile(rng.normal(size=(4, 3)), ["A", "B", "C"], np.ones(3) / 3)
    D = cosine_cost(LabelProfile(values, ["A", "B", "C"], np.ones(3) / 3), py).values
    scaled = values * rng.uniform(0.1, 10, size=(6, 1))
    D_scaled = cosine_cost(LabelProfile(scaled, ["A", "B", "C"], np.ones(3) / 3), py).values
    assert(np.max(np.abs(D - D_scaled)) <= 1e-12)
    # consistent reordering of the classes
    order = [2, 0, 1]
    D_reordered = cosine_cost(LabelProfile(values[:, order], ["C", "A", "B"], np.ones(3) / 3),
                              LabelProfile(py.values[:, order], ["C", "A", "B"], np.ones(3) / 3)).values
    assert(np.max(np.abs(D - D_reordered)) <= 1e-12)


def test_cosine_cost_class_order_mismatch():
    px = LabelProfile(np.eye(2), ["A", "B"], np.array([0.5, 0.5]))
    py = LabelProfile(np.eye(2), ["B", "A"], np.array([0.5, 0.5]))
    with pytest.raises(ValidationError):
        cosine_cost(px, py)


def test_label_profile_class_resampling():
    source, _, _ = generate_blobs_pair(n=45, classes=3, separation=1.0, seed=3)
    P = diffusion_operator(alpha_decay_kernel(source, 10.0, 10))
    M = dpt_similarity(P, stationary_distribution(P)).values
    labels = source.labels
    classes = ["0", "1", "2"]
    # every sample of class "0" counted twice, the geometry untouched
    doubled = np.flatnonzero(labels == "0")
    M_doubled = np.hstack([M, M[:, doubled]])
    labels_doubled = np.concatenate([labels, labels[doubled]])
    profile = label_profile(M, labels, classes, class_priors(labels, classes))
    resampled = label_profile(M_doubled, labels_doubled, classes, class_priors(labels_doubled, classes))
    ratio = (len(labels) + doubled.size) / len(labels)
    assert(np.allclose(resampled.values, ratio * profile.values, rtol=1e-10, atol=1e-12))
    D = cosine_cost(profile, profile).values
    assert(np.max(np.abs(cosine_cost(resampled, resampled).values - D)) <= 1e-10)
    # without the prior normalization the doubled class pulls the profiles
    flat = np.ones(3) / 3
    raw = cosine_cost(label_profile(M_doubled, labels_doubled, classes, flat),
                      label_profile(M_doubled, labels_doubled, classes, flat)).values
    assert(np.max(np.abs(raw - D)) > 1e-6)
