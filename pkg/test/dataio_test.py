from labalign import DomainDataset, PairSet
from labalign import dataio
from labalign.embedding import SharedEmbedding
from labalign.transport import Coupling
from labalign.analysis import MetricReport
from labalign.errors import ValidationError
import json
import numpy as np
import pytest


def write_text(path, text):
    path.write_text(text)
    return str(path)


def test_load_domain_csv(tmp_path):
    fn = write_text(tmp_path / "domain.csv", "f0,f1,label\n1.0,2.0,a\n3.0,4.5,b\n-1,0,a\n")
    dataset = dataio.load_domain_csv(fn)
    assert(dataset.n_samples == 3 and dataset.n_features == 2)
    assert(list(dataset.labels) == ["a", "b", "a"])
    assert(np.array_equal(dataset.features, [[1.0, 2.0], [3.0, 4.5], [-1.0, 0.0]]))
    assert(dataset.name == "domain")
    assert(dataset.classes == ["a", "b"])


def test_load_domain_csv_partial_labels(tmp_path):
    fn = write_text(tmp_path / "domain.csv", "f0,f1,label\n1.0,2.0,a\n3.0,4.5,\n-1,0, b \n")
    dataset = dataio.load_domain_csv(fn)
    assert(list(dataset.labels) == ["a", None, "b"])
    assert(list(dataset.labeled_mask) == [True, False, True])
    assert(dataset.n_labeled == 2)


def test_load_domain_csv_unlabeled_and_named_column(tmp_path):
    fn = write_text(tmp_path / "domain.csv", "x,y,kind\n1,2,u\n3,4,v\n")
    dataset = dataio.load_domain_csv(fn, label_column="kind")
    assert(dataset.n_features == 2 and list(dataset.labels) == ["u", "v"])
    fn = write_text(tmp_path / "plain.csv", "x,y\n1,2\n3,4\n")
    dataset = dataio.load_domain_csv(fn)
    assert(dataset.n_labeled == 0)
    with pytest.raises(ValidationError, match="at least one labeled row"):
        dataset.check_labeled()


def test_load_domain_csv_errors(tmp_path):
    fn = write_text(tmp_path / "bad.csv", "f0,f1,label\n1.0,2.0,a\nabc,4.5,b\n")
    with pytest.raises(ValidationError) as error:
        dataio.load_domain_csv(fn)
    assert("'abc'" in str(error.value) and "row 1" in str(error.value) and "'f0'" in str(error.value))
    with pytest.raises(FileNotFoundError):
        dataio.load_domain_csv(str(tmp_path / "missing.csv"))
    fn = write_text(tmp_path / "ok.csv", "f0,label\n1.0,a\n")
    with pytest.raises(ValidationError, match="not found"):
        dataio.load_domain_csv(fn, label_column="class")
    fn = write_text(tmp_path / "header_only.csv", "f0,label\n")
    with pytest.raises(ValidationError, match="no data rows"):
        dataio.load_domain_csv(fn)


def test_domain_dataset_validation():
    with pytest.raises(ValidationError, match="row 1, column 0"):
        DomainDataset(np.array([[1.0], [np.nan]]))
    with pytest.raises(ValidationError):
        DomainDataset(np.zeros(3))
    with pytest.raises(ValidationError):
        DomainDataset(np.zeros((2, 2)), ["a"])
    assert(DomainDataset(np.zeros((2, 2))).name == "domain")


def test_domain_csv_round_trip(tmp_path):
    rng = np.random.default_rng(0)
    features = rng.normal(size=(200, 3))
    features[0] = [0.1 + 0.2, 1 / 3, np.nextafter(1.0, 2.0)]
    labels = ["a", None, "b", "a", "b", None, "c"] * 28 + ["a"] * 4
    dataset = DomainDataset(features, labels, "source")
    fn = str(tmp_path / "source.csv")
    dataio.write_domain_csv(dataset, fn)
    loaded = dataio.load_domain_csv(fn, name="source")
    assert(np.array_equal(loaded.features, dataset.features))
    assert(list(loaded.labels) == list(dataset.labels))


def test_pairs(tmp_path):
    fn = str(tmp_path / "pairs.csv")
    dataio.write_pairs_csv(PairSet([[0, 2], [1, 0], [2, 1]]), fn)
    pairs = dataio.load_pairs_csv(fn)
    assert(np.array_equal(pairs.pairs, [[0, 2], [1, 0], [2, 1]]))
    with pytest.raises(ValidationError, match="duplicate target"):
        PairSet([[0, 1], [1, 1]])
    fn = write_text(tmp_path / "bad_pairs.csv", "src,tgt\n0,0\n")
    with pytest.raises(ValidationError, match="source,target"):
        dataio.load_pairs_csv(fn)
    fn = write_text(tmp_path / "float_pairs.csv", "source,target\n0,0.5\n")
    with pytest.raises(ValidationError, match="integers"):
        dataio.load_pairs_csv(fn)


def test_load_labels_csv(tmp_path):
    fn = write_text(tmp_path / "labels.csv", "cell_type\nT\nB\n")
    assert(list(dataio.load_labels_csv(fn)) == ["T", "B"])
    fn = write_text(tmp_path / "indexed.csv", "id,label\n0,T\n1,\n2,B\n")
    assert(list(dataio.load_labels_csv(fn)) == ["T", None, "B"])
    fn = write_text(tmp_path / "domain.csv", "f0,label\n1,x\n2,y\n")
    assert(list(dataio.load_labels_csv(fn)) == ["x", "y"])


def test_write_coupling_permutation(tmp_path):
    values = np.zeros((4, 4))
    values[[0, 1, 2, 3], [2, 0, 3, 1]] = 1.0
    fn = tmp_path / "coupling.csv"
    dataio.write_coupling(Coupling(values), str(fn), threshold=0.5)
    lines = fn.read_text().splitlines()
    assert(lines[0] == "i,j,value")
    assert(lines[1:] == ["0,2,1", "1,0,1", "2,3,1", "3,1,1"])


def test_embedding_round_trip(tmp_path):
    rng = np.random.default_rng(1)
    coords = rng.normal(size=(9, 3))
    embedding = SharedEmbedding(coords, np.array([0.1, 0.2, 0.3]), 5)
    fn = str(tmp_path / "embedding.csv")
    dataio.write_embedding(embedding, fn)
    source, target = dataio.read_coordinates_csv(fn)
    assert(np.max(np.abs(source - coords[:5])) <= 1e-12)
    assert(np.max(np.abs(target - coords[5:])) <= 1e-12)
    with open(fn) as f:
        assert(f.readline().strip() == "domain,row,e0,e1,e2")


def test_projection_file(tmp_path):
    fn = str(tmp_path / "projection.csv")
    dataio.write_projection(np.ones((2, 2)), np.zeros((3, 2)), fn)
    source, target = dataio.read_coordinates_csv(fn)
    assert(source.shape == (2, 2) and target.shape == (3, 2))


def test_write_metrics(tmp_path):
    fn = tmp_path / "metrics.json"
    dataio.write_metrics(MetricReport(foscttm=0.0, label_transfer={1: 1.0}), str(fn))
    assert(json.loads(fn.read_text()) == {"foscttm": 0.0, "acc_1": 1.0})
    dataio.write_metrics({"spectral_foscttm": 0.5}, str(fn))
    assert(json.loads(fn.read_text()) == {"spectral_foscttm": 0.5})


def test_export_joint_distance(tmp_path):
    W = np.array([[0.5, 0.2, 0.0], [0.2, 0.5, 1.3], [0.0, 1.3, 0.5]])
    fn = str(tmp_path / "distance.csv")
    dataio.export_joint_distance(W, fn)
    distance = np.loadtxt(fn, delimiter=",")
    assert(np.all(distance >= 0) and np.all(distance <= 1))
    assert(np.all(np.diag(distance) == 0))
    assert(abs(distance[0, 1] - 0.8) < 1e-15 and distance[1, 2] == 0.0)


def test_mask_labels():
    dataset = DomainDataset(np.arange(20, dtype=float).reshape(10, 2), ["a", "b"] * 5, "target")
    masked = dataset.mask_labels(0.4, seed=3)
    assert(masked.n_labeled == 4)
    kept = masked.labeled_mask
    assert(list(masked.labels[kept]) == list(dataset.labels[kept]))
    assert(np.array_equal(masked.features, dataset.features))
    again = dataset.mask_labels(0.4, seed=3)
    assert(list(again.labels) == list(masked.labels))
    assert(dataset.mask_labels(1.0).n_labeled == 10)
    with pytest.warns(RuntimeWarning, match="removed every label"):
        dataset.mask_labels(0.0)
    with pytest.raises(ValidationError):
        dataset.mask_labels(1.5)
