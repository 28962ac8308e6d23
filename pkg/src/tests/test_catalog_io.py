import pytest

from immersion_census.census.immersion_class import Method
from immersion_census.data_exporters.write_catalog import CatalogIOError, write_catalog
from immersion_census.data_loaders.load_catalog import load_catalog, load_catalog_frame


@pytest.mark.parametrize("method", [Method.X, Method.U_CYCLIC, Method.Z])
def test_catalog_is_read_back(classes_for, tmp_path, method):
    classes = classes_for(method, 3)
    path = write_catalog(classes, tmp_path / "nested" / "catalog.jsonl")
    assert load_catalog(path) == classes


def test_flags_are_stored(classes_for, tmp_path):
    classes = classes_for(Method.Z, 2)
    flags = [{"kink_free": False, "achiral": None} for _ in classes]
    frame = load_catalog_frame(write_catalog(classes, tmp_path / "c.jsonl", flags))
    assert list(frame["flags"]) == flags
    assert len(frame) == len(classes)


def test_one_record_per_line(classes_for, tmp_path):
    classes = classes_for(Method.Z, 3)
    text = write_catalog(classes, tmp_path / "c.jsonl").read_text()
    assert text.endswith("\n")
    assert len(text.splitlines()) == len(classes) == 22


def test_empty_catalog(tmp_path):
    path = write_catalog([], tmp_path / "empty.jsonl")
    assert path.read_text() == ""
    assert load_catalog(path) == []


def test_missing_catalog(tmp_path):
    with pytest.raises(CatalogIOError):
        load_catalog(tmp_path / "absent.jsonl")


def test_unwritable_catalog(classes_for, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    with pytest.raises(CatalogIOError):
        write_catalog(classes_for(Method.Z, 1), blocker / "catalog.jsonl")
