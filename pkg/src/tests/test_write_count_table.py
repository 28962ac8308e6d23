import csv
import io
import json

import pandas as pd
import pytest

from immersion_census.census.derive_counts import CountTable
from immersion_census.census.reference_counts import OO_TOTALS_TO_20
from immersion_census.data_exporters.write_catalog import CatalogIOError
from immersion_census.data_exporters.write_count_table import (
    render_count_table,
    render_frame,
    write_count_table,
)

BIG = OO_TOTALS_TO_20[-1]


@pytest.fixture
def table():
    return CountTable.from_records([("OO", 20, 0, BIG), ("UU", 3, 1, 5), ("UU", 3, 0, 6)])


def test_csv_keeps_exact_integers(table):
    rows = list(csv.DictReader(io.StringIO(render_count_table(table))))
    assert [r["kind"] for r in rows] == ["OO", "UU", "UU"]
    assert int(rows[0]["count"]) == BIG
    assert [(r["g"], r["count"]) for r in rows[1:]] == [("0", "6"), ("1", "5")]


def test_json_keeps_exact_integers(table):
    records = json.loads(render_count_table(table, "json"))
    assert records[0] == {"kind": "OO", "n": 20, "g": 0, "count": BIG}
    assert len(records) == 3


def test_totals_frame_without_genus():
    frame = pd.DataFrame([("OO", 20, BIG)], columns=["kind", "n", "count"]).astype(
        {"count": object}
    )
    assert render_frame(frame) == f"kind,n,count\nOO,20,{BIG}\n"


def test_write_to_file(table, tmp_path):
    path = write_count_table(table, tmp_path / "out" / "counts.json", "json")
    assert json.loads(path.read_text())[2]["count"] == 5


def test_unwritable_destination(table, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    with pytest.raises(CatalogIOError):
        write_count_table(table, blocker / "counts.csv")
