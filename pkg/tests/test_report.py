import csv

from lacodes import counting, scaffold
from lacodes.report import (
    BOUND_COLUMNS,
    bounds_figure,
    bounds_rows,
    weight_figure,
    write_bounds_csv,
    write_weight_csv,
)


def test_bounds_rows_values():
    rows = bounds_rows([16, 32])
    assert [row["n"] for row in rows] == [16, 32]
    assert rows[0]["vasilev"] == 19.0
    assert abs(rows[0]["la_exact"] - counting.log2_int(15692092416000000)) < 1e-9
    for row in rows:
        assert row["vasilev"] < row["krotov2000"] < row["la_exact"] <= row["la_upper"]


def test_bounds_csv(tmp_path):
    rows = bounds_rows([16, 32, 64])
    path = tmp_path / "bounds.csv"
    write_bounds_csv(path, rows)
    with path.open() as fh:
        records = list(csv.DictReader(fh))
    assert len(records) == 3
    assert list(records[0]) == BOUND_COLUMNS
    assert float(records[0]["vasilev"]) == 19.0


def test_figures_render(tmp_path):
    rows = bounds_rows([16, 32, 64])
    fig_path = tmp_path / "bounds.png"
    bounds_figure(fig_path, rows)
    assert fig_path.stat().st_size > 1000
    code = scaffold.hamming_code(16)
    weight_path = tmp_path / "w.png"
    weight_figure(weight_path, code, 16)
    assert weight_path.stat().st_size > 1000
    csv_path = tmp_path / "w.csv"
    write_weight_csv(csv_path, code, 16)
    body = csv_path.read_text().splitlines()
    assert body[0] == "weight,count"
    assert "4,140" in body
