import pytest

from toricdim.config import RunConfig
from toricdim.tables import (
    CSV_COLUMNS,
    _tuples_with_index,
    run_table,
)

CFG = RunConfig(trials=3, seed=0)


def test_tuples_with_index_enumeration():
    # index sum(r_i - 1) + 1 fixed at 7, two factors
    assert list(_tuples_with_index(2, 7)) == [(2, 6), (3, 5), (4, 4)]
    assert list(_tuples_with_index(3, 5)) == [(2, 2, 3)]
    for m, big_r in ((2, 9), (3, 8)):
        for t in _tuples_with_index(m, big_r):
            assert len(t) == m
            assert all(r >= 2 for r in t)
            assert tuple(sorted(t)) == t
            assert sum(r - 1 for r in t) + 1 == big_r


def test_veronese_table_all_rows_pass():
    rows = run_table("veronese", CFG)
    assert len(rows) == 135
    assert all(row.passed for row in rows)
    assert {row.descriptor for row in rows} == {
        "veronese:d=3,n=4",
        "veronese:d=4,n=2",
        "veronese:d=4,n=3",
        "veronese:d=4,n=4",
    }
    # target is the single-secant parameter bound, here always = N
    for row in rows:
        assert row.expected_dim == row.ambient_dim
        assert row.computed_dim == row.ambient_dim


def test_binary_table_all_rows_pass():
    rows = run_table("binary", CFG)
    assert len(rows) == 11
    assert all(row.passed for row in rows)
    assert rows[-1].descriptor == "sv:d=1,1,1,1;n=1,1,1,1"
    assert rows[-1].r == (2, 2)
    assert rows[-1].computed_dim == 14
    assert all(row.descriptor == "sv:d=2,2,2;n=1,1,1" for row in rows[:-1])
    assert all(row.computed_dim == 26 for row in rows[:-1])


def test_experiments_table_gating_subset():
    rows = run_table("experiments", CFG)
    assert len(rows) == 150
    assert all(row.passed for row in rows)
    assert all(len(row.r) == 2 for row in rows)
    assert all(row.r[0] <= row.r[1] for row in rows)
    assert all(row.R <= 12 for row in rows)
    descs = {row.descriptor for row in rows}
    assert descs == {f"veronese:d=2,n={n}" for n in range(2, 7)}


def test_table_rows_serialize_with_frozen_columns():
    row = run_table("binary", CFG)[0]
    d = row.to_dict()
    assert tuple(d.keys()) == CSV_COLUMNS
    assert d["pass"] is True
    assert d["table"] == "binary"


def test_unknown_table_rejected():
    with pytest.raises(ValueError, match="unknown table"):
        run_table("nonsense", CFG)
