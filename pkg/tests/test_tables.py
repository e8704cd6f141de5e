import pytest

from permgrowth.algebraics import XI_POLY
from permgrowth.sequences import SumSequence, is_legal
from permgrowth.tables import (
    TABLES,
    entries_to_csv,
    enumerate_below_xi,
    table_rows,
    verify_table,
)


def test_table_one_row_count():
    entries = table_rows(1)
    assert len(entries) == 11
    assert all(e.table == 1 for e in entries)


def test_table_one_first_row_is_threshold_polynomial():
    by_family = {e.family: e for e in table_rows(1)}
    e = by_family["1,1,2,4,3,3,2,1"]
    assert e.polynomial == XI_POLY
    assert e.position == "at"
    assert e.sequence == SumSequence.parse("1,1,2,4,3,3,2,1")


def test_all_table_sequences_are_legal():
    for which in TABLES:
        for e in table_rows(which, max_index=4):
            assert is_legal(e.sequence), (which, e.family)


def test_rows_sorted_by_growth():
    for which in TABLES:
        growths = [e.growth for e in table_rows(which, max_index=4)]
        assert growths == sorted(growths)


def test_verify_table_report_shape():
    result = verify_table(1, max_index=4)
    assert set(result) == {"table", "checked", "problems", "passed"}
    assert result["table"] == 1
    assert result["passed"] is True
    assert result["problems"] == []
    assert result["checked"] == 11


def test_enumerate_below_xi_positions_and_order():
    entries = enumerate_below_xi(max_index=5)
    assert entries
    assert all(e.position == "below" for e in entries)
    growths = [e.growth for e in entries]
    assert growths == sorted(growths)
    # every listed growth rate sits strictly below the threshold
    assert growths[-1] < 2.305224
    # the kappa row is present: first accumulation point from below
    assert any(e.family == "1,1,2^inf" for e in entries)


def test_entries_to_csv_format():
    text = entries_to_csv(table_rows(1))
    lines = text.splitlines()
    assert lines[0] == "table,family,assignment,sequence,polynomial,growth,position"
    assert len(lines) == 12
    assert text.endswith("\n")
    import csv
    import io

    rows = list(csv.reader(io.StringIO(text)))
    # fixed rows carry an empty assignment column
    assert rows[1][2] == ""
    assert rows[1][0] == "1"
    assert rows[1][6] in {"at", "above", "below"}


@pytest.mark.parametrize("which", [2, 3, 4])
def test_parameterized_tables_verify_at_low_index(which):
    # index 5 is the smallest bound at which the slowest families get
    # within the convergence tolerance of their limits
    result = verify_table(which, max_index=5)
    assert result["passed"], result["problems"]
    assert result["checked"] > 0
