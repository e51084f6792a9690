"""
Test Suite for Exhaustive Sweeps and CSV Export
"""

import csv
import io

import pytest

from src.core.batch import run_sweep, summarize
from src.core.errors import EnumerationCapError, InputError
from src.core.linrep import Mode
from src.output.report import CSV_HEADER, write_batch_csv


TIGHT_N2_CSV = (
    'f,x,m,a,j,verified\n'
    '"0,0",3,6,3,"3;5","true"\n'
    '"0,1",4,9,4,"3;6","true"\n'
    '"1,0",3,8,3,"5;7","true"\n'
    '"1,1",4,12,4,"5;8","true"\n'
)


class TestRunSweep:
    """Tests for sweeping every function on n elements"""

    def test_rows_in_lexicographic_order(self):
        rows = run_sweep(2, Mode.TIGHT)
        assert [row.function.render() for row in rows] == ["0,0", "0,1", "1,0", "1,1"]
        assert all(row.verified for row in rows)

    @pytest.mark.parametrize("mode", [Mode.BOUND, Mode.TIGHT])
    def test_every_function_on_three_verifies(self, mode):
        rows = run_sweep(3, mode)
        summary = summarize(3, mode, rows, with_minimal=False)
        assert summary.total == 27
        assert summary.verified == 27
        assert summary.failures == []

    def test_workers_preserve_order(self):
        single = run_sweep(3, Mode.TIGHT, workers=1)
        threaded = run_sweep(3, Mode.TIGHT, workers=4)
        assert single == threaded

    def test_with_minimal(self):
        rows = run_sweep(2, Mode.BOUND, with_minimal=True)
        assert [row.minimal_m for row in rows] == [2, 2, 3, 2]

    def test_empty_domain(self):
        rows = run_sweep(0, Mode.BOUND)
        assert len(rows) == 1
        assert rows[0].representation.m == 1
        assert rows[0].verified

    def test_cap(self):
        with pytest.raises(EnumerationCapError):
            run_sweep(9, Mode.BOUND)

    def test_constructed_modes_only(self):
        with pytest.raises(InputError):
            run_sweep(2, Mode.EXPLICIT)


class TestSummary:
    """Tests for sweep totals"""

    def test_to_dict(self):
        rows = run_sweep(1, Mode.BOUND)
        assert summarize(1, Mode.BOUND, rows, with_minimal=False).to_dict() == {
            'n': 1,
            'mode': 'bound-derived',
            'total': 1,
            'verified': 1,
            'failures': [],
            'with_minimal': False,
        }


class TestCsvExport:
    """Tests for the batch CSV format"""

    def test_exact_output(self):
        stream = io.StringIO()
        count = write_batch_csv(run_sweep(2, Mode.TIGHT), stream)
        assert count == 4
        assert stream.getvalue() == TIGHT_N2_CSV

    def test_minimal_column(self):
        stream = io.StringIO()
        write_batch_csv(run_sweep(2, Mode.TIGHT, with_minimal=True), stream, with_minimal=True)
        records = list(csv.reader(io.StringIO(stream.getvalue())))
        assert records[0] == CSV_HEADER + ['minimal_m']
        assert [record[-1] for record in records[1:]] == ['2', '2', '3', '2']

    def test_parses_back(self):
        stream = io.StringIO()
        write_batch_csv(run_sweep(3, Mode.BOUND), stream)
        records = list(csv.DictReader(io.StringIO(stream.getvalue())))
        assert len(records) == 27
        assert records[0]['f'] == '0,0,0'
        assert all(record['verified'] == 'true' for record in records)
