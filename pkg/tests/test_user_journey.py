"""
User Journey Tests
End-to-end workflows that chain several commands the way a user would.
"""

import csv
import json
import logging

import pytest
from click.testing import CliRunner

from src.cli import cli
from src.output import validate_envelope


logger = logging.getLogger(__name__)

JOURNEY_FUNCTIONS = ["0", "1,0", "0,1,1", "2,0,1", "1,2,3,0,0", "0,0,1,2,3"]


@pytest.fixture
def runner():
    return CliRunner()


def invoke_json(runner, args, exit_code=0):
    result = runner.invoke(cli, args + ['--json'])
    assert result.exit_code == exit_code, result.output
    envelope = json.loads(result.stdout)
    validate_envelope(envelope)
    return envelope['result']


class TestUserJourneyConstructAndVerify:
    """Journey: construct a representation, then check it independently"""

    @pytest.mark.parametrize("fn", JOURNEY_FUNCTIONS)
    @pytest.mark.parametrize("mode", ["bound", "tight"])
    def test_journey_repr_then_verify(self, runner, fn, mode):
        rep = invoke_json(runner, ['repr', fn, '--mode', mode])
        logger.info(f"{fn} ({mode}): m={rep['m']}")

        checked = invoke_json(runner, [
            'verify', fn, '--m', rep['m'], '--a', rep['a'], '--j', ','.join(rep['j'])
        ])
        assert checked['valid'] is True

    def test_journey_tampering_is_caught(self, runner):
        rep = invoke_json(runner, ['repr', '2,0,1', '--mode', 'tight'])
        j = [int(v) for v in rep['j']]
        j[0] += 1

        checked = invoke_json(runner, [
            'verify', '2,0,1', '--m', rep['m'], '--a', rep['a'], '--j', ','.join(map(str, j))
        ], exit_code=1)
        assert checked['valid'] is False


class TestUserJourneyInspect:
    """Journey: inspect the polynomials before choosing x"""

    @pytest.mark.parametrize("fn", JOURNEY_FUNCTIONS)
    def test_journey_threshold_matches_bound_mode(self, runner, fn):
        polys = invoke_json(runner, ['charpoly', fn])
        rep = invoke_json(runner, ['repr', fn])
        assert rep['x'] == polys['threshold']

        # m is det(xI - A) evaluated at x
        x = int(rep['x'])
        m = sum(int(c) * x ** k for k, c in enumerate(polys['char_poly']))
        assert int(rep['m']) == m

    def test_journey_explicit_x_between_tight_and_threshold(self, runner):
        polys = invoke_json(runner, ['charpoly', '0,1,1'])
        tight = invoke_json(runner, ['repr', '0,1,1', '--mode', 'tight'])
        for x in range(int(tight['x']), int(polys['threshold']) + 1):
            rep = invoke_json(runner, ['repr', '0,1,1', '--x', str(x)])
            assert rep['certificate']['passed'] is True


class TestUserJourneyMinimize:
    """Journey: compare the construction with the smallest modulus"""

    @pytest.mark.parametrize("fn", JOURNEY_FUNCTIONS[:4])
    def test_journey_minimal_never_exceeds_construction(self, runner, fn):
        found = invoke_json(runner, ['minimal', fn])
        assert found['found'] is True
        assert int(found['m']) <= int(found['constructive_m'])

        checked = invoke_json(runner, [
            'verify', fn, '--m', found['m'], '--a', found['a'], '--j', ','.join(found['j'])
        ])
        assert checked['valid'] is True


class TestUserJourneyBatch:
    """Journey: sweep a whole domain, then audit the CSV"""

    def test_journey_batch_rows_verify_individually(self, runner, tmp_path):
        out = tmp_path / 'sweep.csv'
        summary = invoke_json(runner, ['batch', '--n', '2', '--out', str(out)])
        assert summary['failures'] == []

        with open(out, newline='') as stream:
            rows = list(csv.DictReader(stream))
        assert len(rows) == summary['total'] == 4

        for row in rows:
            result = runner.invoke(cli, [
                'verify', row['f'], '--m', row['m'], '--a', row['a'],
                '--j', row['j'].replace(';', ',')
            ])
            assert result.exit_code == 0

    def test_journey_both_modes_agree_on_totals(self, runner, tmp_path):
        bound = invoke_json(runner, ['batch', '--n', '3', '--mode', 'bound',
                                     '--out', str(tmp_path / 'bound.csv')])
        tight = invoke_json(runner, ['batch', '--n', '3', '--mode', 'tight',
                                     '--out', str(tmp_path / 'tight.csv')])
        assert bound['verified'] == tight['verified'] == 27


class TestUserJourneyConfiguration:
    """Journey: project-local configuration changes command defaults"""

    def test_journey_local_config_limits_search(self, runner, tmp_path, monkeypatch):
        config_dir = tmp_path / 'config'
        config_dir.mkdir()
        (config_dir / 'local.yaml').write_text("oracle:\n  max_m: 5\n")
        monkeypatch.chdir(tmp_path)

        assert runner.invoke(cli, ['config', 'oracle.max_m']).output.strip() == 'oracle.max_m = 5'
        result = invoke_json(runner, ['minimal', '0,1,1'], exit_code=4)
        assert result['searched_through'] == '5'

    def test_journey_dotenv_sets_batch_mode(self, runner, tmp_path, monkeypatch):
        (tmp_path / '.env').write_text("LINREP_BATCH_MODE=tight\n")
        monkeypatch.chdir(tmp_path)

        summary = invoke_json(runner, ['batch', '--n', '1', '--out', str(tmp_path / 'one.csv')])
        assert summary['mode'] == 'tight'
