"""
Integration tests for the command-line front end.
"""
import json

import pytest

from pybranch.cli import build_parser, config_from_args, main
from pybranch.config import Command, OutputFormat
from pybranch.models.results import SingularElement

pytestmark = pytest.mark.integration


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestArguments:
    """Test flag handling."""

    def test_flags_to_config(self):
        """Flags become a RunConfig; unset flags keep defaults."""
        args = build_parser().parse_args(['branch', '--injection', 'preset:B1-in-A2', '--hw', 'fw:1,1'])
        config = config_from_args(args)
        assert config.command == Command.BRANCH
        assert config.highest_weight == 'fw:1,1'
        assert config.output_format == OutputFormat.TEXT
        assert config.method == 'fan'

    def test_config_file_with_flag_override(self, tmp_path, capsys):
        """--config supplies fields; explicit flags win."""
        path = tmp_path / 'run.json'
        path.write_text(json.dumps({'injection': 'preset:A2-in-G2', 'format': 'text'}), encoding='utf-8')
        code, out, _ = _run(capsys, 'fan', '--config', str(path), '--format', 'json')
        assert code == 0
        assert json.loads(out)['injection'] == 'A2-in-G2'


class TestCommands:
    """Test each command end to end."""

    def test_fan_json(self, capsys):
        """The principal sl2 fan as JSON."""
        code, out, _ = _run(capsys, 'fan', '--injection', 'preset:B1-in-A2', '--format', 'json')
        assert code == 0
        data = json.loads(out)
        assert data['injection'] == 'B1-in-A2'
        assert data['gamma0']['finite'] == ['-1']
        assert data['s0'] == 1
        assert [entry['sign'] for entry in data['entries']] == [-1, -1, 1]

    def test_fan_text(self, capsys):
        """The text rendering lists γ0 and the fan vectors."""
        code, out, _ = _run(capsys, 'fan', '--injection', 'preset:A2-in-G2')
        assert code == 0
        assert 's(γ0) = -1' in out
        assert 'Γ (5 vectors):' in out

    def test_weights(self, capsys):
        """The 14-dimensional G2 module."""
        code, out, _ = _run(capsys, 'weights', '--algebra', 'G2', '--hw', 'fw:1,0')
        assert code == 0
        assert out.splitlines()[0] == 'dim = 14'

    def test_weights_json(self, capsys):
        """Weight diagrams as JSON."""
        code, out, _ = _run(capsys, 'weights', '--algebra', 'A2', '--hw', 'fw:1,1', '--format', 'json')
        data = json.loads(out)
        assert code == 0
        assert data['dimension'] == 8
        assert sum(item['multiplicity'] for item in data['weights']) == 8

    def test_branch(self, capsys):
        """8 = 5 + 3 for the principal sl2."""
        code, out, _ = _run(capsys, 'branch', '--injection', 'preset:B1-in-A2', '--hw', 'fw:1,1')
        assert code == 0
        assert out.splitlines()[0] == 'Branching to B1:'
        assert '1 x fw [4]' in out
        assert '1 x fw [2]' in out

    def test_branch_json_anomalous_table(self, capsys):
        """JSON output carries the anomalous table behind the coefficients."""
        code, out, _ = _run(
            capsys, 'branch', '--injection', 'preset:B1-in-A2', '--hw', 'fw:1,1', '--format', 'json',
        )
        table = json.loads(out)['anomalous']
        assert code == 0
        assert table['window'] == {'min_grade': '0', 'top_grade': '0'}
        assert sorted(
            (item['weight']['finite'][0], item['coefficient']) for item in table['coefficients']
        ) == [('-2', -1), ('-3', -1), ('1', 1), ('2', 1)]

    def test_weights_help_names_g2_labelling(self, capsys):
        """The weights help explains which G2 label is the adjoint."""
        with pytest.raises(SystemExit):
            main(['weights', '--help'])
        assert 'fw:1,0 is the 14-dimensional adjoint' in ' '.join(capsys.readouterr().out.split())

    def test_branch_json(self, capsys):
        """JSON classes carry fw labels."""
        code, out, _ = _run(
            capsys, 'branch', '--injection', 'preset:A2-in-G2', '--hw', 'fw:1,0', '--format', 'json',
        )
        data = json.loads(out)
        assert code == 0
        assert data['sub'] == 'A2'
        assert sorted(c['highest_weight']['fw'] for c in data['classes']) == [
            ['0', '1'], ['1', '0'], ['1', '1'],
        ]

    def test_singular_round_trip(self, capsys):
        """singular --format json re-ingests as the same element."""
        code, out, _ = _run(
            capsys, 'singular', '--algebra', 'A2^(1)', '--hw', 'fw:1,0,0', '--cutoff', '9', '--format', 'json',
        )
        assert code == 0
        element = SingularElement.from_dict(json.loads(out))
        assert len(element.series) == 54
        assert element.series.floor == -9

    def test_denominator_check(self, capsys):
        """Ψ^(0) matches the root product."""
        code, out, _ = _run(capsys, 'denominator-check', '--algebra', 'A2')
        assert code == 0
        assert 'agree' in out

    def test_denominator_check_json(self, capsys):
        """The JSON report lists no mismatches."""
        code, out, _ = _run(
            capsys, 'denominator-check', '--algebra', 'A2^(2)', '--cutoff', '4', '--format', 'json',
        )
        data = json.loads(out)
        assert code == 0
        assert data['agree'] is True
        assert data['mismatches'] == []

    def test_out_file(self, tmp_path, capsys):
        """--out writes the rendering to a file instead of stdout."""
        target = tmp_path / 'fan.json'
        code, out, _ = _run(
            capsys, 'fan', '--injection', 'preset:B1-in-A2', '--format', 'json', '--out', str(target),
        )
        assert code == 0
        assert out == ''
        assert json.loads(target.read_text(encoding='utf-8'))['s0'] == 1

    @pytest.mark.slow
    def test_affine_qseries(self, capsys):
        """Branching functions of the level-one vacuum module."""
        code, out, _ = _run(
            capsys, 'branch', '--injection', 'preset:A2_2-in-A2_1', '--hw', 'fw:1,0,0',
            '--cutoff', '10', '--format', 'qseries',
        )
        assert code == 0
        assert out.splitlines() == [
            'b[[1, 0]] = 1 + q^4 + 2q^6 + 3q^8 + 4q^10',
            'b[[0, 2]] = q + 2q^3 + 2q^5 + 4q^7 + 5q^9',
        ]


class TestExitCodes:
    """Errors map to exit codes and a one-line message."""

    def test_unsupported_algebra(self, capsys):
        """Unknown algebras exit with 3."""
        code, _, err = _run(capsys, 'weights', '--algebra', 'E8', '--hw', 'fw:1')
        assert code == 3
        assert err.startswith('pybranch: error:')

    def test_bad_weight(self, capsys):
        """A weight with the wrong coordinate count exits with 2."""
        code, _, _ = _run(capsys, 'weights', '--algebra', 'A2', '--hw', 'fw:1')
        assert code == 2

    def test_cutoff_above_limit(self, capsys):
        """Cutoffs beyond --max-cutoff exit with 2."""
        code, _, err = _run(
            capsys, 'singular', '--algebra', 'A2^(1)', '--hw', 'fw:1,0,0', '--cutoff', '8', '--max-cutoff', '5',
        )
        assert code == 2
        assert 'max_cutoff' in err

    def test_shallow_fan(self, capsys):
        """A fan shallower than the window exits with 4."""
        code, _, _ = _run(
            capsys, 'branch', '--injection', 'preset:A2_2-in-A2_1', '--hw', 'fw:1,0,0',
            '--cutoff', '3', '--fan-cutoff', '1',
        )
        assert code == 4

    def test_missing_hw(self, capsys):
        """Required fields are checked before running."""
        code, _, err = _run(capsys, 'branch', '--injection', 'preset:B1-in-A2')
        assert code == 2
        assert '--hw' in err
