import json

import pytest

from ucclab import ArgumentError
from ucclab.cli import CLOSURE_CAP_ENV, EXIT_NEGATIVE, EXIT_OK
from ucclab.cli import EXIT_RESOURCE, EXIT_USAGE, RunConfig, run
from ucclab.family import DEFAULT_CLOSURE_CAP
from ucclab.generators import GridSpec, generate
from ucclab.io.graph import load_graph

SHIFTED_LINES = ['2 4 7', '1 3 5', '1 2 4 6', '3 4 5 7', '1 4 5 6',
                 '2 5 6 7', '1 3 6 7']


def write_lines(path, lines):
    path.write_text(u'\n'.join(lines) + u'\n')
    return str(path)


class TestRunConfig:

    def test_environment_cap(self):
        config = RunConfig(environ={CLOSURE_CAP_ENV: '64'})
        assert config.closure_cap == 64

    def test_flag_beats_environment(self):
        config = RunConfig(closure_cap=8, environ={CLOSURE_CAP_ENV: '64'})
        assert config.closure_cap == 8

    def test_default_cap(self):
        assert RunConfig(environ={}).closure_cap == DEFAULT_CLOSURE_CAP

    def test_bad_environment_value(self):
        with pytest.raises(ArgumentError):
            RunConfig(environ={CLOSURE_CAP_ENV: 'lots'})

    def test_deterministic_forces_one_job(self):
        assert RunConfig(n_jobs=4, deterministic=True, environ={}).n_jobs == 1

    def test_nonpositive_cap(self):
        with pytest.raises(ArgumentError):
            RunConfig(vertex_cap=0, environ={})


class TestFamilyCommands:

    def test_translates_then_shift(self, tmp_path, capsys):
        translates = str(tmp_path / 'translates.txt')
        assert run(['family', 'translates', '--set', '1,2,4,7', '--n', '7',
                    '--anchor', '1', '--one-based', '--out', translates],
                   environ={}) == EXIT_OK
        assert run(['family', 'shift', '--in', translates, '--anchor', '1',
                    '--l', '3', '--m', '1'], environ={}) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == '# universe=7 one_based=true indexed=true'
        assert lines[1:] == SHIFTED_LINES

    def test_shift_from_json_record_then_full_verify(self, tmp_path, capsys):
        translates = str(tmp_path / 'translates.json')
        shifted = str(tmp_path / 'shifted.json')
        assert run(['family', 'translates', '--set', '1,2,4,7', '--n', '7',
                    '--anchor', '1', '--one-based', '--format', 'json',
                    '--out', translates], environ={}) == EXIT_OK
        assert run(['family', 'shift', '--in', translates, '--l', '3',
                    '--m', '1', '--format', 'json', '--out', shifted],
                   environ={}) == EXIT_OK
        capsys.readouterr()
        assert run(['family', 'verify', '--in', shifted, '--full',
                    '--format', 'json'], environ={}) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data['ucc']['holds'] is True
        assert data['full']['kind'] == 'shift'
        assert data['full']['automorphism'] is True
        assert data['full']['cardinalities'] == [3, 3, 4, 4, 4, 4, 4]

    def test_full_verify_without_record(self, tmp_path, capsys):
        path = write_lines(tmp_path / 'shifted.txt',
                           ['# universe=7 one_based=true indexed=true'] +
                           SHIFTED_LINES)
        assert run(['family', 'verify', '--in', path, '--full',
                    '--format', 'json'], environ={}) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data['full']['kind'] == 'generic'
        assert data['full']['swap_search']['status'] == 'found'
        assert data['full']['graph_ucc'] is True

    def test_verify_text_report(self, tmp_path, capsys):
        path = write_lines(tmp_path / 'family.txt', ['1', '2'])
        assert run(['family', 'verify', '--in', path], environ={}) == EXIT_OK
        out = capsys.readouterr().out
        assert 'holds: True' in out
        assert '[ucc]' in out

    def test_closure_cap_from_environment(self, tmp_path, capsys):
        path = write_lines(tmp_path / 'family.txt', ['1', '2'])
        assert run(['family', 'closure', '--in', path],
                   environ={CLOSURE_CAP_ENV: '2'}) == EXIT_RESOURCE
        assert 'closure_cap' in capsys.readouterr().err
        assert run(['family', 'closure', '--in', path, '--closure-cap', '10'],
                   environ={CLOSURE_CAP_ENV: '2'}) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[1:] == ['-', '1', '1 2', '2']

    def test_shift_needs_n_translates(self, capsys):
        assert run(['family', 'shift', '--set', '0,2', '--n', '4', '--l', '1'],
                   environ={}) == EXIT_USAGE

    def test_shift_with_unsuitable_index(self, capsys):
        assert run(['family', 'shift', '--set', '1,2,4', '--n', '7',
                    '--I', '0,1,2', '--q', '1,0,2', '--r', '2'],
                   environ={}) == EXIT_USAGE
        assert 'condition 2' in capsys.readouterr().err

    def test_missing_input_file(self, tmp_path, capsys):
        assert run(['family', 'verify', '--in', str(tmp_path / 'none.txt')],
                   environ={}) == EXIT_USAGE


class TestGraphCommands:

    def test_odd_cylinder(self, capsys):
        assert run(['graph', 'gen', '--kind', 'cylinder', '--m', '3',
                    '--n', '2'], environ={}) == EXIT_USAGE
        assert 'even' in capsys.readouterr().err

    def test_gen_edgelist(self, capsys):
        assert run(['graph', 'gen', '--kind', 'grid', '--m', '2', '--n', '2'],
                   environ={}) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[:3] == ['bipartite 2 2', 'x: (0,0) (1,1)',
                             'y: (0,1) (1,0)']
        assert len(lines) == 7

    def test_gen_json_by_extension(self, tmp_path):
        out = str(tmp_path / 'torus.json')
        assert run(['graph', 'gen', '--kind', 'torus', '--m', '4', '--n', '4',
                    '--out', out], environ={}) == EXIT_OK
        with open(out) as f:
            data = json.load(f)
        assert len(data['x']) == len(data['y']) == 8
        assert load_graph(out) == generate(GridSpec('torus', m=4, n=4))

    def test_swapmap(self, capsys):
        assert run(['graph', 'swapmap', '--kind', 'cylinder', '--m', '4',
                    '--n', '2', '--format', 'json'], environ={}) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data['map']['(0,0)'] == '(1,0)'

    def test_check_ucc_with_map(self, tmp_path, capsys):
        path = str(tmp_path / 'map.json')
        assert run(['graph', 'swapmap', '--kind', 'torus', '--m', '4',
                    '--n', '4', '--format', 'json', '--out', path],
                   environ={}) == EXIT_OK
        assert run(['graph', 'check-ucc', '--kind', 'torus', '--m', '4',
                    '--n', '4', '--map', path, '--format', 'json'],
                   environ={}) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data['holds'] is True
        assert data['membership_invariant'] is True
        assert len(data['rare_pair']) == 2

    def test_autosearch_on_star(self, tmp_path, capsys):
        path = write_lines(tmp_path / 'star.txt',
                           ['bipartite 1 2', 'x y1', 'x y2'])
        assert run(['graph', 'autosearch', '--in', path, '--format', 'json'],
                   environ={}) == EXIT_NEGATIVE
        data = json.loads(capsys.readouterr().out)
        assert data['status'] == 'class_sizes_differ'

    def test_mis(self, tmp_path, capsys):
        path = write_lines(tmp_path / 'path.txt',
                           ['bipartite 2 2', 'a b', 'c b', 'c d'])
        assert run(['graph', 'mis', '--in', path], environ={}) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == ['a c', 'a d', 'b d']

    def test_rare(self, capsys):
        assert run(['graph', 'rare', '--kind', 'crown', '--n', '3',
                    '--format', 'json'], environ={}) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data['x'] and data['y']

    def test_prop1(self, capsys):
        assert run(['check', 'prop1', '--kind', 'grid', '--m', '2', '--n', '2',
                    '--format', 'json'], environ={}) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data['agrees'] is True
        assert len(data['reports']) == 2


class TestUsage:

    def test_unknown_flag(self, capsys):
        assert run(['family', 'verify', '--bogus'], environ={}) == EXIT_USAGE

    def test_missing_command(self, capsys):
        assert run([], environ={}) == EXIT_USAGE

    def test_sweep_suitable(self, capsys):
        assert run(['sweep', 'suitable', '--max-n', '4', '--max-l', '2',
                    '--format', 'json'], environ={}) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data['passed'] is True
        assert data['instances'] == 4
