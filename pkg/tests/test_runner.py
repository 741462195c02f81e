from __future__ import division, absolute_import, print_function

import json
import os

import pytest
import yaml

import dswitch

from dswitch.catalog import make, plant_site, gm_matrix
from dswitch.cli import main, EXIT_OK, EXIT_USAGE, EXIT_DOMAIN
from dswitch.graph import save_graph, load_graph
from dswitch.helper import dump_json
from dswitch.switching import load_scheme


def write_config(tmp_path, config):
    filename = str(tmp_path / 'config.yaml')
    with open(filename, 'w') as file:
        yaml.safe_dump(config, file)
    return filename


def run_cli(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def test_validate_report(design_file):
    report = dswitch.run('design', {'action': 'validate', 'file': design_file('fano')})
    assert report == {'command': 'design validate', 'status': 'ok',
                      'payload': {'r': 3, 'lambda': 1}}


def test_domain_error_report(tmp_path):
    report = dswitch.run('design', {'action': 'validate',
                                    'file': str(tmp_path / 'missing.json')})
    assert report['status'] == 'error'
    assert report['payload']['error'] == 'FormatError'


def test_missing_argument_is_reported():
    report = dswitch.run('scheme', {'action': 'inspect'})
    assert report['status'] == 'error'
    assert report['payload']['error'] == 'FormatError'


def test_unknown_command():
    with pytest.raises(ValueError):
        dswitch.run('bogus', {})


def test_reports_are_byte_identical(design_file):
    args = {'action': 'derive', 'design': design_file('ag22'), 'perm': '(1 6)(2 5)(3 4)'}
    assert dump_json(dswitch.run('scheme', args)) == dump_json(dswitch.run('scheme', args))


def test_command_overrides_from_config(tmp_path):
    config = write_config(tmp_path, {
        'catalog': {'ids': ['GM(4)', 'GM(6)']},
        '_catalog': {'catalog': {'ids': ['WQH(3)']}},
    })
    report = dswitch.run('catalog', {'action': 'list'}, config)
    assert [x['id'] for x in report['payload']['entries']] == ['WQH(3)']
    report = dswitch.run('catalog', {'action': 'list', 'ids': ['AH(6)']}, config)
    assert [x['id'] for x in report['payload']['entries']] == ['AH(6)']


def test_config_set_from_dict():
    ds = dswitch.DSwitch()
    ds.setConfig({'catalog': {'ids': ['AH(6)']}})
    report = ds.run('catalog', {'action': 'list'})
    assert [x['id'] for x in report['payload']['entries']] == ['AH(6)']


def test_report_written_to_output(tmp_path, design_file):
    output = str(tmp_path / 'reports' / 'fano.json')
    config = write_config(tmp_path, {'common': {'output': output}})
    report = dswitch.run('design', {'action': 'validate', 'file': design_file('fano')},
                         config)
    with open(output) as file:
        assert json.load(file) == report


def test_cli_validate(capsys, design_file):
    code, report = run_cli(capsys, ['design', 'validate', design_file('ah6')])
    assert code == EXIT_OK
    assert report['payload'] == {'r': 7, 'lambda': 3}


def test_cli_domain_error(capsys, tmp_path):
    code, report = run_cli(capsys, ['design', 'validate', str(tmp_path / 'nope.json')])
    assert code == EXIT_DOMAIN
    assert report['status'] == 'error'


def test_cli_usage_errors():
    for argv in ([], ['bogus'], ['design'], ['scheme', 'derive']):
        with pytest.raises(SystemExit) as e:
            main(argv)
        assert e.value.code == EXIT_USAGE


def test_cli_version(capsys):
    with pytest.raises(SystemExit) as e:
        main(['--version'])
    assert e.value.code == 0
    assert dswitch.__version__ in capsys.readouterr().out


def test_cli_closure(capsys, tmp_path, design_file):
    out = str(tmp_path / 'closed.json')
    code, report = run_cli(capsys, ['design', 'closure', design_file('fano'),
                                    '--add-empty-full', '--out', out])
    assert code == EXIT_OK
    assert report['payload']['b'] == 9
    code, report = run_cli(capsys, ['design', 'validate', out])
    assert report['payload'] == {'r': 4, 'lambda': 2}


def test_cli_derive(capsys, tmp_path, design_file):
    out = str(tmp_path / 'gm4.json')
    code, report = run_cli(capsys, ['scheme', 'derive', '--design', design_file('ag22'),
                                    '--perm', '(1 6)(2 5)(3 4)', '--out', out])
    assert code == EXIT_OK
    assert report['payload']['level'] == 2
    assert load_scheme(out).R == gm_matrix(4)
    code, report = run_cli(capsys, ['scheme', 'inspect', out])
    assert report['payload']['table_size'] == 8
    assert report['payload']['involution']


def test_cli_derive_reports_broken_intersections(capsys, design_file):
    code, report = run_cli(capsys, ['scheme', 'derive', '--design', design_file('gm6'),
                                    '--perm', '(1 2)'])
    assert code == EXIT_DOMAIN
    assert report['payload']['error'] == 'IntersectionNotPreserved'


def test_cli_scheme_queries(capsys):
    code, report = run_cli(capsys, ['scheme', 'compatible-vectors', 'GM(4)'])
    assert report['payload']['count'] == 8
    code, report = run_cli(capsys, ['scheme', 'compatible-ac', 'Prop51', '--up-to-symmetry'])
    assert report['payload']['count'] == 3
    code, report = run_cli(capsys, ['scheme', 'realizable', 'GM(4)'])
    assert (report['payload']['r'], report['payload']['lambda']) == (4, 2)


def test_cli_switch_and_verify(capsys, tmp_path):
    site = plant_site(14, make('WQH(3)'), seed=11, moving=True)
    graph = str(tmp_path / 'g.g6')
    switched = str(tmp_path / 's.g6')
    save_graph(site.graph, graph)
    members = ','.join(str(x) for x in site.members)
    code, report = run_cli(capsys, ['switch', 'verify', graph, 'WQH(3)', '--members', members])
    assert code == EXIT_OK
    assert report['payload']['ok']
    code, report = run_cli(capsys, ['switch', 'apply', graph, 'WQH(3)', '--members', members,
                                    '--out', switched])
    assert report['payload']['r_cospectral']
    assert report['payload']['changed_vertices'] > 0
    assert load_graph(switched) != site.graph
    code, report = run_cli(capsys, ['verify', 'rcospectral', graph, switched])
    assert report['payload'] == {'cospectral': True, 'complement_cospectral': True}


def test_cli_switch_rejects_bad_site(capsys, tmp_path):
    graph = str(tmp_path / 'g.json')
    with open(graph, 'w') as file:
        json.dump({'n': 5, 'edges': [[4, 0]]}, file)
    code, report = run_cli(capsys, ['switch', 'apply', graph, 'GM(4)',
                                    '--members', '0 1 2 3'])
    assert code == EXIT_DOMAIN
    assert report['payload']['error'] == 'SiteInvalid'
    assert report['payload']['witness']['vertex'] == 4


def test_cli_catalog(capsys):
    code, report = run_cli(capsys, ['catalog', 'get', 'GM(4,4)'])
    assert report['payload']['id'] == 'GM(4+4)'
    code, report = run_cli(capsys, ['catalog', 'check', 'GM(4)', 'Fano(4)', 'Cube'])
    assert code == EXIT_OK
    assert report['payload']['ok']
    rows = {x['id']: x for x in report['payload']['entries']}
    assert rows['Cube']['consistent'] is None
    assert rows['Fano(4)']['consistent']
    code, report = run_cli(capsys, ['catalog', 'get', 'Petersen'])
    assert code == EXIT_DOMAIN
    assert report['payload']['error'] == 'UnknownId'


def test_cli_classify(capsys, design_file):
    code, report = run_cli(capsys, ['classify', design_file('ag22'), '--reduce'])
    assert code == EXIT_OK
    payload = report['payload']
    assert payload['double_cosets'] == 2
    assert payload['reductions'][0]['reduced']


def test_cli_identities(capsys):
    code, report = run_cli(capsys, ['identities', '--c', '2', '3', '4'])
    assert code == EXIT_OK
    payload = report['payload']
    assert payload['ok']
    assert sorted(payload['counting']) == ['2', '3', '4']
    assert payload['gm64'] == {'r': 408, 'lambda': 204, 'blocks': 816}
    assert all(x['fixes_cycle'] for x in payload['singer'])


def test_cli_geometry(capsys, tmp_path):
    out = str(tmp_path / 'switched.g6')
    code, report = run_cli(capsys, ['geometry', 'qtriangular', '--out-switched', out])
    assert code == EXIT_OK
    payload = report['payload']
    assert payload['vertices'] == 35
    assert payload['cospectral'] and payload['complement_cospectral']
    assert not payload['collineation']
    assert payload['isomorphic'] is False
    assert len(payload['clique_witness']) == 4
    assert '4' not in payload['original_cliques']['sizes']
    assert os.path.isfile(out)


def test_cli_classify_design_option_and_budget(capsys, design_file):
    code, report = run_cli(capsys, ['classify', '--design', design_file('ag22'),
                                    '--budget', '100000000'])
    assert code == EXIT_OK
    assert report['payload']['double_cosets'] == 2
    code, report = run_cli(capsys, ['classify', '--design', design_file('ag22'),
                                    '--budget', '10'])
    assert code == EXIT_DOMAIN
    assert report['payload']['error'] == 'BudgetExceeded'


def test_cli_geometry_writes_output_directory(capsys, tmp_path):
    out = str(tmp_path / 'plane')
    code, report = run_cli(capsys, ['geometry', 'qtriangular', '--q', '2', '--n', '4',
                                    '--switch-plane', '0', '--perm', '(1 2)',
                                    '--out', out])
    assert code == EXIT_OK
    assert load_graph(os.path.join(out, 'switched.g6')).n == 35
    assert load_graph(os.path.join(out, 'original.g6')).n == 35
    with open(os.path.join(out, 'certificate.json')) as file:
        certificate = json.load(file)
    assert certificate == {
        'cospectral': True,
        'complement_cospectral': True,
        'clique_witness': report['payload']['clique_witness'],
    }
