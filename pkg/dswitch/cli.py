'''
Command line front end of the dswitch runner

Every command prints its report as JSON with sorted keys. The exit code
is 0 on success, 2 if the command ended with a domain error (the report
is still printed) and 1 on usage errors.

    dswitch design validate demo/designs/fano.json
    dswitch scheme derive --design demo/designs/ag22.json --perm "(1 6)(2 5)(3 4)"
    dswitch verify rcospectral a.g6 b.g6
'''
from __future__ import division, absolute_import, print_function

import sys
import argparse

from . import DSwitch, STATUS_OK
from .helper import dump_json
from .version import __version__

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2


class ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f'{self.prog}: error: {message}\n')


def _flag(parser, name: str, help: str) -> None:
    # unset flags fall back to the config file
    parser.add_argument(name, action='store_true', default=None, help=help)


def _scheme_actions(sub) -> None:
    p = sub.add_parser('derive', help='scheme of a design and a block permutation')
    p.add_argument('--design', required=True, help='design JSON file')
    group = p.add_mutually_exclusive_group()
    group.add_argument('--perm', help='1-based block permutation, e.g. "(1 6)(2 5)"')
    group.add_argument('--partner', help='design JSON paired by block index')
    p.add_argument('--out', help='scheme JSON file to write')
    for name, text in (('inspect', 'level and support blocks'),
                       ('compatible-vectors', 'all 0/1 vectors with 0/1 image'),
                       ('compatible-ac', 'switching sets mapped to graphs'),
                       ('realizable', 'design realizability')):
        p = sub.add_parser(name, help=text)
        p.add_argument('scheme', help='scheme JSON file or catalog id')
        if name == 'compatible-ac':
            _flag(p, '--up-to-symmetry', 'one graph per orbit')
            p.add_argument('--limit', type=int, help='stop after this many graphs')


def _switch_actions(sub) -> None:
    for name, text in (('verify', 'check the switching conditions'),
                       ('apply', 'switch the graph')):
        p = sub.add_parser(name, help=text)
        p.add_argument('graph', help='graph6 or JSON graph file')
        p.add_argument('scheme', help='scheme JSON file or catalog id')
        p.add_argument('--members', required=True,
                       help='0-based site vertices in point order, e.g. "0,1,2,3"')
        _flag(p, '--strict', 'only blocks of the source design outside')
        if name == 'apply':
            p.add_argument('--out', help='graph file to write')


def create_parser() -> ArgumentParser:
    ap = ArgumentParser(prog='dswitch', description=__doc__,
                        formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument('--version', action='version', version=__version__)
    ap.add_argument('--config', help='YAML config file')
    ap.add_argument('--threads', type=int, help='worker processes for long searches')
    ap.add_argument('--seed', type=int, help='seed for random constructions')
    ap.add_argument('--output', help='report file, "-" for stdout')
    commands = ap.add_subparsers(dest='command', metavar='command')
    commands.required = True

    p = commands.add_parser('design', help='validate or close a design')
    sub = p.add_subparsers(dest='action', metavar='action')
    sub.required = True
    a = sub.add_parser('validate', help='(r, lambda) of a design')
    a.add_argument('file', help='design JSON file')
    a = sub.add_parser('closure', help='add complements and the trivial blocks')
    a.add_argument('file', help='design JSON file')
    _flag(a, '--add-empty-full', 'append the empty and the full block')
    _flag(a, '--add-complements', 'append the complements')
    a.add_argument('--out', help='design JSON file to write')

    p = commands.add_parser('scheme', help='derive and inspect schemes')
    sub = p.add_subparsers(dest='action', metavar='action')
    sub.required = True
    _scheme_actions(sub)

    p = commands.add_parser('switch', help='verify or apply a switch')
    sub = p.add_subparsers(dest='action', metavar='action')
    sub.required = True
    _switch_actions(sub)

    p = commands.add_parser('verify', help='compare spectra of two graphs')
    sub = p.add_subparsers(dest='action', metavar='action')
    sub.required = True
    for name in ('cospectral', 'rcospectral'):
        a = sub.add_parser(name)
        a.add_argument('graph1')
        a.add_argument('graph2')

    p = commands.add_parser('classify', help='double coset classification')
    p.add_argument('design_path', nargs='?', metavar='design', help='design JSON file')
    p.add_argument('--design', help='design JSON file')
    p.add_argument('--budget', type=int, help='double coset product budget')
    _flag(p, '--parallelism-only', 'only parallelism preserving permutations')
    _flag(p, '--with-ac', 'count compatible A_C per scheme')
    _flag(p, '--reduce', 'try to factor every scheme into the basis')

    p = commands.add_parser('catalog', help='named switching methods')
    sub = p.add_subparsers(dest='action', metavar='action')
    sub.required = True
    a = sub.add_parser('list')
    a.add_argument('ids', nargs='*')
    a = sub.add_parser('get')
    a.add_argument('id')
    a = sub.add_parser('check')
    a.add_argument('ids', nargs='*')

    p = commands.add_parser('geometry', help='q-triangular graphs')
    sub = p.add_subparsers(dest='action', metavar='action')
    sub.required = True
    a = sub.add_parser('qtriangular', help='switch J_q(n, 2) at a plane')
    a.add_argument('--q', type=int, choices=[2, 3])
    a.add_argument('--n', type=int)
    a.add_argument('--switch-plane', '--plane', dest='switch_plane', type=int)
    a.add_argument('--perm', help='1-based permutation of the point-pencils')
    a.add_argument('--out', help='directory for both graphs and the certificate')
    a.add_argument('--out-original')
    a.add_argument('--out-switched')

    p = commands.add_parser('identities', help='counting identities')
    p.add_argument('--c', type=int, nargs='+', help='part sizes, at least 2')
    return ap


def main(argv=None) -> int:
    '''
    Runs one command and prints its report
    '''
    ap = create_parser()
    ns = ap.parse_args(argv)
    args = {k: v for k, v in vars(ns).items()
            if k not in ('command', 'config') and v is not None}
    if args.get('ids') == []:
        del args['ids']
    ds = DSwitch()
    report = ds.run(ns.command, args, ns.config)
    if ds.config['common'].get('output', '-') == '-':
        print(dump_json(report))
    return EXIT_OK if report['status'] == STATUS_OK else EXIT_DOMAIN


if __name__ == '__main__':
    sys.exit(main())
