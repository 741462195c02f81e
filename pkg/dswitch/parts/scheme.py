from __future__ import division, absolute_import, print_function

import logging
import dswitch

from tabulate import tabulate

from dswitch.catalog import resolve_scheme
from dswitch.core import support_blocks, is_decomposable
from dswitch.designs import load_design
from dswitch.graph import emit_graph6
from dswitch.helper import parse_cycles, mask_to_points
from dswitch.switching import (SwitchingScheme, derive_R, derive_R_perm, save_scheme,
                               compatible_vectors, compatible_ac, design_realizable)


class PartScheme(dswitch.DSwitchPart):
    '''
    Derives switching schemes and reports their properties

    A scheme is referenced by a JSON file or by a catalog id.

        Actions:
        --------
        - derive: scheme of a design and a block permutation or a partner
          design paired by block index
        - inspect: level, support blocks and block table size
        - compatible-vectors: all 0/1 vectors with 0/1 image
        - compatible-ac: all induced subgraphs A_C mapped to graphs
        - realizable: design realizability with certificate

        Config Example:
        ---------------
        "search": {
            "max_compatible_v": 24,
            "max_ac_v": 10
        },
        "_scheme": {
            "common": {
                "threads": 4
            }
        }
    '''

    COMMAND = 'scheme'

    def _load(self) -> SwitchingScheme:
        return resolve_scheme(self.require('scheme'))

    def _derive(self) -> dict:
        D = load_design(self.require('design'))
        partner = self.arg('partner')
        if partner:
            scheme = derive_R(D, load_design(partner))
        else:
            pi = parse_cycles(self.arg('perm', default='()'), D.b)
            scheme = derive_R_perm(D, pi)
        out = self.arg('out')
        if out:
            save_scheme(scheme, out)
        self.log(f'Derived scheme of level {scheme.level} on {scheme.v} points\n')
        return {'level': scheme.level, 'scheme': scheme.to_json()}

    def _inspect(self) -> dict:
        scheme = self._load()
        blocks = [{'rows': rows, 'cols': cols} for rows, cols in support_blocks(scheme.R)]
        res = {
            'v': scheme.v,
            'level': scheme.level,
            'involution': scheme.is_involution(),
            'decomposable': is_decomposable(scheme.R),
            'support_blocks': blocks,
        }
        if scheme.v <= self.search('max_compatible_v'):
            res['table_size'] = len(scheme.block_table)
        self.log('Scheme\n{}'.format(tabulate(
            [[k, v] for k, v in res.items() if k != 'support_blocks'],
            tablefmt='plain')), logging.DEBUG)
        return res

    def _compatible_vectors(self) -> dict:
        scheme = self._load()
        pairs = compatible_vectors(scheme, max_v=self.search('max_compatible_v'))
        return {
            'count': len(pairs),
            'vectors': [{'chi': mask_to_points(chi), 'image': mask_to_points(image)}
                        for chi, image in pairs],
        }

    def _compatible_ac(self) -> dict:
        scheme = self._load()
        graphs = compatible_ac(
            scheme, up_to_symmetry=bool(self.arg('up_to_symmetry', default=False)),
            limit=self.arg('limit'), threads=self.arg('threads', 'common', 1),
            max_v=self.search('max_ac_v'))
        return {
            'count': len(graphs),
            'graphs': [emit_graph6(g).decode('ascii') for g in graphs],
        }

    def _realizable(self) -> dict:
        scheme = self._load()
        res = design_realizable(scheme, max_v=self.search('max_compatible_v'))
        self.log(f'Scheme realizable by a design: {res.feasible}\n')
        return res.to_json()
