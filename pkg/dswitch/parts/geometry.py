from __future__ import division, absolute_import, print_function

import os
import logging
import dswitch

from tabulate import tabulate

from dswitch.geometry import (ProjectiveSpace, q_triangular, switch_subplane,
                              max_clique_report, isomorphic)
from dswitch.graph import save_graph
from dswitch.helper import dump_json
from dswitch.switching import cospectral


class PartGeometry(dswitch.DSwitchPart):
    '''
    Switches J_q(n, 2) at a plane and certifies that the switched graph
    is cospectral but not isomorphic

    The certificate holds a maximal clique of size q + 2 of the switched
    graph, which the original graph does not have when the pencil
    permutation is not a collineation.

        Params:
        -------
        - q: Field order, 2 or 3
        - n: Vector space dimension
        - switch_plane: Index of the plane
        - perm: 1-based cycles on the point-pencils of the plane
        - out: Optional, directory receiving original.g6, switched.g6
          and certificate.json

        Config Example:
        ---------------
        "geometry": {
            "q": 2,
            "n": 4,
            "switch_plane": 0,
            "perm": "(1 2)"
        }
    '''

    COMMAND = 'geometry'

    def _qtriangular(self) -> dict:
        q = int(self.arg('q', 'geometry'))
        n = int(self.arg('n', 'geometry'))
        plane = int(self.arg('switch_plane', 'geometry', 0))
        perm = self.arg('perm', 'geometry', '(1 2)')
        graph = q_triangular(n, q)
        space = ProjectiveSpace(n, q)
        res = switch_subplane(space, plane, perm, graph)
        original, switched = res.original, res.switched
        cap = q + 2
        max_vertices = self.search('max_clique_vertices')
        before = max_clique_report(original, cap, max_vertices)
        after = max_clique_report(switched, cap, max_vertices)
        iso = None
        if graph.n <= self.search('max_iso_vertices'):
            iso = isomorphic(original, switched, self.search('max_iso_vertices'))
        for key, g in (('out_original', original), ('out_switched', switched)):
            if self.arg(key):
                save_graph(g, self.arg(key))
        certificate = {
            'cospectral': cospectral(original, switched),
            'complement_cospectral': cospectral(original.complement(),
                                                switched.complement()),
            'clique_witness': after.witnesses.get(cap),
        }
        out = self.arg('out')
        if out:
            os.makedirs(out, exist_ok=True)
            save_graph(original, os.path.join(out, 'original.g6'))
            save_graph(switched, os.path.join(out, 'switched.g6'))
            dump_json(certificate, os.path.join(out, 'certificate.json'))
        self.log('Maximal cliques\n{}'.format(tabulate(
            [[k, before.sizes.get(k, 0), after.sizes.get(k, 0)]
             for k in sorted(set(before.sizes) | set(after.sizes))],
            headers=['size', 'original', 'switched'], tablefmt='simple')),
            logging.INFO)
        return {
            'q': q,
            'n': n,
            'vertices': graph.n,
            'plane': plane,
            'perm': perm,
            'collineation': res.collineation,
            'original_cliques': before.to_json(),
            'switched_cliques': after.to_json(),
            'isomorphic': iso,
            **certificate,
        }
