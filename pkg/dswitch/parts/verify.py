from __future__ import division, absolute_import, print_function

import dswitch

from dswitch.graph import load_graph
from dswitch.switching import cospectral


class PartVerify(dswitch.DSwitchPart):
    '''
    Compares the spectra of two graphs exactly

        Actions:
        --------
        - cospectral: equal characteristic polynomials
        - rcospectral: cospectral graphs with cospectral complements
    '''

    COMMAND = 'verify'

    def _graphs(self) -> tuple:
        return load_graph(self.require('graph1')), load_graph(self.require('graph2'))

    def _cospectral(self) -> dict:
        G1, G2 = self._graphs()
        return {'cospectral': cospectral(G1, G2)}

    def _rcospectral(self) -> dict:
        G1, G2 = self._graphs()
        res = cospectral(G1, G2)
        complement = cospectral(G1.complement(), G2.complement())
        self.log(f'Cospectral: {res}, complements cospectral: {complement}\n')
        return {'cospectral': res, 'complement_cospectral': complement}
