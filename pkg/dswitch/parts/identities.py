from __future__ import division, absolute_import, print_function

import logging
import dswitch

from tabulate import tabulate

from dswitch.catalog import counting_identities, gm64_design
from dswitch.core import RatMatrix
from dswitch.designs import (DifferenceSet, cyclic_plane, line_orbit, oval_companion,
                             cycle_adjacency, singer_identity, gram_profile, validate)
from dswitch.switching import derive_R

# cyclic planes of order 2 and 3
DIFFERENCE_SETS = [(7, [1, 2, 4]), (13, [0, 1, 3, 9])]


class PartIdentities(dswitch.DSwitchPart):
    '''
    Reproduces the counting identities of the GM and WQH families, the
    GM(6+4) multiplicity design and the Singer cycle identity

        Config Example:
        ---------------
        "identities": {
            "c": [2, 3, 4, 5, 6]
        }
    '''

    COMMAND = 'identities'

    def _identities(self) -> dict:
        counting = {}
        for c in self.arg('c', 'identities', [2, 3, 4, 5, 6]):
            counting[str(c)] = counting_identities(int(c))
        D = gm64_design()
        params = validate(D)
        gm64 = {**params.to_json(), 'blocks': sum(D.mults)}
        singer = [self._singer(m, residues) for m, residues in DIFFERENCE_SETS]
        ok = (all(x['ok'] for x in counting.values())
              and (params.r, params.lambda_) == (408, 204)
              and all(x['identity'] and x['companion'] and x['fixes_cycle']
                      for x in singer))
        self.log('Counting identities\n{}'.format(tabulate(
            [[c, name, x['count'], x['formula']]
             for c, rec in counting.items()
             for name, x in rec.items() if isinstance(x, dict)],
            headers=['c', 'identity', 'count', 'formula'], tablefmt='simple')),
            logging.DEBUG)
        return {'counting': counting, 'gm64': gm64, 'singer': singer, 'ok': ok}

    def _singer(self, modulus: int, residues: list) -> dict:
        P = cyclic_plane(DifferenceSet(modulus, residues))
        lines = line_orbit(P, 0)
        companion = oval_companion(P, 0)
        scheme = derive_R(lines, companion)
        A = RatMatrix.from_rows(cycle_adjacency(modulus))
        return {
            'modulus': modulus,
            'residues': residues,
            'identity': singer_identity(P),
            'companion': gram_profile(lines, companion),
            'level': scheme.level,
            'fixes_cycle': scheme.R.T @ A @ scheme.R == A,
        }
