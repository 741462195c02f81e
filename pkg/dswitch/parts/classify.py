from __future__ import division, absolute_import, print_function

import logging
import dswitch

from tabulate import tabulate

from dswitch.catalog import default_basis
from dswitch.classify import classify_design, reduce_scheme
from dswitch.classify.reduce import MAX_REDUCE_V
from dswitch.designs import load_design
from dswitch.errors import BudgetExceeded
from dswitch.graph import Graph


class PartClassify(dswitch.DSwitchPart):
    '''
    Classifies the switching methods of a design by double cosets

        Params:
        -------
        - parallelism_only: Only parallelism preserving block permutations
        - with_ac: Count compatible A_C for every scheme
        - reduce: Try to factor every scheme into the reduction basis,
          with the empty graph as A_C
        - budget: Optional, double coset product budget, defaults to
          search.double_coset_budget

        Config Example:
        ---------------
        "classify": {
            "parallelism_only": false,
            "with_ac": true,
            "reduce": false
        },
        "search": {
            "max_group_elements": 1000000,
            "double_coset_budget": 100000000
        }
    '''

    COMMAND = 'classify'

    def _classify(self) -> dict:
        D = load_design(self.arg('design_path') or self.require('design'))
        res = classify_design(
            D, parallelism_only=bool(self.arg('parallelism_only', 'classify', False)),
            with_ac=bool(self.arg('with_ac', 'classify', False)),
            budget=self.arg('budget', default=self.search('double_coset_budget')),
            max_elements=self.search('max_group_elements'))
        self.log('Classification\n{}'.format(tabulate(
            [['|G|', res.G.order], ['|H|', res.H.order],
             ['double cosets', len(res.cosets)]],
            tablefmt='plain')), logging.INFO)
        payload = res.to_json()
        if self.arg('reduce', 'classify', False):
            payload['reductions'] = self._reduce(res.schemes)
        return payload

    def _reduce(self, schemes: list) -> list:
        basis = default_basis()
        res = []
        for rep, scheme, _ in schemes:
            if scheme.v > MAX_REDUCE_V:
                res.append({'perm': rep.cycles(), 'reduced': None, 'reason': 'size'})
                continue
            try:
                found = reduce_scheme(
                    scheme, Graph(scheme.v), basis,
                    max_factors=self.search('reduce_max_factors'),
                    budget=self.search('reduce_budget'))
            except BudgetExceeded:
                res.append({'perm': rep.cycles(), 'reduced': None, 'reason': 'budget'})
                continue
            res.append({'perm': rep.cycles(), **found.to_json()})
        self.log('Reductions\n{}'.format(tabulate(
            [[x['perm'], x['reduced'], x.get('reason', '')] for x in res],
            headers=['perm', 'reduced', 'reason'], tablefmt='simple')),
            logging.DEBUG)
        return res
