from __future__ import division, absolute_import, print_function

import logging
import dswitch

from dswitch.catalog import resolve_scheme
from dswitch.graph import load_graph, save_graph, emit_graph6
from dswitch.helper import parse_members
from dswitch.switching import SwitchSite, verify_site, apply_switch, r_cospectral


class PartSwitch(dswitch.DSwitchPart):
    '''
    Checks and applies a switch at a site of a graph

    The site is given by the graph (graph6 or JSON), the scheme (JSON
    file or catalog id) and the ordered member vertices, 0-based.

        Actions:
        --------
        - verify: checks both switching conditions
        - apply: switches the graph, optionally writes it to out

        Config Example:
        ---------------
        "switch": {
            "strict": false
        }
    '''

    COMMAND = 'switch'

    def _site(self) -> tuple:
        graph = load_graph(self.require('graph'))
        scheme = resolve_scheme(self.require('scheme'))
        members = parse_members(self.require('members'))
        return SwitchSite(graph, members), scheme

    def _verify(self) -> dict:
        site, scheme = self._site()
        report = verify_site(site, scheme, bool(self.arg('strict', 'switch', False)))
        if not report.ok:
            self.log(f'Site is not valid: {report.witness}\n', logging.WARNING)
        return report.to_json()

    def _apply(self) -> dict:
        site, scheme = self._site()
        switched = apply_switch(site, scheme, bool(self.arg('strict', 'switch', False)))
        out = self.arg('out')
        if out:
            save_graph(switched, out)
        changed = sum(1 for a, b in zip(site.graph.rows, switched.rows) if a != b)
        self.log(f'Switched graph differs in {changed} vertex neighbourhoods\n')
        return {
            'graph': emit_graph6(switched).decode('ascii'),
            'changed_vertices': changed,
            'r_cospectral': r_cospectral(site.graph, switched),
        }
