from __future__ import division, absolute_import, print_function

import logging
import dswitch

from tabulate import tabulate

from dswitch.catalog import make, list_ids, consistency_check, expected_level


class PartCatalog(dswitch.DSwitchPart):
    '''
    Lists, shows and checks the named switching methods

        Actions:
        --------
        - list: id, size and level of every entry
        - get: one entry with its scheme and source
        - check: level of every entry and agreement with its source

        Config Example:
        ---------------
        "catalog": {
            "ids": ["GM(4)", "WQH(3)", "Fano(4)"],
            "levels": true
        }
    '''

    COMMAND = 'catalog'

    def _ids(self) -> list:
        entry_id = self.arg('id')
        if entry_id:
            return [entry_id]
        return self.arg('ids', 'catalog') or list_ids()

    def _list(self) -> dict:
        rows = []
        for entry_id in self._ids():
            entry = make(entry_id)
            rows.append({'id': entry.id, 'v': entry.scheme.v, 'level': entry.level,
                         'source': entry.source is not None})
        self.log('Catalog\n{}'.format(tabulate(
            rows, headers='keys', tablefmt='simple')), logging.INFO)
        return {'entries': rows}

    def _get(self) -> dict:
        return make(self.require('id')).to_json()

    def _check(self) -> dict:
        levels = self.arg('levels', 'catalog', True)
        rows = []
        for entry_id in self._ids():
            entry = make(entry_id)
            row = {'id': entry.id, 'level': entry.level, 'consistent': None}
            if levels:
                expected = expected_level(entry.id)
                row['expected_level'] = expected
                row['level_ok'] = expected is None or expected == entry.level
            if entry.source is not None:
                row['consistent'] = consistency_check(entry)
            rows.append(row)
        ok = all(x.get('level_ok', True) and x['consistent'] is not False for x in rows)
        self.log('Catalog check\n{}'.format(tabulate(
            rows, headers='keys', tablefmt='simple')), logging.INFO)
        return {'entries': rows, 'ok': ok}
