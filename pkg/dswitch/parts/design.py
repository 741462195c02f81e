from __future__ import division, absolute_import, print_function

import dswitch

from dswitch.designs import load_design, save_design, validate, closure


class PartDesign(dswitch.DSwitchPart):
    '''
    Validates designs and builds their closure

        Actions:
        --------
        - validate: checks an (r, lambda)-design given as JSON file
        - closure: appends complements and the empty and full block

        Config Example:
        ---------------
        "_design": {
            "common": {
                "create_log": true
            }
        }
    '''

    COMMAND = 'design'

    def _validate(self) -> dict:
        D = load_design(self.require('file', 'design'))
        params = validate(D)
        self.log(f'Design with v={D.v}, b={D.b} is a {tuple(params)}-design\n')
        return params.to_json()

    def _closure(self) -> dict:
        D = load_design(self.require('file', 'design'))
        res = closure(D, add_empty_full=bool(self.arg('add_empty_full', 'design', False)),
                      add_complements=bool(self.arg('add_complements', 'design', False)))
        out = self.arg('out')
        if out:
            save_design(res, out)
        return {'design': res.to_json(), 'b': res.b}
